// Copyright 2026 The angcov Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "angcov/suppliers.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include "angcov/error.h"

namespace angcov {
namespace {

// Edmonds' blossom algorithm with BFS augmenting paths and base relabeling.
class BlossomMatcher {
 public:
  BlossomMatcher(int n, const std::vector<std::pair<int, int>>& edges)
      : n_(n), adj_(n), match_(n, -1), parent_(n), base_(n), used_(n),
        blossom_(n) {
    for (const auto& [u, v] : edges) {
      if (u == v) continue;
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
  }

  std::vector<int> Solve() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (int u = FindPath(v); u != -1;) {
        const int pv = parent_[u];
        const int ppv = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = ppv;
      }
    }
    return match_;
  }

 private:
  int Lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void MarkPath(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int FindPath(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int cur = Lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          MarkPath(v, cur, to);
          MarkPath(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (!blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = 1;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
};

}  // namespace

std::vector<int> SeparatedClients(const std::vector<Point2>& clients,
                                  double radius) {
  const double sep = kSqrt3 * radius;
  std::vector<int> kept;
  for (int v = 0; v < static_cast<int>(clients.size()); ++v) {
    bool far = true;
    for (int p : kept) {
      if (!(Dist(clients[v], clients[p]) > sep)) {
        far = false;
        break;
      }
    }
    if (far) kept.push_back(v);
  }
  return kept;
}

CoverageGraph BuildCoverageGraph(const std::vector<Point2>& suppliers,
                                 const std::vector<Point2>& clients,
                                 std::span<const int> members, double radius,
                                 int delta) {
  CoverageGraph cg;
  cg.members.assign(members.begin(), members.end());
  cg.sink = static_cast<int>(members.size());
  cg.graph.num_vertices = cg.sink + 1;
  cg.graph.b.assign(cg.graph.num_vertices, delta);
  cg.graph.b[cg.sink] = 0;
  for (int u = 0; u < static_cast<int>(suppliers.size()); ++u) {
    std::vector<int> reached;
    for (int i = 0; i < static_cast<int>(members.size()); ++i) {
      if (WithinDistance(Dist(suppliers[u], clients[members[i]]), radius)) {
        reached.push_back(i);
      }
    }
    if (reached.size() >= 3) {
      throw Error(ErrorCode::kThreeClientViolation,
                  "supplier " + std::to_string(u) +
                      " reaches three separated clients");
    }
    if (reached.empty()) continue;
    const int other = reached.size() == 2 ? reached[1] : cg.sink;
    cg.graph.edges.emplace_back(reached[0], other);
    cg.edge_supplier.push_back(u);
  }
  return cg;
}

std::vector<int> MaximumMatching(int num_vertices,
                                 const std::vector<std::pair<int, int>>& edges) {
  return BlossomMatcher(num_vertices, edges).Solve();
}

std::vector<int> MaxSimpleBMatching(const MultiGraph& g) {
  // Vertex v becomes b_v copies; edge e = (u, v) becomes a matched pair
  // x_e - y_e with x_e joined to u's copies and y_e to v's copies. A maximum
  // matching uses e in the b-matching iff both x_e and y_e go to copies.
  std::vector<int> first_copy(g.num_vertices + 1, 0);
  for (int v = 0; v < g.num_vertices; ++v) {
    first_copy[v + 1] = first_copy[v] + g.b[v];
  }
  const int copies = first_copy[g.num_vertices];
  const int m = static_cast<int>(g.edges.size());
  std::vector<std::pair<int, int>> gadget;
  for (int e = 0; e < m; ++e) {
    const int x = copies + 2 * e;
    const int y = x + 1;
    gadget.emplace_back(x, y);
    const auto [u, v] = g.edges[e];
    for (int c = first_copy[u]; c < first_copy[u + 1]; ++c) gadget.emplace_back(x, c);
    for (int c = first_copy[v]; c < first_copy[v + 1]; ++c) gadget.emplace_back(y, c);
  }
  const std::vector<int> mate = MaximumMatching(copies + 2 * m, gadget);
  std::vector<int> chosen;
  for (int e = 0; e < m; ++e) {
    const int x = copies + 2 * e;
    const int y = x + 1;
    if (mate[x] >= 0 && mate[x] < copies && mate[y] >= 0 && mate[y] < copies) {
      chosen.push_back(e);
    }
  }
  return chosen;
}

std::vector<int> MinBEdgeCover(const MultiGraph& g) {
  std::vector<int> degree(g.num_vertices, 0);
  for (const auto& [u, v] : g.edges) {
    ++degree[u];
    if (v != u) ++degree[v];
  }
  for (int v = 0; v < g.num_vertices; ++v) {
    if (degree[v] < g.b[v]) {
      throw Error(ErrorCode::kInfeasibleAtRadius,
                  "vertex " + std::to_string(v) + " has degree " +
                      std::to_string(degree[v]) + " < " +
                      std::to_string(g.b[v]));
    }
  }
  std::vector<int> cover = MaxSimpleBMatching(g);
  std::vector<char> used(g.edges.size(), 0);
  std::vector<int> have(g.num_vertices, 0);
  for (int e : cover) {
    used[e] = 1;
    ++have[g.edges[e].first];
    ++have[g.edges[e].second];
  }
  for (int v = 0; v < g.num_vertices; ++v) {
    for (int e = 0; e < static_cast<int>(g.edges.size()) && have[v] < g.b[v];
         ++e) {
      const auto [a, b] = g.edges[e];
      if (used[e] || (a != v && b != v)) continue;
      used[e] = 1;
      cover.push_back(e);
      ++have[a];
      ++have[b];
    }
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

SuppliersResult SolveFtSuppliers(const SupplierInstance& inst, double radius) {
  if (inst.delta < 1) throw Error(ErrorCode::kBadParams, "delta must be >= 1");
  if (!(radius >= 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::kBadParams, "radius must be finite and >= 0");
  }
  SuppliersResult out;
  out.radius = radius;
  out.cover_radius = (1.0 + kSqrt3) * radius;
  out.members = SeparatedClients(inst.clients, radius);
  const CoverageGraph cg = BuildCoverageGraph(inst.suppliers, inst.clients,
                                              out.members, radius, inst.delta);
  for (int e : MinBEdgeCover(cg.graph)) {
    out.selected.push_back(cg.edge_supplier[e]);
  }
  std::sort(out.selected.begin(), out.selected.end());
  out.anchor.assign(inst.clients.size(), -1);
  for (int v = 0; v < static_cast<int>(inst.clients.size()); ++v) {
    double best = std::numeric_limits<double>::infinity();
    for (int p : out.members) {
      const double d = Dist(inst.clients[v], inst.clients[p]);
      if (d < best) {
        best = d;
        out.anchor[v] = p;
      }
    }
  }
  return out;
}

double DeltaDistance(const SupplierInstance& inst, std::span<const int> selected,
                     int client) {
  if (static_cast<int>(selected.size()) < inst.delta) {
    return std::numeric_limits<double>::infinity();
  }
  std::vector<double> d;
  for (int u : selected) d.push_back(Dist(inst.suppliers[u], inst.clients[client]));
  std::nth_element(d.begin(), d.begin() + (inst.delta - 1), d.end());
  return d[inst.delta - 1];
}

bool DeltaCovered(const SupplierInstance& inst, std::span<const int> selected,
                  double radius) {
  for (int v = 0; v < static_cast<int>(inst.clients.size()); ++v) {
    if (!WithinDistance(DeltaDistance(inst, selected, v), radius)) return false;
  }
  return true;
}

RadiusSearchResult RadiusSearch(const SupplierInstance& inst, int k) {
  if (k < inst.delta) {
    throw Error(ErrorCode::kInfeasibleBudget, "budget k is below delta");
  }
  RadiusSearchResult out;
  if (inst.clients.empty()) return out;
  std::vector<double> candidates;
  for (Point2 u : inst.suppliers) {
    for (Point2 v : inst.clients) candidates.push_back(Dist(u, v));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  auto probe = [&](int i, SuppliersResult* sol) {
    ++out.probes;
    try {
      *sol = SolveFtSuppliers(inst, candidates[i]);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInfeasibleAtRadius) return false;
      throw;
    }
    return static_cast<int>(sol->selected.size()) <= k;
  };
  int hi = static_cast<int>(candidates.size()) - 1;
  if (hi < 0 || !probe(hi, &out.solution)) {
    throw Error(ErrorCode::kInfeasibleBudget,
                "no candidate radius admits " + std::to_string(k) +
                    " suppliers");
  }
  // Success holds on a suffix starting at or before the optimal radius, so
  // the search lands at or below it.
  int lo = -1;
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    SuppliersResult sol;
    if (probe(mid, &sol)) {
      hi = mid;
      out.solution = std::move(sol);
    } else {
      lo = mid;
    }
  }
  out.radius = candidates[hi];
  return out;
}

}  // namespace angcov
