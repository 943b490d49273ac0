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

// Euclidean fault-tolerant k-suppliers: choose suppliers so that every client
// has delta of them nearby. At a radius guess R, a sqrt(3) R-separated client
// subset turns the problem into a minimum simple b-edge cover, solved
// exactly through maximum matching; all clients end up delta-covered within
// (1 + sqrt(3)) R.

#ifndef ANGCOV_SUPPLIERS_H_
#define ANGCOV_SUPPLIERS_H_

#include <span>
#include <utility>
#include <vector>

#include "angcov/geom.h"

namespace angcov {

struct SupplierInstance {
  std::vector<Point2> suppliers;
  std::vector<Point2> clients;
  int delta = 1;
};

inline constexpr double kSqrt3 = 1.7320508075688772;

// Greedy in id order: keep a client if it is farther than sqrt(3) R from
// every kept one.
std::vector<int> SeparatedClients(const std::vector<Point2>& clients,
                                  double radius);

// Undirected multigraph with per-vertex demands b.
struct MultiGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> b;
};

struct CoverageGraph {
  MultiGraph graph;              // vertex i < |P| is client P[i]; last = sink
  std::vector<int> members;      // P, client ids
  std::vector<int> edge_supplier;  // supplier id per edge
  int sink = 0;
};

// One edge per supplier within R of at least one member of P: between the
// two members it reaches, or to the sink (b = 0) if it reaches one. Throws
// kThreeClientViolation if a supplier reaches three members.
CoverageGraph BuildCoverageGraph(const std::vector<Point2>& suppliers,
                                 const std::vector<Point2>& clients,
                                 std::span<const int> members, double radius,
                                 int delta);

// Maximum cardinality matching in a general graph (Edmonds). Returns mate
// per vertex, -1 if unmatched.
std::vector<int> MaximumMatching(int num_vertices,
                                 const std::vector<std::pair<int, int>>& edges);

// Maximum simple b-matching (each edge used at most once) via the
// vertex-copy gadget. Returns sorted edge indices.
std::vector<int> MaxSimpleBMatching(const MultiGraph& g);

// Minimum simple b-edge cover: maximum b-matching, then for each deficient
// vertex its lowest-index unused incident edges. Throws kInfeasibleAtRadius
// if some vertex has degree < b.
std::vector<int> MinBEdgeCover(const MultiGraph& g);

struct SuppliersResult {
  std::vector<int> selected;   // supplier ids, sorted
  std::vector<int> members;    // P
  std::vector<int> anchor;     // per client: the P member it relies on
  double radius = 0.0;
  double cover_radius = 0.0;   // (1 + sqrt(3)) R
};

SuppliersResult SolveFtSuppliers(const SupplierInstance& inst, double radius);

// Distance from client v to its delta-th nearest selected supplier
// (+inf if fewer than delta are selected).
double DeltaDistance(const SupplierInstance& inst, std::span<const int> selected,
                     int client);

// True iff every client has delta selected suppliers within `radius`.
bool DeltaCovered(const SupplierInstance& inst, std::span<const int> selected,
                  double radius);

struct RadiusSearchResult {
  double radius = 0.0;
  SuppliersResult solution;
  int probes = 0;
};

// Binary search over the sorted distinct supplier-client distances for the
// smallest candidate at which SolveFtSuppliers succeeds with at most k
// suppliers. Throws kInfeasibleBudget if none does.
RadiusSearchResult RadiusSearch(const SupplierInstance& inst, int k);

}  // namespace angcov

#endif  // ANGCOV_SUPPLIERS_H_
