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

// JSON instance and solution files.
//
// Instance layout:
//   {"format": "angcov-instance", "version": 1, "variant": "angdist",
//    "alpha": 1.047..., "delta": 2, "radius": 3.0,
//    "sensors": [[x, y], ...], "targets": [[x, y], ...],
//    "polygon": {"outer": [[x, y], ...], "holes": [[[x, y], ...]]},
//    "region": {...}, "seed": 7, "generator": "uniform"}
// "radius", "polygon", "region", "seed" and "generator" are optional.

#ifndef ANGCOV_INSTANCE_IO_H_
#define ANGCOV_INSTANCE_IO_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "angcov/coverage.h"
#include "angcov/suppliers.h"

namespace angcov {

inline constexpr int kFormatVersion = 1;

struct InstanceFile {
  Instance instance;
  std::uint64_t seed = 0;
  std::string generator;
};

// Stable, human-readable text; doubles round-trip exactly.
std::string SerializeInstance(const InstanceFile& file);
// Throws kBadParams on malformed input.
InstanceFile ParseInstance(std::string_view text);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view text);

std::string SerializeSolution(const Instance& inst, const Solution& sol);
std::string SerializeSuppliers(const SupplierInstance& inst,
                               const SuppliersResult& result,
                               double search_radius, int budget);
// Reads "selected" from a solution file.
std::vector<SensorId> ParseSelected(std::string_view text);

// Suppliers = sensors, clients = targets, fault tolerance = delta (integer).
SupplierInstance ToSupplierInstance(const Instance& inst);

}  // namespace angcov

#endif  // ANGCOV_INSTANCE_IO_H_
