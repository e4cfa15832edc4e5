// Copyright 2026 The projtri Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "projtri/oracle.hpp"

namespace projtri {

struct EquivalenceStats {
  std::size_t instances = 0;
  std::size_t disagreements = 0;
  /// Instances skipped because the float kernel is within tolerance of a
  /// sign change (float runs only).
  std::size_t skipped = 0;
  std::vector<std::string> examples;
};

/// Runs classify() against the cone oracle on a 5x5x5 grid of odd integer
/// query points for 20 fixed triangles, then on `random_instances` random
/// triangles, planes and queries (a third of them placed on an edge line or
/// at a vertex).
EquivalenceStats kernel_oracle_equivalence(std::size_t random_instances,
                                           std::uint64_t seed,
                                           Arithmetic mode = Arithmetic::exact);

struct SelftestOptions {
  std::size_t random_instances = 10000;
  std::size_t tiling_samples = 10000;
  std::uint64_t seed = 1;
};

struct SelftestResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<SelftestResult> run_selftest(const SelftestOptions& options = {});

}  // namespace projtri
