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

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "projtri/triangulation.hpp"

namespace projtri {

/// Six indices into a point list, no three of the points collinear.
using SeedSet = std::array<std::size_t, 6>;

/// Four points with no three collinear plus two points lying in regions of
/// different pseudo-points of the initial triangulation built on the four.
struct CanonicalSet {
  std::array<std::size_t, 4> quad;
  std::array<std::size_t, 2> extras;
};

/// Pseudo-point vertex id to the faces of its region.
using RegionMap = std::map<VertexId, std::vector<FaceId>>;

template <Kernel K>
struct InitialTriangulation {
  Triangulation<K> tri;
  std::array<VertexId, 4> quad;
  std::array<VertexId, 3> pseudo;
  /// pseudo[i] is the meet of the lines through quad corners
  /// lines[i][0] and lines[i][1] (local corner indices 0..3).
  std::array<std::array<std::array<int, 2>, 2>, 3> lines;
  RegionMap regions;
};

/// Greedy growth from one starting point, scanning the rest in order.
template <Kernel K>
std::optional<SeedSet> grow_seed(const std::vector<ProjectivePoint<K>>& points,
                                 std::size_t start, const K& k = K{});

/// Greedy growth from every starting point in turn.
template <Kernel K>
SeedSet find_seed_exhaustive(const std::vector<ProjectivePoint<K>>& points,
                             const K& k = K{});

template <Kernel K>
SeedSet find_seed_linecover(const std::vector<ProjectivePoint<K>>& points,
                            const K& k = K{});

/// Returns true if no three of the points are collinear and none coincide.
template <Kernel K>
bool in_general_position(const std::vector<ProjectivePoint<K>>& points,
                         const K& k = K{});

/// Seven-vertex triangulation on four points and the three diagonal
/// points of their quadrangle.
template <Kernel K>
InitialTriangulation<K> build_initial(
    const std::array<ProjectivePoint<K>, 4>& quad,
    const std::array<std::int64_t, 4>& sources = {0, 1, 2, 3},
    const K& k = K{});

/// The pseudo-point whose region contains p, or nullopt when p lies on the
/// boundary between two regions.
template <Kernel K>
std::optional<VertexId> region_of(const InitialTriangulation<K>& init,
                                  const ProjectivePoint<K>& p);

template <Kernel K>
CanonicalSet find_canonical(const std::vector<ProjectivePoint<K>>& points,
                            const SeedSet& seed, const K& k = K{});

/// Six-vertex triangulation without pseudo-points. Vertex sources are the
/// indices into `points`.
template <Kernel K>
Triangulation<K> build_canonical(const std::vector<ProjectivePoint<K>>& points,
                                 const CanonicalSet& cs, const K& k = K{});

}  // namespace projtri
