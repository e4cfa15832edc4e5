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
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "projtri/arithmetic.hpp"
#include "projtri/seed.hpp"
#include "projtri/triangulation.hpp"

namespace projtri {

enum class SeedStrategy { linecover, exhaustive };

std::string_view to_string(SeedStrategy s);
SeedStrategy seed_strategy_from_string(std::string_view text);
/// Parses a comma separated strategy list such as "linecover,exhaustive".
std::vector<SeedStrategy> parse_seed_strategies(std::string_view text);

struct PipelineConfig {
  Arithmetic arithmetic = Arithmetic::exact;
  double tolerance = 1e-12;
  std::vector<SeedStrategy> seed_strategies{SeedStrategy::linecover,
                                            SeedStrategy::exhaustive};
  /// Insertion order is shuffled with this seed when set.
  std::optional<std::uint64_t> shuffle;
  /// Seed of the sphere tiling sampler.
  std::uint64_t sample_seed = 1;
  std::size_t tiling_samples = 10000;
  ValidationLevel validation = ValidationLevel::full;
  /// Runs the fast checks after every insertion.
  bool check_each_insertion = false;

  /// Throws InvalidArgument on a bad combination.
  void check() const;
};

struct PointSetDocument {
  std::vector<Vec3<Rational>> points;
  std::vector<std::string> labels;
};

struct TriangulationDocument {
  Arithmetic arithmetic = Arithmetic::exact;
  /// Canonical coordinates, first nonzero entry 1 (exact) or of magnitude 1.
  std::vector<Vec3<Rational>> vertices;
  std::vector<bool> pseudo;
  /// Input index each vertex came from, -1 when none.
  std::vector<std::int64_t> sources;
  std::vector<std::string> labels;
  /// Each triple sorted; the list sorted lexicographically.
  std::vector<std::array<std::size_t, 3>> faces;
  /// planes[i] belongs to faces[i].
  std::vector<Vec3<Rational>> planes;

  std::optional<PipelineConfig> config;
  std::optional<ValidationReport> validation;
  std::vector<std::string> warnings;
  /// Groups of input indices that denote one point; the first is kept.
  std::vector<std::vector<std::size_t>> merged_duplicates;
  std::optional<SeedSet> seed;
  std::optional<CanonicalSet> canonical;

  std::size_t edge_count() const;
};

PointSetDocument parse_point_set(const std::string& text);
PointSetDocument read_point_set(const std::filesystem::path& path);
std::string to_json(const PointSetDocument& doc);

std::string to_json(const TriangulationDocument& doc);
TriangulationDocument parse_triangulation(const std::string& text);
TriangulationDocument read_triangulation(const std::filesystem::path& path);

void write_text(const std::filesystem::path& path, const std::string& text);

/// Full pipeline: seed search, six-point triangulation, then one insertion
/// per remaining point.
TriangulationDocument triangulate(const PointSetDocument& points,
                                  const PipelineConfig& config = {});

/// Turns a triangulation into a document with the given metadata.
template <Kernel K>
TriangulationDocument make_document(const Triangulation<K>& tri);

/// Rebuilds the stored structure and runs the checks. Malformed faces and
/// missing planes show up as failed checks, not as exceptions.
ValidationReport validate_document(const TriangulationDocument& doc,
                                   const ValidationOptions& options = {});

struct RenderOptions {
  int size = 800;
  ValidationOptions validation{};
};

/// Upper hemisphere seen from above; edges as great circle arcs.
std::string render_svg(const TriangulationDocument& doc,
                       const RenderOptions& options = {});

/// Wavefront OBJ with vertices on the upper unit hemisphere. The mesh is
/// topology only.
std::string to_obj(const TriangulationDocument& doc);

}  // namespace projtri
