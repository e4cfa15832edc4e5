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
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "projtri/oracle.hpp"
#include "projtri/projective.hpp"

namespace projtri {

enum class VertexId : std::uint32_t {};
enum class EdgeId : std::uint32_t {};
enum class FaceId : std::uint32_t {};

inline constexpr VertexId kNoVertex{std::numeric_limits<std::uint32_t>::max()};
inline constexpr EdgeId kNoEdge{std::numeric_limits<std::uint32_t>::max()};
inline constexpr FaceId kNoFace{std::numeric_limits<std::uint32_t>::max()};

constexpr std::size_t index(VertexId id) { return static_cast<std::size_t>(id); }
constexpr std::size_t index(EdgeId id) { return static_cast<std::size_t>(id); }
constexpr std::size_t index(FaceId id) { return static_cast<std::size_t>(id); }

/// Result of walking towards a point.
struct WalkTrace {
  enum class Status { found, on_edge, on_vertex };
  Status status = Status::found;
  FaceId face = kNoFace;
  EdgeId edge = kNoEdge;
  VertexId vertex = kNoVertex;
  /// Faces crossed by the final (successful) walk, in order.
  std::vector<FaceId> visited;
  /// Walks abandoned because the line hit a vertex or ran along an edge.
  std::size_t restarts = 0;
};

enum class ValidationLevel { off, fast, full };

std::string_view to_string(ValidationLevel level);
ValidationLevel validation_level_from_string(std::string_view text);

struct ValidationOptions {
  ValidationLevel level = ValidationLevel::full;
  std::size_t tiling_samples = 10000;
  std::uint64_t seed = 1;
  double tau = 1e-12;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  /// Offending vertex, edge or face ids, depending on the check.
  std::vector<std::size_t> counterexamples;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  long euler_characteristic = 0;

  bool ok() const;
  const CheckResult* find(std::string_view name) const;
};

/// A triangulation of the projective plane stored as an unoriented
/// vertex / edge / face incidence structure. Faces keep their vertex triple,
/// their three edges and a distinguishing plane; edges keep their incident
/// faces. No half-edge orientation is stored since P^2 admits none.
///
/// Ids stay stable: removed elements are tombstoned, not reused.
template <Kernel K>
class Triangulation {
 public:
  using Coord = typename K::Coord;
  using Point = ProjectivePoint<K>;
  using Plane = DistinguishingPlane<K>;

  struct Vertex {
    Point point;
    bool is_pseudo = false;
    /// Index of the input point this vertex came from, -1 for pseudo-points.
    std::int64_t source = -1;
    FaceId anchor = kNoFace;
    bool alive = true;
  };

  struct Edge {
    std::array<VertexId, 2> ends;
    std::vector<FaceId> faces;
    bool alive = true;
  };

  struct Face {
    std::array<VertexId, 3> v;
    /// e[i] joins v[i] and v[(i + 1) % 3].
    std::array<EdgeId, 3> e;
    std::optional<Plane> plane;
    std::optional<TriangleFrame<K>> frame;
    bool alive = true;
  };

  /// One face of the fan around a vertex c: the face (c, from, to).
  struct StarEntry {
    FaceId face;
    VertexId from;
    VertexId to;
  };

  struct SplitResult {
    VertexId vertex;
    std::vector<FaceId> faces;
  };

  explicit Triangulation(K kernel = K{}) : kernel_(kernel) {}

  const K& kernel() const { return kernel_; }

  // Low-level construction. Callers are responsible for geometry.
  VertexId add_vertex(Point p, bool is_pseudo = false, std::int64_t source = -1);
  FaceId add_face(VertexId a, VertexId b, VertexId c, std::optional<Plane> plane);
  void remove_face(FaceId f);
  /// Removes a vertex that no longer has incident faces.
  void remove_vertex(VertexId v);
  /// Records a face that could not be stored (repeated vertices); it makes
  /// the simple-graph check fail.
  void record_malformed_face(std::array<std::size_t, 3> vertices);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t face_count() const { return face_count_; }
  long euler_characteristic() const {
    return static_cast<long>(vertex_count_) - static_cast<long>(edge_count_) +
           static_cast<long>(face_count_);
  }

  const Vertex& vertex(VertexId v) const { return vertices_[index(v)]; }
  const Edge& edge(EdgeId e) const { return edges_[index(e)]; }
  const Face& face(FaceId f) const { return faces_[index(f)]; }

  std::vector<VertexId> vertex_ids() const;
  std::vector<EdgeId> edge_ids() const;
  std::vector<FaceId> face_ids() const;
  std::size_t vertex_capacity() const { return vertices_.size(); }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  /// The face across edge e from f, or kNoFace.
  FaceId other_face(EdgeId e, FaceId f) const;
  /// The face across the edge (v[i], v[i+1]) of f.
  FaceId neighbor(FaceId f, int i) const;
  int local_index(FaceId f, VertexId v) const;
  int local_edge(FaceId f, EdgeId e) const;

  /// Representatives of the face's vertices on the positive side of its
  /// plane: the spherical copy the face denotes.
  std::array<Vec3<Coord>, 3> representatives(FaceId f) const;

  Classification classify(FaceId f, const Point& p) const;
  Classification classify(FaceId f, const Vec3<Coord>& p) const;

  /// Faces around v in cyclic order. Throws if the fan is not closed.
  std::vector<StarEntry> star(VertexId v) const;

  /// Walks from `start` along the line joining it to p until the face,
  /// edge or vertex containing p is reached. Restarts from other vertices
  /// when the line meets a vertex or runs along an edge.
  WalkTrace locate(const Point& p, VertexId start) const;

  /// Replaces face f by three faces around the new vertex p; all three keep
  /// f's plane.
  SplitResult split_face(FaceId f, const Point& p, std::int64_t source = -1);

  /// Inserts p in the interior of edge e, splitting both incident faces.
  SplitResult split_edge(EdgeId e, const Point& p, std::int64_t source = -1);

  /// Replaces edge e by the other diagonal of its quadrilateral. Returns
  /// the new edge.
  EdgeId flip_edge(EdgeId e);

  /// Deletes pseudo-vertex v and its edges and joins p to every vertex of
  /// the region (v's fan) boundary.
  VertexId replace_pseudo_star(VertexId v, const Point& p,
                               std::int64_t source = -1);

  /// Deletes pseudo-vertex v whose fan is a quadrilateral with opposite
  /// corners a and b, and adds the diagonal ab in its place.
  void dissolve_pseudo_vertex(VertexId v, VertexId a, VertexId b);

  ValidationReport validate(const ValidationOptions& options = {}) const;

  /// Exact cones of all faces, for the tiling oracle.
  std::vector<oracle::FaceCone> face_cones() const;

 private:
  struct GluedFan {
    std::vector<StarEntry> fan;
    Vec3<Coord> center;
    /// Boundary representatives, boundary[i] for fan[i].from.
    std::vector<Vec3<Coord>> boundary;
  };

  static std::uint64_t edge_key(VertexId a, VertexId b);
  EdgeId ensure_edge(VertexId a, VertexId b);
  /// `v` with sign flipped so it equals `ref` (which must be +-v).
  static int sign_to_match(const Vec3<Coord>& v, const Vec3<Coord>& ref);
  GluedFan glue_fan(VertexId v) const;
  std::optional<WalkTrace> walk_from(VertexId t, const Point& p,
                                     std::vector<FaceId>& visited) const;
  FaceId any_face_of(VertexId v) const;

  K kernel_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::unordered_map<std::uint64_t, EdgeId> edge_index_;
  std::vector<std::array<std::size_t, 3>> malformed_;
  std::size_t vertex_count_ = 0;
  std::size_t edge_count_ = 0;
  std::size_t face_count_ = 0;
};

extern template class Triangulation<ExactKernel>;
extern template class Triangulation<FloatKernel>;

}  // namespace projtri
