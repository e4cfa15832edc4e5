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

#include "projtri/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace projtri {

std::string_view to_string(ValidationLevel level) {
  switch (level) {
    case ValidationLevel::off: return "off";
    case ValidationLevel::fast: return "fast";
    case ValidationLevel::full: return "full";
  }
  return "?";
}

ValidationLevel validation_level_from_string(std::string_view text) {
  if (text == "off") return ValidationLevel::off;
  if (text == "fast") return ValidationLevel::fast;
  if (text == "full") return ValidationLevel::full;
  throw Error(ErrorKind::invalid_argument,
              "unknown validation level '" + std::string(text) + "'");
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

const CheckResult* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

template <Kernel K>
std::uint64_t Triangulation<K>::edge_key(VertexId a, VertexId b) {
  auto lo = static_cast<std::uint64_t>(std::min(index(a), index(b)));
  auto hi = static_cast<std::uint64_t>(std::max(index(a), index(b)));
  return (lo << 32) | hi;
}

template <Kernel K>
VertexId Triangulation<K>::add_vertex(Point p, bool is_pseudo,
                                      std::int64_t source) {
  vertices_.push_back(Vertex{std::move(p), is_pseudo, source, kNoFace, true});
  ++vertex_count_;
  return VertexId(static_cast<std::uint32_t>(vertices_.size() - 1));
}

template <Kernel K>
EdgeId Triangulation<K>::ensure_edge(VertexId a, VertexId b) {
  const std::uint64_t key = edge_key(a, b);
  if (auto it = edge_index_.find(key); it != edge_index_.end()) {
    return it->second;
  }
  edges_.push_back(Edge{{a, b}, {}, true});
  auto id = EdgeId(static_cast<std::uint32_t>(edges_.size() - 1));
  edge_index_.emplace(key, id);
  ++edge_count_;
  return id;
}

template <Kernel K>
FaceId Triangulation<K>::add_face(VertexId a, VertexId b, VertexId c,
                                  std::optional<Plane> plane) {
  if (a == b || b == c || a == c) {
    throw Error(ErrorKind::invalid_argument, "face with repeated vertex");
  }
  for (VertexId v : {a, b, c}) {
    if (index(v) >= vertices_.size() || !vertices_[index(v)].alive) {
      throw Error(ErrorKind::invalid_argument, "face references a dead vertex");
    }
  }
  auto id = FaceId(static_cast<std::uint32_t>(faces_.size()));
  Face f{{a, b, c},
         {ensure_edge(a, b), ensure_edge(b, c), ensure_edge(c, a)},
         plane,
         std::nullopt,
         true};
  if (plane) {
    f.frame.emplace(vertex(a).point, vertex(b).point, vertex(c).point, *plane,
                    kernel_);
  }
  for (EdgeId e : f.e) edges_[index(e)].faces.push_back(id);
  for (VertexId v : f.v) vertices_[index(v)].anchor = id;
  faces_.push_back(std::move(f));
  ++face_count_;
  return id;
}

template <Kernel K>
void Triangulation<K>::remove_face(FaceId f) {
  Face& face = faces_[index(f)];
  if (!face.alive) return;
  face.alive = false;
  face.frame.reset();
  for (EdgeId e : face.e) {
    Edge& edge = edges_[index(e)];
    std::erase(edge.faces, f);
    if (edge.faces.empty() && edge.alive) {
      edge.alive = false;
      edge_index_.erase(edge_key(edge.ends[0], edge.ends[1]));
      --edge_count_;
    }
  }
  for (VertexId v : face.v) {
    if (vertices_[index(v)].anchor == f) vertices_[index(v)].anchor = kNoFace;
  }
  --face_count_;
}

template <Kernel K>
void Triangulation<K>::remove_vertex(VertexId v) {
  Vertex& vx = vertices_[index(v)];
  if (!vx.alive) return;
  vx.alive = false;
  vx.anchor = kNoFace;
  --vertex_count_;
}

template <Kernel K>
void Triangulation<K>::record_malformed_face(std::array<std::size_t, 3> v) {
  malformed_.push_back(v);
}

template <Kernel K>
std::vector<VertexId> Triangulation<K>::vertex_ids() const {
  std::vector<VertexId> out;
  out.reserve(vertex_count_);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].alive) out.push_back(VertexId(static_cast<std::uint32_t>(i)));
  }
  return out;
}

template <Kernel K>
std::vector<EdgeId> Triangulation<K>::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].alive) out.push_back(EdgeId(static_cast<std::uint32_t>(i)));
  }
  return out;
}

template <Kernel K>
std::vector<FaceId> Triangulation<K>::face_ids() const {
  std::vector<FaceId> out;
  out.reserve(face_count_);
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (faces_[i].alive) out.push_back(FaceId(static_cast<std::uint32_t>(i)));
  }
  return out;
}

template <Kernel K>
std::optional<EdgeId> Triangulation<K>::find_edge(VertexId a,
                                                  VertexId b) const {
  if (auto it = edge_index_.find(edge_key(a, b)); it != edge_index_.end()) {
    return it->second;
  }
  return std::nullopt;
}

template <Kernel K>
FaceId Triangulation<K>::other_face(EdgeId e, FaceId f) const {
  for (FaceId g : edges_[index(e)].faces) {
    if (g != f) return g;
  }
  return kNoFace;
}

template <Kernel K>
FaceId Triangulation<K>::neighbor(FaceId f, int i) const {
  return other_face(face(f).e[i], f);
}

template <Kernel K>
int Triangulation<K>::local_index(FaceId f, VertexId v) const {
  const Face& face = faces_[index(f)];
  for (int i = 0; i < 3; ++i) {
    if (face.v[i] == v) return i;
  }
  return -1;
}

template <Kernel K>
int Triangulation<K>::local_edge(FaceId f, EdgeId e) const {
  const Face& face = faces_[index(f)];
  for (int i = 0; i < 3; ++i) {
    if (face.e[i] == e) return i;
  }
  return -1;
}

template <Kernel K>
auto Triangulation<K>::representatives(FaceId f) const
    -> std::array<Vec3<Coord>, 3> {
  const Face& face = faces_[index(f)];
  if (!face.plane) {
    throw Error(ErrorKind::invalid_argument, "face has no distinguishing plane");
  }
  std::array<Vec3<Coord>, 3> reps;
  for (int i = 0; i < 3; ++i) {
    reps[i] = face.plane->lift(vertex(face.v[i]).point.coords(), kernel_);
  }
  return reps;
}

template <Kernel K>
Classification Triangulation<K>::classify(FaceId f, const Point& p) const {
  return classify(f, p.coords());
}

template <Kernel K>
Classification Triangulation<K>::classify(FaceId f,
                                          const Vec3<Coord>& p) const {
  const Face& face = faces_[index(f)];
  if (!face.frame) {
    throw Error(ErrorKind::invalid_argument, "face has no distinguishing plane");
  }
  return face.frame->classify(p);
}

template <Kernel K>
FaceId Triangulation<K>::any_face_of(VertexId v) const {
  FaceId anchor = vertices_[index(v)].anchor;
  if (anchor != kNoFace && faces_[index(anchor)].alive &&
      local_index(anchor, v) >= 0) {
    return anchor;
  }
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    auto f = FaceId(static_cast<std::uint32_t>(i));
    if (faces_[i].alive && local_index(f, v) >= 0) return f;
  }
  return kNoFace;
}

template <Kernel K>
auto Triangulation<K>::star(VertexId v) const -> std::vector<StarEntry> {
  const FaceId first = any_face_of(v);
  if (first == kNoFace) {
    throw Error(ErrorKind::invalid_argument, "vertex has no incident face");
  }
  const Face& f0 = face(first);
  const int i = local_index(first, v);
  std::vector<StarEntry> fan{{first, f0.v[(i + 1) % 3], f0.v[(i + 2) % 3]}};
  FaceId current = first;
  VertexId pivot = fan.front().to;
  for (std::size_t guard = 0; guard <= face_count_; ++guard) {
    auto e = find_edge(v, pivot);
    if (!e) throw Error(ErrorKind::invalid_argument, "missing fan edge");
    FaceId next = other_face(*e, current);
    if (next == kNoFace) {
      throw Error(ErrorKind::invalid_argument, "fan around vertex is open");
    }
    if (next == first) {
      if (pivot != fan.front().from) break;
      return fan;
    }
    const Face& g = face(next);
    VertexId third = kNoVertex;
    for (VertexId w : g.v) {
      if (w != v && w != pivot) third = w;
    }
    fan.push_back({next, pivot, third});
    current = next;
    pivot = third;
  }
  throw Error(ErrorKind::invalid_argument, "fan around vertex does not close");
}

template <Kernel K>
int Triangulation<K>::sign_to_match(const Vec3<Coord>& v,
                                    const Vec3<Coord>& ref) {
  if (v == ref) return 1;
  if (negated(v) == ref) return -1;
  throw Error(ErrorKind::invalid_argument, "representatives of different points");
}

template <Kernel K>
auto Triangulation<K>::glue_fan(VertexId v) const -> GluedFan {
  GluedFan glued;
  glued.fan = star(v);
  const auto& fan = glued.fan;
  {
    auto reps = representatives(fan[0].face);
    glued.center = reps[local_index(fan[0].face, v)];
  }
  std::vector<Vec3<Coord>> to_reps;
  for (const auto& entry : fan) {
    auto reps = representatives(entry.face);
    const int s = sign_to_match(reps[local_index(entry.face, v)], glued.center);
    glued.boundary.push_back(s > 0 ? reps[local_index(entry.face, entry.from)]
                                   : negated(reps[local_index(entry.face, entry.from)]));
    to_reps.push_back(s > 0 ? reps[local_index(entry.face, entry.to)]
                            : negated(reps[local_index(entry.face, entry.to)]));
  }
  for (std::size_t j = 0; j < fan.size(); ++j) {
    if (to_reps[j] != glued.boundary[(j + 1) % fan.size()]) {
      throw Error(ErrorKind::invalid_argument,
                  "faces around the vertex denote inconsistent copies");
    }
  }
  return glued;
}

template <Kernel K>
std::optional<WalkTrace> Triangulation<K>::walk_from(
    VertexId t, const Point& p, std::vector<FaceId>& visited) const {
  const Point& tp = vertex(t).point;
  auto finish = [&](FaceId f, const Classification& c) {
    WalkTrace trace;
    trace.face = f;
    const Face& face = this->face(f);
    if (c.is_inside()) {
      trace.status = WalkTrace::Status::found;
    } else if (c.is_on_edge()) {
      trace.status = WalkTrace::Status::on_edge;
      trace.edge = face.e[c.index];
    } else {
      trace.status = WalkTrace::Status::on_vertex;
      trace.vertex = face.v[c.index];
    }
    return trace;
  };

  const auto fan = star(t);
  if (equivalent(tp, p, kernel_)) {
    WalkTrace trace;
    trace.status = WalkTrace::Status::on_vertex;
    trace.vertex = t;
    trace.face = fan.front().face;
    return trace;
  }
  for (const auto& entry : fan) {
    Classification c = classify(entry.face, p);
    if (!c.is_outside()) {
      visited.push_back(entry.face);
      return finish(entry.face, c);
    }
  }

  const ProjectiveLine<K> walk_line = join(tp, p, kernel_);

  // Starting face: the one around t whose opposite edge is cut by the line.
  FaceId current = kNoFace;
  EdgeId exit = kNoEdge;
  for (const auto& entry : fan) {
    const Face& f = face(entry.face);
    const int opposite = (local_index(entry.face, t) + 1) % 3;
    ProjectiveLine<K> edge_line =
        join(vertex(entry.from).point, vertex(entry.to).point, kernel_);
    if (equivalent(walk_line, edge_line, kernel_)) continue;
    Point x = meet(walk_line, edge_line, kernel_);
    if (classify(entry.face, x) == Classification::on_edge(opposite)) {
      current = entry.face;
      exit = f.e[opposite];
      break;
    }
  }
  if (current == kNoFace) return std::nullopt;
  visited.push_back(current);

  const std::size_t step_cap = 2 * face_count_ + 8;
  for (std::size_t step = 0; step < step_cap; ++step) {
    const FaceId next = other_face(exit, current);
    if (next == kNoFace) return std::nullopt;
    const EdgeId entry_edge = exit;
    current = next;
    visited.push_back(current);

    Classification c = classify(current, p);
    if (!c.is_outside()) return finish(current, c);

    const Face& f = face(current);
    exit = kNoEdge;
    for (int k = 0; k < 3; ++k) {
      if (f.e[k] == entry_edge) continue;
      ProjectiveLine<K> edge_line = join(vertex(f.v[k]).point,
                                         vertex(f.v[(k + 1) % 3]).point, kernel_);
      if (equivalent(walk_line, edge_line, kernel_)) return std::nullopt;
      Point x = meet(walk_line, edge_line, kernel_);
      Classification cx = classify(current, x);
      if (cx == Classification::on_edge(k)) {
        exit = f.e[k];
        break;
      }
      if (cx.is_on_vertex()) return std::nullopt;
    }
    if (exit == kNoEdge) return std::nullopt;
  }
  return std::nullopt;
}

template <Kernel K>
WalkTrace Triangulation<K>::locate(const Point& p, VertexId start) const {
  const std::vector<VertexId> ids = vertex_ids();
  if (ids.empty()) {
    throw Error(ErrorKind::invalid_argument, "empty triangulation");
  }
  std::size_t pos = 0;
  if (auto it = std::lower_bound(ids.begin(), ids.end(), start);
      it != ids.end()) {
    pos = static_cast<std::size_t>(it - ids.begin());
  }
  std::vector<FaceId> visited;
  for (std::size_t attempt = 0; attempt <= ids.size(); ++attempt) {
    visited.clear();
    const VertexId t = ids[(pos + attempt) % ids.size()];
    if (auto trace = walk_from(t, p, visited)) {
      trace->restarts = attempt;
      trace->visited = std::move(visited);
      return *trace;
    }
  }
  throw Error(ErrorKind::walk_stuck,
              "no walk reached the query point after " +
                  std::to_string(ids.size()) + " restarts");
}

template <Kernel K>
auto Triangulation<K>::split_face(FaceId f, const Point& p, std::int64_t source)
    -> SplitResult {
  if (!face(f).alive || !classify(f, p).is_inside()) {
    throw Error(ErrorKind::not_interior, "point is not inside the face");
  }
  const auto [a, b, c] = face(f).v;
  const Plane plane = *face(f).plane;
  remove_face(f);
  const VertexId v = add_vertex(p, false, source);
  SplitResult result{v, {}};
  result.faces.push_back(add_face(a, v, b, plane));
  result.faces.push_back(add_face(b, v, c, plane));
  result.faces.push_back(add_face(c, v, a, plane));
  return result;
}

template <Kernel K>
auto Triangulation<K>::split_edge(EdgeId e, const Point& p, std::int64_t source)
    -> SplitResult {
  const Edge& edge = this->edge(e);
  if (!edge.alive || edge.faces.size() != 2) {
    throw Error(ErrorKind::not_on_edge, "edge is not shared by two faces");
  }
  const VertexId u = edge.ends[0];
  const VertexId w = edge.ends[1];
  struct Side {
    VertexId apex;
    Plane plane;
  };
  std::vector<Side> sides;
  for (FaceId f : edge.faces) {
    if (classify(f, p) != Classification::on_edge(local_edge(f, e))) {
      throw Error(ErrorKind::not_on_edge,
                  "point is not strictly inside the edge");
    }
    VertexId apex = kNoVertex;
    for (VertexId x : face(f).v) {
      if (x != u && x != w) apex = x;
    }
    sides.push_back({apex, *face(f).plane});
  }
  const std::vector<FaceId> old = edge.faces;
  for (FaceId f : old) remove_face(f);
  const VertexId v = add_vertex(p, false, source);
  SplitResult result{v, {}};
  for (const Side& s : sides) {
    result.faces.push_back(add_face(u, v, s.apex, s.plane));
    result.faces.push_back(add_face(v, w, s.apex, s.plane));
  }
  return result;
}

template <Kernel K>
EdgeId Triangulation<K>::flip_edge(EdgeId e) {
  const Edge& edge = this->edge(e);
  if (!edge.alive || edge.faces.size() != 2) {
    throw Error(ErrorKind::not_flippable_geometry,
                "edge is not shared by exactly two faces");
  }
  const FaceId f1 = edge.faces[0];
  const FaceId f2 = edge.faces[1];
  const VertexId u = edge.ends[0];
  const VertexId w = edge.ends[1];
  auto apex_of = [&](FaceId f) {
    for (VertexId x : face(f).v) {
      if (x != u && x != w) return x;
    }
    return kNoVertex;
  };
  const VertexId x = apex_of(f1);
  const VertexId y = apex_of(f2);
  if (x == y || find_edge(x, y)) {
    throw Error(ErrorKind::not_flippable_non_simple,
                "the other diagonal is already an edge");
  }

  // Glue both faces into one quadrilateral cone: take f1's copy, then the
  // copy of f2 that shares the edge with it.
  const auto r1 = representatives(f1);
  const auto r2 = representatives(f2);
  const Vec3<Coord>& u1 = r1[local_index(f1, u)];
  const Vec3<Coord>& w1 = r1[local_index(f1, w)];
  const Vec3<Coord>& x1 = r1[local_index(f1, x)];
  const int s = sign_to_match(r2[local_index(f2, u)], u1);
  const Vec3<Coord> w2 = s > 0 ? r2[local_index(f2, w)] : negated(r2[local_index(f2, w)]);
  const Vec3<Coord> y2 = s > 0 ? r2[local_index(f2, y)] : negated(r2[local_index(f2, y)]);
  if (w2 != w1) {
    throw Error(ErrorKind::not_flippable_geometry,
                "the two faces denote different copies of the edge");
  }

  // The new diagonal must separate u from w and the old one x from y.
  const int su = kernel_.sign_det(x1, y2, u1);
  const int sw = kernel_.sign_det(x1, y2, w1);
  const int sx = kernel_.sign_det(u1, w1, x1);
  const int sy = kernel_.sign_det(u1, w1, y2);
  if (su * sw >= 0 || sx * sy >= 0) {
    throw Error(ErrorKind::not_flippable_geometry,
                "quadrilateral is not convex across the new diagonal");
  }
  Plane pu = distinguishing_plane_for(x1, y2, u1, kernel_);
  Plane pw = distinguishing_plane_for(x1, y2, w1, kernel_);

  remove_face(f1);
  remove_face(f2);
  add_face(x, y, u, pu);
  add_face(x, y, w, pw);
  return *find_edge(x, y);
}

template <Kernel K>
VertexId Triangulation<K>::replace_pseudo_star(VertexId v, const Point& p,
                                               std::int64_t source) {
  if (index(v) >= vertices_.size() || !vertex(v).alive || !vertex(v).is_pseudo) {
    throw Error(ErrorKind::not_pseudo, "vertex is not a pseudo-point");
  }
  const GluedFan glued = glue_fan(v);
  const auto& fan = glued.fan;
  const std::size_t k = fan.size();

  std::optional<Vec3<Coord>> lifted;
  for (const auto& entry : fan) {
    Classification c = classify(entry.face, p);
    if (c.is_outside()) continue;
    const Face& f = face(entry.face);
    if (c.is_on_edge()) {
      const VertexId a = f.v[c.index];
      const VertexId b = f.v[(c.index + 1) % 3];
      if (a != v && b != v) {
        throw Error(ErrorKind::not_in_region, "point lies on the region boundary");
      }
    } else if (c.is_on_vertex()) {
      if (f.v[c.index] != v) {
        throw Error(ErrorKind::not_in_region, "point is a region corner");
      }
      lifted = glued.center;
      break;
    }
    const auto reps = representatives(entry.face);
    const int s = sign_to_match(reps[local_index(entry.face, v)], glued.center);
    const Vec3<Coord> q = f.plane->lift(p.coords(), kernel_);
    lifted = s > 0 ? q : negated(q);
    break;
  }
  if (!lifted) {
    throw Error(ErrorKind::not_in_region, "point is outside the region");
  }

  std::vector<Plane> planes;
  for (std::size_t j = 0; j < k; ++j) {
    const auto& b0 = glued.boundary[j];
    const auto& b1 = glued.boundary[(j + 1) % k];
    const int expected = kernel_.sign_det(glued.center, b0, b1);
    if (expected == 0 || kernel_.sign_det(*lifted, b0, b1) != expected) {
      throw Error(ErrorKind::not_in_region,
                  "region is not star-shaped from the point");
    }
    planes.push_back(distinguishing_plane_for(*lifted, b0, b1, kernel_));
  }

  for (const auto& entry : fan) remove_face(entry.face);
  remove_vertex(v);
  const VertexId nv = add_vertex(p, false, source);
  for (std::size_t j = 0; j < k; ++j) {
    add_face(nv, fan[j].from, fan[j].to, planes[j]);
  }
  return nv;
}

template <Kernel K>
void Triangulation<K>::dissolve_pseudo_vertex(VertexId v, VertexId a,
                                              VertexId b) {
  if (index(v) >= vertices_.size() || !vertex(v).alive || !vertex(v).is_pseudo) {
    throw Error(ErrorKind::not_pseudo, "vertex is not a pseudo-point");
  }
  const GluedFan glued = glue_fan(v);
  const auto& fan = glued.fan;
  if (fan.size() != 4) {
    throw Error(ErrorKind::invalid_argument, "region is not a quadrilateral");
  }
  std::size_t ia = 4;
  for (std::size_t j = 0; j < 4; ++j) {
    if (fan[j].from == a) ia = j;
  }
  if (ia == 4 || fan[(ia + 2) % 4].from != b) {
    throw Error(ErrorKind::invalid_argument,
                "diagonal endpoints are not opposite region corners");
  }
  if (find_edge(a, b)) {
    throw Error(ErrorKind::not_flippable_non_simple, "diagonal already exists");
  }
  const auto& B0 = glued.boundary[ia];
  const auto& B1 = glued.boundary[(ia + 1) % 4];
  const auto& B2 = glued.boundary[(ia + 2) % 4];
  const auto& B3 = glued.boundary[(ia + 3) % 4];
  if (kernel_.sign_det(B0, B2, B1) * kernel_.sign_det(B0, B2, B3) >= 0) {
    throw Error(ErrorKind::not_flippable_geometry,
                "diagonal leaves the region");
  }
  Plane p1 = distinguishing_plane_for(B0, B1, B2, kernel_);
  Plane p2 = distinguishing_plane_for(B0, B2, B3, kernel_);
  const VertexId c1 = fan[(ia + 1) % 4].from;
  const VertexId c3 = fan[(ia + 3) % 4].from;
  for (const auto& entry : fan) remove_face(entry.face);
  remove_vertex(v);
  add_face(a, c1, b, p1);
  add_face(a, b, c3, p2);
}

template <Kernel K>
std::vector<oracle::FaceCone> Triangulation<K>::face_cones() const {
  std::vector<oracle::FaceCone> cones;
  cones.reserve(face_count_);
  for (FaceId f : face_ids()) {
    const Face& face = this->face(f);
    if (!face.plane) continue;
    bool separated = true;
    for (VertexId v : face.v) {
      separated = separated && face.plane->side(vertex(v).point.coords(), kernel_) != 0;
    }
    if (!separated) continue;
    const auto reps = representatives(f);
    try {
      cones.emplace_back(K::to_rational(reps[0]), K::to_rational(reps[1]),
                         K::to_rational(reps[2]));
    } catch (const Error&) {
      // Degenerate faces are reported by the separation check.
    }
  }
  return cones;
}

template <Kernel K>
ValidationReport Triangulation<K>::validate(
    const ValidationOptions& options) const {
  ValidationReport report;
  report.vertices = vertex_count_;
  report.edges = edge_count_;
  report.faces = face_count_;
  report.euler_characteristic = euler_characteristic();
  if (options.level == ValidationLevel::off) return report;

  const bool full = options.level == ValidationLevel::full;
  const std::vector<FaceId> fids = face_ids();

  if (full) {
    CheckResult simple{"simple_graph", true, {}, {}};
    for (std::size_t i = 0; i < malformed_.size(); ++i) {
      simple.passed = false;
      simple.counterexamples.push_back(faces_.size() + i);
    }
    std::map<std::array<VertexId, 3>, FaceId> seen;
    for (FaceId f : fids) {
      auto key = face(f).v;
      std::sort(key.begin(), key.end());
      if (auto [it, inserted] = seen.emplace(key, f); !inserted) {
        simple.passed = false;
        simple.counterexamples.push_back(index(f));
      }
    }
    if (!simple.passed) simple.detail = "repeated or malformed faces";
    report.checks.push_back(std::move(simple));
  }

  {
    CheckResult degree{"edge_degree", true, {}, {}};
    for (EdgeId e : edge_ids()) {
      if (edge(e).faces.size() != 2) {
        degree.passed = false;
        degree.counterexamples.push_back(index(e));
      }
    }
    if (!degree.passed) degree.detail = "edges not shared by exactly two faces";
    report.checks.push_back(std::move(degree));
  }

  if (full) {
    CheckResult links{"vertex_links", true, {}, {}};
    std::vector<std::vector<std::pair<VertexId, VertexId>>> link(vertices_.size());
    for (FaceId f : fids) {
      const auto& v = face(f).v;
      for (int i = 0; i < 3; ++i) {
        link[index(v[i])].emplace_back(v[(i + 1) % 3], v[(i + 2) % 3]);
      }
    }
    for (VertexId v : vertex_ids()) {
      const auto& edges = link[index(v)];
      std::map<VertexId, std::vector<VertexId>> adj;
      for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
      bool cycle = edges.size() >= 3 && adj.size() == edges.size();
      for (const auto& [w, nbrs] : adj) cycle = cycle && nbrs.size() == 2;
      if (cycle) {
        std::set<VertexId> reached{adj.begin()->first};
        std::vector<VertexId> todo{adj.begin()->first};
        while (!todo.empty()) {
          VertexId w = todo.back();
          todo.pop_back();
          for (VertexId x : adj[w]) {
            if (reached.insert(x).second) todo.push_back(x);
          }
        }
        cycle = reached.size() == adj.size();
      }
      if (!cycle) {
        links.passed = false;
        links.counterexamples.push_back(index(v));
      }
    }
    if (!links.passed) links.detail = "vertex links that are not a single cycle";
    report.checks.push_back(std::move(links));
  }

  {
    CheckResult euler{"euler_characteristic", report.euler_characteristic == 1,
                      {}, {}};
    std::ostringstream os;
    os << "V - E + F = " << vertex_count_ << " - " << edge_count_ << " + "
       << face_count_ << " = " << report.euler_characteristic;
    euler.detail = os.str();
    report.checks.push_back(std::move(euler));
  }

  if (full) {
    CheckResult planes{"plane_separation", true, {}, {}};
    for (FaceId f : fids) {
      const Face& fc = face(f);
      const auto& a = vertex(fc.v[0]).point;
      const auto& b = vertex(fc.v[1]).point;
      const auto& c = vertex(fc.v[2]).point;
      if (!fc.plane || collinear(a, b, c, kernel_) ||
          !fc.plane->separates(a, b, c, kernel_)) {
        planes.passed = false;
        planes.counterexamples.push_back(index(f));
      }
    }
    if (!planes.passed) {
      planes.detail = "faces whose plane does not separate the two copies";
    }
    report.checks.push_back(std::move(planes));

    CheckResult tiling{"sphere_tiling", true, {}, {}};
    if (options.tiling_samples > 0) {
      const auto cones = face_cones();
      const oracle::TilingReport t = oracle::sample_tiling(
          cones, options.tiling_samples, options.seed, options.tau);
      tiling.passed = t.ok() && cones.size() == face_count_;
      std::ostringstream os;
      os << t.samples << " directions, " << t.resampled << " resampled;";
      for (const auto& [count, n] : t.histogram) {
        os << " " << n << " in " << count << " face(s);";
      }
      if (cones.size() != face_count_) {
        os << " " << face_count_ - cones.size() << " face(s) without a cone";
      }
      tiling.detail = os.str();
      tiling.counterexamples.assign(t.violation_counts.begin(),
                                    t.violation_counts.end());
    } else {
      tiling.detail = "skipped";
    }
    report.checks.push_back(std::move(tiling));
  }
  return report;
}

template class Triangulation<ExactKernel>;
template class Triangulation<FloatKernel>;

}  // namespace projtri
