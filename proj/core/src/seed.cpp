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

#include "projtri/seed.hpp"

#include <algorithm>
#include <string>

namespace projtri {
namespace {

template <Kernel K>
bool on_line(const std::vector<ProjectivePoint<K>>& pts, std::size_t i,
             std::size_t j, std::size_t x, const K& k) {
  return k.sign_det(pts[i].coords(), pts[j].coords(), pts[x].coords()) == 0;
}

template <Kernel K>
bool same_point(const std::vector<ProjectivePoint<K>>& pts, std::size_t i,
                std::size_t j, const K& k) {
  return equivalent(pts[i], pts[j], k);
}

}  // namespace

template <Kernel K>
bool in_general_position(const std::vector<ProjectivePoint<K>>& points,
                         const K& k) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (same_point(points, i, j, k)) return false;
      for (std::size_t x = j + 1; x < n; ++x) {
        if (on_line(points, i, j, x, k)) return false;
      }
    }
  }
  return true;
}

template <Kernel K>
std::optional<SeedSet> grow_seed(const std::vector<ProjectivePoint<K>>& points,
                                 std::size_t start, const K& k) {
  const std::size_t n = points.size();
  std::vector<std::size_t> chosen{start};
  for (std::size_t x = 0; x < n && chosen.size() < 6; ++x) {
    if (x == start) continue;
    bool ok = true;
    for (std::size_t a = 0; a < chosen.size() && ok; ++a) {
      ok = !same_point(points, chosen[a], x, k);
      for (std::size_t b = a + 1; b < chosen.size() && ok; ++b) {
        ok = !on_line(points, chosen[a], chosen[b], x, k);
      }
    }
    if (ok) chosen.push_back(x);
  }
  if (chosen.size() < 6) return std::nullopt;
  SeedSet seed;
  std::copy(chosen.begin(), chosen.end(), seed.begin());
  return seed;
}

template <Kernel K>
SeedSet find_seed_exhaustive(const std::vector<ProjectivePoint<K>>& points,
                             const K& k) {
  if (points.size() < 6) {
    throw Error(ErrorKind::no_seed, "fewer than six distinct points");
  }
  for (std::size_t start = 0; start < points.size(); ++start) {
    if (auto seed = grow_seed(points, start, k)) return *seed;
  }
  throw Error(ErrorKind::no_seed,
              "greedy growth failed from every starting point; no six points "
              "with no three collinear were found");
}

template <Kernel K>
SeedSet find_seed_linecover(const std::vector<ProjectivePoint<K>>& points,
                            const K& k) {
  const std::size_t n = points.size();
  if (n < 6) {
    throw Error(ErrorKind::no_seed, "fewer than six distinct points");
  }
  std::vector<bool> gone(n, false);
  std::vector<std::size_t> s;
  auto drop_line = [&](std::size_t i, std::size_t j) {
    for (std::size_t x = 0; x < n; ++x) {
      if (!gone[x] && on_line(points, i, j, x, k)) gone[x] = true;
    }
  };
  auto pick = [&](auto&& admissible) -> bool {
    for (std::size_t x = 0; x < n; ++x) {
      if (gone[x] || std::find(s.begin(), s.end(), x) != s.end()) continue;
      bool ok = true;
      for (std::size_t y : s) ok = ok && !same_point(points, x, y, k);
      if (ok && admissible(x)) {
        s.push_back(x);
        return true;
      }
    }
    return false;
  };
  auto any = [](std::size_t) { return true; };
  auto fail = [] {
    throw Error(ErrorKind::no_seed, "line-cover strategy exhausted the point set");
  };

  if (!pick(any) || !pick(any)) fail();
  drop_line(s[0], s[1]);
  if (!pick(any)) fail();
  if (!pick([&](std::size_t x) {
        return !on_line(points, s[0], s[2], x, k) &&
               !on_line(points, s[1], s[2], x, k);
      })) {
    fail();
  }
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) drop_line(s[a], s[b]);
  }
  if (!pick(any)) fail();
  if (!pick([&](std::size_t x) {
        for (std::size_t a = 0; a < 4; ++a) {
          if (on_line(points, s[a], s[4], x, k)) return false;
        }
        return true;
      })) {
    fail();
  }
  SeedSet seed;
  std::copy(s.begin(), s.end(), seed.begin());
  return seed;
}

template <Kernel K>
InitialTriangulation<K> build_initial(
    const std::array<ProjectivePoint<K>, 4>& quad,
    const std::array<std::int64_t, 4>& sources, const K& k) {
  using Coord = typename K::Coord;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      for (int c = b + 1; c < 4; ++c) {
        if (collinear(quad[a], quad[b], quad[c], k)) {
          throw Error(ErrorKind::degenerate_quad,
                      "three of the four points are collinear");
        }
      }
    }
  }
  const Vec3<Coord>& p1 = quad[0].coords();
  const Vec3<Coord>& p2 = quad[1].coords();
  const Vec3<Coord>& p3 = quad[2].coords();
  const Vec3<Coord>& p4 = quad[3].coords();
  // Scale the first three so that they sum to a representative of the fourth.
  const Vec3<Coord> A = scaled(p1, Coord(det3(p4, p2, p3)));
  const Vec3<Coord> B = scaled(p2, Coord(det3(p1, p4, p3)));
  const Vec3<Coord> C = scaled(p3, Coord(det3(p1, p2, p4)));
  const Vec3<Coord> D = add(add(A, B), C);

  InitialTriangulation<K> init{Triangulation<K>(k), {}, {}, {}, {}};
  auto& tri = init.tri;
  for (int i = 0; i < 4; ++i) {
    init.quad[i] = tri.add_vertex(quad[i], false, sources[i]);
  }
  const auto& v = init.quad;

  struct Corner {
    VertexId id;
    Vec3<Coord> rep;
  };
  struct Region {
    Vec3<Coord> center;
    std::array<std::array<int, 2>, 2> lines;
    std::array<Corner, 4> cycle;
  };
  const std::array<Region, 3> regions{{
      {add(A, B), {{{0, 1}, {2, 3}}},
       {{{v[0], A}, {v[2], negated(C)}, {v[1], B}, {v[3], D}}}},
      {add(A, C), {{{0, 2}, {1, 3}}},
       {{{v[0], A}, {v[1], negated(B)}, {v[2], C}, {v[3], D}}}},
      {add(B, C), {{{0, 3}, {1, 2}}},
       {{{v[0], negated(A)}, {v[1], B}, {v[3], D}, {v[2], C}}}},
  }};
  for (int r = 0; r < 3; ++r) {
    const Region& region = regions[r];
    const VertexId center =
        tri.add_vertex(ProjectivePoint<K>(region.center), true, -1);
    init.pseudo[r] = center;
    init.lines[r] = region.lines;
    auto& faces = init.regions[center];
    for (int i = 0; i < 4; ++i) {
      const Corner& a = region.cycle[i];
      const Corner& b = region.cycle[(i + 1) % 4];
      faces.push_back(tri.add_face(
          center, a.id, b.id,
          distinguishing_plane_for(region.center, a.rep, b.rep, k)));
    }
  }
  return init;
}

template <Kernel K>
std::optional<VertexId> region_of(const InitialTriangulation<K>& init,
                                  const ProjectivePoint<K>& p) {
  const auto& tri = init.tri;
  const WalkTrace trace = tri.locate(p, init.quad[0]);
  auto pseudo_of = [&](FaceId f) -> std::optional<VertexId> {
    for (VertexId v : tri.face(f).v) {
      if (tri.vertex(v).is_pseudo) return v;
    }
    return std::nullopt;
  };
  switch (trace.status) {
    case WalkTrace::Status::found:
      return pseudo_of(trace.face);
    case WalkTrace::Status::on_edge: {
      for (VertexId v : tri.edge(trace.edge).ends) {
        if (tri.vertex(v).is_pseudo) return v;
      }
      return std::nullopt;
    }
    case WalkTrace::Status::on_vertex:
      if (tri.vertex(trace.vertex).is_pseudo) return trace.vertex;
      return std::nullopt;
  }
  return std::nullopt;
}

template <Kernel K>
CanonicalSet find_canonical(const std::vector<ProjectivePoint<K>>& points,
                            const SeedSet& seed, const K& k) {
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      for (int c = b + 1; c < 6; ++c) {
        for (int d = c + 1; d < 6; ++d) {
          CanonicalSet cs{{seed[a], seed[b], seed[c], seed[d]}, {}};
          int e = 0;
          for (int x = 0; x < 6; ++x) {
            if (x != a && x != b && x != c && x != d) cs.extras[e++] = seed[x];
          }
          const auto init = build_initial<K>(
              {points[cs.quad[0]], points[cs.quad[1]], points[cs.quad[2]],
               points[cs.quad[3]]},
              {}, k);
          const auto r0 = region_of(init, points[cs.extras[0]]);
          const auto r1 = region_of(init, points[cs.extras[1]]);
          if (r0 && r1 && *r0 != *r1) return cs;
        }
      }
    }
  }
  throw Error(ErrorKind::invalid_canonical_set,
              "no four of the six points leave the other two in different "
              "regions");
}

template <Kernel K>
Triangulation<K> build_canonical(const std::vector<ProjectivePoint<K>>& points,
                                 const CanonicalSet& cs, const K& k) {
  auto init = build_initial<K>(
      {points[cs.quad[0]], points[cs.quad[1]], points[cs.quad[2]],
       points[cs.quad[3]]},
      {static_cast<std::int64_t>(cs.quad[0]), static_cast<std::int64_t>(cs.quad[1]),
       static_cast<std::int64_t>(cs.quad[2]), static_cast<std::int64_t>(cs.quad[3])},
      k);
  const auto& p5 = points[cs.extras[0]];
  const auto& p6 = points[cs.extras[1]];
  const auto r5 = region_of(init, p5);
  const auto r6 = region_of(init, p6);
  if (!r5 || !r6) {
    throw Error(ErrorKind::collinear_obstruction,
                "an extra point is collinear with two quadrangle points");
  }
  if (*r5 == *r6) {
    throw Error(ErrorKind::invalid_canonical_set,
                "both extra points lie in the same region");
  }
  int left = 0;
  while (init.pseudo[left] == *r5 || init.pseudo[left] == *r6) ++left;
  const VertexId leftover = init.pseudo[left];

  Triangulation<K> tri = std::move(init.tri);
  tri.replace_pseudo_star(*r5, p5, static_cast<std::int64_t>(cs.extras[0]));
  tri.replace_pseudo_star(*r6, p6, static_cast<std::int64_t>(cs.extras[1]));

  // The lines through the remaining pseudo-point carry the two quadrangle
  // edges separating the new vertices' regions; flip one of them.
  for (const auto& line : init.lines[left]) {
    const VertexId a = init.quad[line[0]];
    const VertexId b = init.quad[line[1]];
    const auto e = tri.find_edge(a, b);
    if (!e) continue;
    try {
      tri.flip_edge(*e);
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::not_flippable_geometry ||
          err.kind() == ErrorKind::not_flippable_non_simple) {
        continue;
      }
      throw;
    }
    tri.dissolve_pseudo_vertex(leftover, a, b);
    return tri;
  }
  throw Error(ErrorKind::collinear_obstruction,
              "neither quadrangle edge through the last pseudo-point can be "
              "flipped; the extra points are collinear with two quadrangle "
              "points");
}

#define PROJTRI_INSTANTIATE_SEED(K)                                           \
  template bool in_general_position<K>(const std::vector<ProjectivePoint<K>>&, \
                                       const K&);                             \
  template std::optional<SeedSet> grow_seed<K>(                                \
      const std::vector<ProjectivePoint<K>>&, std::size_t, const K&);         \
  template SeedSet find_seed_exhaustive<K>(                                   \
      const std::vector<ProjectivePoint<K>>&, const K&);                      \
  template SeedSet find_seed_linecover<K>(                                    \
      const std::vector<ProjectivePoint<K>>&, const K&);                      \
  template InitialTriangulation<K> build_initial<K>(                          \
      const std::array<ProjectivePoint<K>, 4>&,                               \
      const std::array<std::int64_t, 4>&, const K&);                          \
  template std::optional<VertexId> region_of<K>(                              \
      const InitialTriangulation<K>&, const ProjectivePoint<K>&);             \
  template CanonicalSet find_canonical<K>(                                    \
      const std::vector<ProjectivePoint<K>>&, const SeedSet&, const K&);      \
  template Triangulation<K> build_canonical<K>(                               \
      const std::vector<ProjectivePoint<K>>&, const CanonicalSet&, const K&);

PROJTRI_INSTANTIATE_SEED(ExactKernel)
PROJTRI_INSTANTIATE_SEED(FloatKernel)

}  // namespace projtri
