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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"

namespace projtri {
namespace {

using testing::iv;
using testing::pt;
using testing::rv;

using ETri = Triangulation<ExactKernel>;
using EP = ProjectivePoint<ExactKernel>;
using EPlane = DistinguishingPlane<ExactKernel>;

const ValidationOptions kStructural{ValidationLevel::full, 0, 1, 1e-12};
const ValidationOptions kFull{ValidationLevel::full, 4000, 1, 1e-12};

template <Kernel K>
Triangulation<K> canonical_six() {
  const auto six = testing::frame_six<K>();
  return build_canonical(six, find_canonical(six, find_seed_exhaustive(six)));
}

template <Kernel K>
Triangulation<K> random_triangulation(std::size_t n, std::uint64_t seed) {
  const auto doc = testing::random_points(n, seed, 500);
  const auto pts = testing::to_points<K>(doc);
  const SeedSet s = find_seed_exhaustive(pts);
  Triangulation<K> tri = build_canonical(pts, find_canonical(pts, s));
  VertexId last = tri.vertex_ids().back();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (std::find(s.begin(), s.end(), i) != s.end()) continue;
    const WalkTrace t = tri.locate(pts[i], last);
    if (t.status == WalkTrace::Status::found) {
      last = tri.split_face(t.face, pts[i], static_cast<std::int64_t>(i)).vertex;
    } else if (t.status == WalkTrace::Status::on_edge) {
      last = tri.split_edge(t.edge, pts[i], static_cast<std::int64_t>(i)).vertex;
    }
  }
  return tri;
}

template <Kernel K>
std::set<std::array<VertexId, 3>> face_set(const Triangulation<K>& tri) {
  std::set<std::array<VertexId, 3>> out;
  for (FaceId f : tri.face_ids()) {
    auto v = tri.face(f).v;
    std::sort(v.begin(), v.end());
    out.insert(v);
  }
  return out;
}

template <Kernel K>
void expect_structurally_valid(const Triangulation<K>& tri) {
  const ValidationReport r = tri.validate(kStructural);
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
}

TEST(Validate, CanonicalSixIsK6) {
  const ETri tri = canonical_six<ExactKernel>();
  const ValidationReport r = tri.validate(kFull);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.vertices, 6u);
  EXPECT_EQ(r.edges, 15u);
  EXPECT_EQ(r.faces, 10u);
  EXPECT_EQ(r.euler_characteristic, 1);
  const auto ids = tri.vertex_ids();
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      EXPECT_TRUE(tri.find_edge(ids[i], ids[j]));
}

TEST(Validate, ReportsAllSixChecksAtFullLevel) {
  const ValidationReport r = canonical_six<ExactKernel>().validate(kFull);
  for (const char* name : {"simple_graph", "edge_degree", "vertex_links",
                           "euler_characteristic", "plane_separation", "sphere_tiling"}) {
    ASSERT_NE(r.find(name), nullptr) << name;
  }
  const ValidationReport fast =
      canonical_six<ExactKernel>().validate({ValidationLevel::fast, 0, 1, 1e-12});
  EXPECT_EQ(fast.checks.size(), 2u);
  EXPECT_TRUE(fast.ok());
}

TEST(Validate, EdgeInThreeFacesIsReported) {
  ETri tri = canonical_six<ExactKernel>();
  const FaceId f = tri.face_ids().front();
  const auto v = tri.face(f).v;
  VertexId other = kNoVertex;
  for (VertexId w : tri.vertex_ids())
    if (tri.local_index(f, w) < 0) other = w;
  tri.add_face(v[0], v[1], other, tri.face(f).plane);
  const EdgeId shared = *tri.find_edge(v[0], v[1]);
  const ValidationReport r = tri.validate(kStructural);
  const CheckResult* degree = r.find("edge_degree");
  ASSERT_NE(degree, nullptr);
  EXPECT_FALSE(degree->passed);
  EXPECT_NE(std::find(degree->counterexamples.begin(), degree->counterexamples.end(),
                      index(shared)),
            degree->counterexamples.end());
}

TEST(Validate, DuplicatedFaceFailsSimplicity) {
  ETri tri = canonical_six<ExactKernel>();
  const FaceId f = tri.face_ids().front();
  tri.add_face(tri.face(f).v[0], tri.face(f).v[1], tri.face(f).v[2], tri.face(f).plane);
  const ValidationReport r = tri.validate(kFull);
  EXPECT_FALSE(r.find("simple_graph")->passed);
  EXPECT_FALSE(r.find("sphere_tiling")->passed);
}

TEST(Validate, MissingPlaneFailsSeparation) {
  ETri tri = canonical_six<ExactKernel>();
  const FaceId f = tri.face_ids().front();
  const auto v = tri.face(f).v;
  tri.remove_face(f);
  tri.add_face(v[0], v[1], v[2], std::nullopt);
  const ValidationReport r = tri.validate(kStructural);
  EXPECT_FALSE(r.find("plane_separation")->passed);
  EXPECT_TRUE(r.find("edge_degree")->passed);
}

TEST(Locate, PointInFirstFaceIsFoundImmediately) {
  const ETri tri = canonical_six<ExactKernel>();
  const VertexId start = tri.vertex_ids().front();
  const FaceId f = tri.star(start).front().face;
  const auto reps = tri.representatives(f);
  const EP inside(add(add(reps[0], reps[1]), reps[2]));
  const WalkTrace t = tri.locate(inside, start);
  EXPECT_EQ(t.status, WalkTrace::Status::found);
  EXPECT_EQ(t.face, f);
  EXPECT_EQ(t.visited.size(), 1u);
  EXPECT_EQ(t.restarts, 0u);
}

TEST(Locate, ExistingVertexIsReportedAsVertexHit) {
  const ETri tri = canonical_six<ExactKernel>();
  for (VertexId v : tri.vertex_ids()) {
    const WalkTrace t = tri.locate(tri.vertex(v).point, tri.vertex_ids().front());
    EXPECT_EQ(t.status, WalkTrace::Status::on_vertex);
    EXPECT_EQ(t.vertex, v);
  }
}

TEST(Locate, InitialRegionsMatchConeOracle) {
  const auto init = build_initial<ExactKernel>({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1)});
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> d(-40, 40);
  for (int i = 0; i < 300; ++i) {
    const auto q = iv(d(rng), d(rng), d(rng));
    if (is_zero(q)) continue;
    const WalkTrace t = init.tri.locate(EP(q), init.quad[0]);
    if (t.status != WalkTrace::Status::found) continue;
    const auto reps = init.tri.representatives(t.face);
    const auto cls = oracle::oracle_cone_membership(
        {to_rational(reps[0]), to_rational(reps[1]), to_rational(reps[2]), to_rational(q)});
    EXPECT_EQ(cls, Classification::inside());
    int pseudo = 0;
    for (VertexId v : init.tri.face(t.face).v) pseudo += init.tri.vertex(v).is_pseudo;
    EXPECT_EQ(pseudo, 1);
  }
}

template <Kernel K>
void locate_matches_linear_scan(const Triangulation<K>& tri, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-1000, 1000);
  const auto ids = tri.vertex_ids();
  for (int i = 0; i < 1000; ++i) {
    const auto q = ProjectivePoint<K>::from_rational(rv(d(rng), d(rng), d(rng) | 1));
    std::vector<FaceId> inside;
    bool boundary = false;
    for (FaceId f : tri.face_ids()) {
      const Classification c = tri.classify(f, q);
      if (c.is_inside()) inside.push_back(f);
      if (c.is_on_edge() || c.is_on_vertex()) boundary = true;
    }
    const WalkTrace t = tri.locate(q, ids[rng() % ids.size()]);
    if (boundary) {
      EXPECT_NE(t.status, WalkTrace::Status::found);
      continue;
    }
    ASSERT_EQ(inside.size(), 1u);
    EXPECT_EQ(t.status, WalkTrace::Status::found);
    EXPECT_EQ(t.face, inside.front());
    for (std::size_t k = 1; k < t.visited.size(); ++k) {
      bool adjacent = false;
      for (int e = 0; e < 3; ++e) adjacent |= tri.neighbor(t.visited[k - 1], e) == t.visited[k];
      EXPECT_TRUE(adjacent);
    }
  }
}

TEST(Locate, AgreesWithLinearScanExact) {
  locate_matches_linear_scan(random_triangulation<ExactKernel>(120, 1), 31);
}

TEST(Locate, AgreesWithLinearScanFloat) {
  locate_matches_linear_scan(random_triangulation<FloatKernel>(120, 2), 32);
}

TEST(Locate, LineThroughAnotherVertexStillLocates) {
  // Grid points make the walking line hit vertices and run along edges.
  PointSetDocument doc;
  for (long x = -3; x <= 3; ++x)
    for (long y = -3; y <= 3; ++y) doc.points.push_back(rv(x, y, 1));
  const TriangulationDocument out = triangulate(doc, {});
  ASSERT_TRUE(out.validation->ok());
  EXPECT_EQ(out.vertices.size(), 49u);
  EXPECT_EQ(out.faces.size(), 96u);
}

TEST(SplitFace, CountsAndInheritedPlanes) {
  ETri tri = canonical_six<ExactKernel>();
  const FaceId f = tri.face_ids().front();
  const EPlane plane = *tri.face(f).plane;
  const auto reps = tri.representatives(f);
  const EP p(add(add(reps[0], scaled(reps[1], mpz_class(2))), reps[2]));
  const auto result = tri.split_face(f, p);
  EXPECT_EQ(tri.vertex_count(), 7u);
  EXPECT_EQ(tri.edge_count(), 18u);
  EXPECT_EQ(tri.face_count(), 12u);
  EXPECT_EQ(tri.euler_characteristic(), 1);
  ASSERT_EQ(result.faces.size(), 3u);
  for (FaceId child : result.faces) {
    EXPECT_EQ(*tri.face(child).plane, plane);
    const auto& v = tri.face(child).v;
    EXPECT_TRUE(plane.separates(tri.vertex(v[0]).point, tri.vertex(v[1]).point,
                                tri.vertex(v[2]).point));
  }
  EXPECT_TRUE(tri.validate(kFull).ok());
}

TEST(SplitFace, RejectsPointsNotInside) {
  ETri tri = canonical_six<ExactKernel>();
  const FaceId f = tri.face_ids().front();
  try {
    tri.split_face(f, tri.vertex(tri.face(f).v[0]).point);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_interior);
  }
  EXPECT_EQ(tri.face_count(), 10u);
}

// Two faces across the edge from a = (1,0,1) to b = (0,1,1).
ETri two_faces() {
  ETri tri;
  const VertexId a = tri.add_vertex(pt(1, 0, 1));
  const VertexId b = tri.add_vertex(pt(0, 1, 1));
  const VertexId c = tri.add_vertex(pt(-1, -1, 1));
  const VertexId d = tri.add_vertex(pt(2, 2, 1));
  tri.add_face(a, b, c, EPlane(iv(0, 0, 1)));
  tri.add_face(a, b, d, EPlane(iv(0, 0, 1)));
  return tri;
}

TEST(SplitEdge, NewVertexIsOnVertexOfItsFaces) {
  ETri tri = two_faces();
  const EdgeId ab = *tri.find_edge(VertexId(0), VertexId(1));
  const EP p = pt(1, 1, 2);
  const auto result = tri.split_edge(ab, p);
  EXPECT_EQ(result.faces.size(), 4u);
  EXPECT_EQ(tri.vertex_count(), 5u);
  EXPECT_EQ(tri.face_count(), 4u);
  for (FaceId f : result.faces) {
    EXPECT_TRUE(tri.classify(f, p).is_on_vertex());
    EXPECT_EQ(*tri.face(f).plane, EPlane(iv(0, 0, 1)));
  }
  EXPECT_FALSE(tri.find_edge(VertexId(0), VertexId(1)));
}

TEST(SplitEdge, EndpointIsNotOnEdge) {
  ETri tri = two_faces();
  const EdgeId ab = *tri.find_edge(VertexId(0), VertexId(1));
  try {
    tri.split_edge(ab, pt(1, 0, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_on_edge);
  }
}

TEST(SplitEdge, PreservesEulerCharacteristic) {
  ETri tri = canonical_six<ExactKernel>();
  const EdgeId e = tri.edge_ids().front();
  const FaceId f = tri.edge(e).faces.front();
  const auto reps = tri.representatives(f);
  const int i = tri.local_index(f, tri.edge(e).ends[0]);
  const int j = tri.local_index(f, tri.edge(e).ends[1]);
  tri.split_edge(e, EP(add(reps[i], reps[j])));
  EXPECT_EQ(tri.euler_characteristic(), 1);
  EXPECT_EQ(tri.vertex_count(), 7u);
  EXPECT_TRUE(tri.validate(kFull).ok());
}

TEST(Flip, CompleteGraphAllowsNoFlip) {
  ETri tri = canonical_six<ExactKernel>();
  for (EdgeId e : tri.edge_ids()) {
    try {
      tri.flip_edge(e);
      FAIL() << "flipped an edge of K6";
    } catch (const Error& err) {
      EXPECT_EQ(err.kind(), ErrorKind::not_flippable_non_simple);
    }
  }
}

template <Kernel K>
void flips_are_involutions(std::uint64_t seed) {
  Triangulation<K> tri = random_triangulation<K>(40, seed);
  const auto before = face_set(tri);
  int flipped = 0, refused = 0;
  for (EdgeId e : tri.edge_ids()) {
    if (!tri.edge(e).alive) continue;
    const auto ends = tri.edge(e).ends;
    EdgeId fresh;
    try {
      fresh = tri.flip_edge(e);
    } catch (const Error& err) {
      EXPECT_TRUE(err.kind() == ErrorKind::not_flippable_geometry ||
                  err.kind() == ErrorKind::not_flippable_non_simple);
      ++refused;
      continue;
    }
    ++flipped;
    EXPECT_EQ(tri.euler_characteristic(), 1);
    expect_structurally_valid(tri);
    const EdgeId back = tri.flip_edge(fresh);
    const auto restored = tri.edge(back).ends;
    EXPECT_TRUE((restored == ends) ||
                (restored == std::array<VertexId, 2>{ends[1], ends[0]}));
    EXPECT_EQ(face_set(tri), before);
  }
  EXPECT_GT(flipped, 0);
  EXPECT_GT(refused, 0);
  EXPECT_TRUE(tri.validate(kFull).ok());
}

TEST(Flip, InvolutionExact) { flips_are_involutions<ExactKernel>(3); }
TEST(Flip, InvolutionFloat) { flips_are_involutions<FloatKernel>(4); }

TEST(Flip, ValidAfterEveryAcceptedFlip) {
  ETri tri = random_triangulation<ExactKernel>(30, 5);
  std::mt19937_64 rng(5);
  int accepted = 0;
  for (int i = 0; i < 200; ++i) {
    const auto edges = tri.edge_ids();
    try {
      tri.flip_edge(edges[rng() % edges.size()]);
    } catch (const Error&) {
      continue;
    }
    ++accepted;
    expect_structurally_valid(tri);
  }
  EXPECT_GT(accepted, 10);
  EXPECT_TRUE(tri.validate(kFull).ok());
}

TEST(ReplacePseudoStar, KeepsCountsAndValidity) {
  auto init = build_initial<ExactKernel>({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1)});
  const EP p = pt(1, 2, 4);
  const auto region = region_of(init, p);
  ASSERT_TRUE(region);
  ETri tri = std::move(init.tri);
  const VertexId v = tri.replace_pseudo_star(*region, p, 4);
  EXPECT_FALSE(tri.vertex(v).is_pseudo);
  EXPECT_EQ(tri.vertex_count(), 7u);
  EXPECT_EQ(tri.edge_count(), 18u);
  EXPECT_EQ(tri.face_count(), 12u);
  EXPECT_EQ(tri.euler_characteristic(), 1);
  EXPECT_TRUE(tri.validate(kFull).ok());
}

TEST(ReplacePseudoStar, RejectsOutsideAndNonPseudo) {
  auto init = build_initial<ExactKernel>({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1)});
  const EP p = pt(1, 2, 4);
  const auto region = region_of(init, p);
  ASSERT_TRUE(region);
  VertexId other = init.pseudo[0] == *region ? init.pseudo[1] : init.pseudo[0];
  try {
    init.tri.replace_pseudo_star(other, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_in_region);
  }
  try {
    init.tri.replace_pseudo_star(init.quad[0], p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_pseudo);
  }
  EXPECT_TRUE(init.tri.validate(kStructural).ok());
}

TEST(Flip, OneOfTheTwoCandidateEdgesFlipsAfterStarReplacement) {
  std::mt19937_64 rng(17);
  int instances = 0;
  while (instances < 200) {
    const auto six = testing::random_general_six(rng);
    auto init = build_initial<ExactKernel>({six[0], six[1], six[2], six[3]});
    const auto r5 = region_of(init, six[4]);
    const auto r6 = region_of(init, six[5]);
    if (!r5 || !r6 || *r5 == *r6) continue;
    ++instances;
    int left = 0;
    while (init.pseudo[left] == *r5 || init.pseudo[left] == *r6) ++left;
    ETri tri = std::move(init.tri);
    tri.replace_pseudo_star(*r5, six[4]);
    tri.replace_pseudo_star(*r6, six[5]);
    int flippable = 0;
    for (const auto& line : init.lines[left]) {
      ETri copy = tri;
      const auto e = copy.find_edge(init.quad[line[0]], init.quad[line[1]]);
      ASSERT_TRUE(e);
      try {
        copy.flip_edge(*e);
        ++flippable;
      } catch (const Error&) {
      }
    }
    EXPECT_GE(flippable, 1);
  }
}

TEST(Star, FanIsClosedCycle) {
  const ETri tri = canonical_six<ExactKernel>();
  for (VertexId v : tri.vertex_ids()) {
    const auto fan = tri.star(v);
    EXPECT_EQ(fan.size(), 5u);
    for (std::size_t i = 0; i < fan.size(); ++i) {
      EXPECT_EQ(fan[i].to, fan[(i + 1) % fan.size()].from);
    }
  }
}

}  // namespace
}  // namespace projtri
