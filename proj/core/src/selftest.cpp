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

#include "projtri/selftest.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "projtri/pipeline.hpp"
#include "projtri/seed.hpp"

namespace projtri {
namespace {

struct Instance {
  Vec3<mpz_class> a, b, c, plane, p;
};

Vec3<mpz_class> ivec(long x, long y, long z) {
  return {mpz_class(x), mpz_class(y), mpz_class(z)};
}

Vec3<Rational> rat(const Vec3<mpz_class>& v) { return to_rational(v); }

std::string show(const Vec3<mpz_class>& v) {
  std::ostringstream os;
  os << "(" << v[0] << "," << v[1] << "," << v[2] << ")";
  return os.str();
}

/// A random triangle with a plane strictly separating the given copies.
struct TriangleMaker {
  std::mt19937_64& rng;
  std::uniform_int_distribution<long> coord{-4, 4};
  std::uniform_int_distribution<long> small{-2, 2};

  Vec3<mpz_class> vec() { return ivec(coord(rng), coord(rng), coord(rng)); }

  void make(Vec3<mpz_class>& a, Vec3<mpz_class>& b, Vec3<mpz_class>& c,
            Vec3<mpz_class>& plane, bool at_infinity) {
    const ExactKernel k;
    for (;;) {
      a = vec();
      b = vec();
      c = vec();
      if (at_infinity) a[2] = 0;
      if (k.sign_det(a, b, c) == 0) continue;
      // The plane through the tips, then nudged while it still separates.
      Vec3<mpz_class> n = add(add(cross(b, c), cross(c, a)), cross(a, b));
      if (k.sign_det(a, b, c) < 0) n = negated(n);
      const mpz_class scale = 1 + std::abs(small(rng));
      Vec3<mpz_class> m = add(scaled(n, scale), ivec(small(rng), small(rng), small(rng)));
      if (k.sign_dot(m, a) > 0 && k.sign_dot(m, b) > 0 && k.sign_dot(m, c) > 0) {
        n = m;
      }
      plane = n;
      // The kernel must not care which copy it is handed.
      if (small(rng) > 0) a = negated(a);
      if (small(rng) > 0) c = negated(c);
      return;
    }
  }
};

template <Kernel K>
bool compare(const Instance& in, EquivalenceStats& stats) {
  ++stats.instances;
  const ExactKernel exact;
  auto lifted = [&](const Vec3<mpz_class>& v) {
    return rat(exact.sign_dot(in.plane, v) < 0 ? negated(v) : v);
  };
  const Classification expected = oracle::oracle_cone_membership(
      {lifted(in.a), lifted(in.b), lifted(in.c), rat(in.p)});
  Classification got;
  std::string failure;
  try {
    using P = ProjectivePoint<K>;
    auto to_point = [](const Vec3<mpz_class>& v) { return P::from_rational(rat(v)); };
    const DistinguishingPlane<K> plane(K::from_rational(rat(in.plane)));
    const K k{};
    got = classify(to_point(in.a), to_point(in.b), to_point(in.c),
                   to_point(in.p), plane, k);
  } catch (const Error& e) {
    failure = e.what();
  }
  if constexpr (K::arithmetic == Arithmetic::floating) {
    if (!expected.is_inside() && !expected.is_outside()) {
      --stats.instances;
      ++stats.skipped;
      return true;
    }
  }
  if (failure.empty() && got == expected) return true;
  ++stats.disagreements;
  if (stats.examples.size() < 5) {
    std::ostringstream os;
    os << "a=" << show(in.a) << " b=" << show(in.b) << " c=" << show(in.c)
       << " plane=" << show(in.plane) << " p=" << show(in.p) << ": kernel "
       << (failure.empty() ? to_string(got) : failure) << ", oracle "
       << to_string(expected);
    stats.examples.push_back(os.str());
  }
  return false;
}

}  // namespace

EquivalenceStats kernel_oracle_equivalence(std::size_t random_instances,
                                           std::uint64_t seed,
                                           Arithmetic mode) {
  EquivalenceStats stats;
  auto check = [&](const Instance& in) {
    if (mode == Arithmetic::exact) {
      compare<ExactKernel>(in, stats);
    } else {
      compare<FloatKernel>(in, stats);
    }
  };

  std::mt19937_64 fixed_rng(20);
  TriangleMaker fixed{fixed_rng};
  std::vector<Instance> triangles(20);
  triangles[0] = {ivec(1, 0, 1), ivec(0, 1, 1), ivec(-1, -1, 1), ivec(0, 0, 1), {}};
  triangles[1] = {ivec(1, 0, 0), ivec(0, 1, 0), ivec(0, 0, 1), ivec(1, 1, 1), {}};
  for (std::size_t t = 2; t < triangles.size(); ++t) {
    fixed.make(triangles[t].a, triangles[t].b, triangles[t].c, triangles[t].plane,
               t % 4 == 0);
  }
  const long odd[] = {-5, -3, -1, 1, 3};
  for (Instance tri : triangles) {
    for (long x : odd) {
      for (long y : odd) {
        for (long z : odd) {
          tri.p = ivec(x, y, z);
          check(tri);
        }
      }
    }
  }

  std::mt19937_64 rng(seed);
  TriangleMaker maker{rng};
  std::uniform_int_distribution<int> kind(0, 5);
  std::uniform_int_distribution<long> weight(-3, 3);
  for (std::size_t i = 0; i < random_instances; ++i) {
    Instance in;
    maker.make(in.a, in.b, in.c, in.plane, kind(rng) == 0);
    const std::array<const Vec3<mpz_class>*, 3> v{&in.a, &in.b, &in.c};
    switch (kind(rng)) {
      case 0: {
        // On the line through two vertices.
        const int e = static_cast<int>(rng() % 3);
        long s = weight(rng), t = weight(rng);
        if (s == 0 && t == 0) s = 1;
        in.p = add(scaled(*v[e], mpz_class(s)), scaled(*v[(e + 1) % 3], mpz_class(t)));
        break;
      }
      case 1:
        in.p = scaled(*v[rng() % 3], mpz_class(weight(rng) >= 0 ? 2 : -3));
        break;
      default:
        do {
          in.p = maker.vec();
        } while (is_zero(in.p));
    }
    check(in);
  }
  return stats;
}

std::vector<SelftestResult> run_selftest(const SelftestOptions& options) {
  std::vector<SelftestResult> results;
  auto record = [&](std::string name, auto&& body) {
    SelftestResult r{std::move(name), false, {}};
    try {
      body(r);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  };
  const ValidationOptions full{ValidationLevel::full, options.tiling_samples,
                               options.seed, 1e-12};

  record("predicate_oracle_equivalence", [&](SelftestResult& r) {
    const EquivalenceStats s =
        kernel_oracle_equivalence(options.random_instances, options.seed);
    r.passed = s.disagreements == 0 && s.instances > 0;
    r.detail = std::to_string(s.instances) + " instances, " +
               std::to_string(s.disagreements) + " disagreements";
    for (const auto& e : s.examples) r.detail += "; " + e;
  });

  using P = ProjectivePoint<ExactKernel>;
  auto pt = [](long x, long y, long z) {
    return P::from_rational({Rational(x), Rational(y), Rational(z)});
  };
  const std::vector<P> six{pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1),
                           pt(1, 1, 1), pt(1, 2, 4), pt(4, 2, 1)};

  record("initial_triangulation", [&](SelftestResult& r) {
    const auto init = build_initial<ExactKernel>({six[0], six[1], six[2], six[3]});
    const ValidationReport rep = init.tri.validate(full);
    r.passed = rep.ok() && rep.vertices == 7 && rep.edges == 18 && rep.faces == 12;
    r.detail = "V=" + std::to_string(rep.vertices) + " E=" +
               std::to_string(rep.edges) + " F=" + std::to_string(rep.faces);
  });

  record("canonical_triangulation", [&](SelftestResult& r) {
    const CanonicalSet cs = find_canonical(six, find_seed_exhaustive(six));
    const auto tri = build_canonical(six, cs);
    const ValidationReport rep = tri.validate(full);
    r.passed = rep.ok() && rep.vertices == 6 && rep.edges == 15 && rep.faces == 10;
    r.detail = "V=" + std::to_string(rep.vertices) + " E=" +
               std::to_string(rep.edges) + " F=" + std::to_string(rep.faces);
  });

  record("seed_search_vs_enumeration", [&](SelftestResult& r) {
    std::vector<Vec3<Rational>> raw;
    std::vector<P> pts;
    for (long x = -1; x <= 1; ++x) {
      for (long y = -1; y <= 1; ++y) {
        raw.push_back({Rational(x), Rational(y), Rational(1)});
        pts.push_back(P::from_rational(raw.back()));
      }
    }
    const auto all = oracle::brute_force_general_position(raw);
    bool ok = true;
    try {
      SeedSet s = find_seed_exhaustive(pts);
      std::sort(s.begin(), s.end());
      ok = std::find(all.begin(), all.end(), s) != all.end();
    } catch (const Error& e) {
      ok = all.empty() && e.kind() == ErrorKind::no_seed;
    }
    r.passed = ok;
    r.detail = "3x3 grid, " + std::to_string(all.size()) +
               " general-position 6-subsets";
  });

  record("pipeline_round_trip", [&](SelftestResult& r) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<long> d(-50, 50);
    PointSetDocument in;
    while (in.points.size() < 60) {
      Vec3<Rational> p{Rational(d(rng)), Rational(d(rng)), Rational(d(rng))};
      if (!is_zero(p)) in.points.push_back(p);
    }
    PipelineConfig cfg;
    cfg.tiling_samples = options.tiling_samples;
    const TriangulationDocument doc = triangulate(in, cfg);
    const ValidationReport rep =
        validate_document(parse_triangulation(to_json(doc)), full);
    const std::size_t v = doc.vertices.size();
    r.passed = rep.ok() && doc.validation && doc.validation->ok() &&
               doc.edge_count() == 3 * v - 3 && doc.faces.size() == 2 * v - 2;
    r.detail = "V=" + std::to_string(v) + " E=" + std::to_string(doc.edge_count()) +
               " F=" + std::to_string(doc.faces.size());
  });
  return results;
}

}  // namespace projtri
