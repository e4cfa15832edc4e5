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

#include <random>
#include <vector>

#include "projtri/pipeline.hpp"
#include "projtri/seed.hpp"

namespace projtri::testing {

template <Kernel K = ExactKernel>
ProjectivePoint<K> pt(long x, long y, long z) {
  return ProjectivePoint<K>::from_rational({Rational(x), Rational(y), Rational(z)});
}

inline Vec3<mpz_class> iv(long x, long y, long z) {
  return {mpz_class(x), mpz_class(y), mpz_class(z)};
}

inline Vec3<Rational> rv(long x, long y, long z) {
  return {Rational(x), Rational(y), Rational(z)};
}

template <Kernel K = ExactKernel>
std::vector<ProjectivePoint<K>> frame_six() {
  return {pt<K>(1, 0, 0), pt<K>(0, 1, 0), pt<K>(0, 0, 1),
          pt<K>(1, 1, 1), pt<K>(1, 2, 4), pt<K>(4, 2, 1)};
}

/// Random nonzero integer triples; with full_plane false all lie in z > 0.
inline PointSetDocument random_points(std::size_t n, std::uint64_t seed,
                                      long range = 1000,
                                      bool full_plane = true) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-range, range);
  PointSetDocument doc;
  while (doc.points.size() < n) {
    Vec3<Rational> p{Rational(d(rng)), Rational(d(rng)), Rational(d(rng))};
    if (!full_plane) p[2] = abs(p[2]) + 1;
    if (!is_zero(p)) doc.points.push_back(p);
  }
  return doc;
}

template <Kernel K = ExactKernel>
std::vector<ProjectivePoint<K>> to_points(const PointSetDocument& doc) {
  std::vector<ProjectivePoint<K>> out;
  for (const auto& p : doc.points) out.push_back(ProjectivePoint<K>::from_rational(p));
  return out;
}

/// A six-point seed with no three collinear drawn from random small triples.
inline std::vector<ProjectivePoint<ExactKernel>> random_general_six(std::mt19937_64& rng,
                                                                    long range = 20) {
  std::uniform_int_distribution<long> d(-range, range);
  for (;;) {
    std::vector<ProjectivePoint<ExactKernel>> pts;
    while (pts.size() < 6) {
      Vec3<Rational> p{Rational(d(rng)), Rational(d(rng)), Rational(d(rng))};
      if (!is_zero(p)) pts.push_back(ProjectivePoint<ExactKernel>::from_rational(p));
    }
    if (in_general_position(pts)) return pts;
  }
}

}  // namespace projtri::testing
