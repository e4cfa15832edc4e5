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
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "projtri/arithmetic.hpp"
#include "projtri/projective.hpp"

/// Brute-force reference checks. Everything here runs in exact rational
/// arithmetic regardless of the mode of the code under test, and none of it
/// goes through the s-mapping.
namespace projtri::oracle {

/// Fixed representatives a', b', c' of a triangle and a query direction d.
struct ConeQuery {
  Vec3<Rational> a;
  Vec3<Rational> b;
  Vec3<Rational> c;
  Vec3<Rational> d;
};

/// Solves d = alpha a' + beta b' + gamma c' by Gaussian elimination.
/// Returns nullopt when the representatives are linearly dependent.
std::optional<Vec3<Rational>> cone_coefficients(const ConeQuery& q);

/// d or -d in the open cone spanned by a', b', c' gives Inside; one zero
/// coefficient with the other two of one sign gives OnEdge; two zeros give
/// OnVertex. Throws SingularFrame for dependent representatives.
Classification oracle_cone_membership(const ConeQuery& q);

/// A face cone prepared for many direction queries: the adjugate rows are
/// kept exactly and as doubles, and a floating-point filter with a
/// conservative error bound decides signs before falling back to exact
/// arithmetic.
class FaceCone {
 public:
  FaceCone(const Vec3<Rational>& a, const Vec3<Rational>& b,
           const Vec3<Rational>& c);

  /// Signs of the three cone coefficients of d, each certified exact.
  /// `near` is set per coefficient whose relative magnitude is <= tau.
  std::array<int, 3> coefficient_signs(const Vec3<double>& d, double tau,
                                       std::array<bool, 3>& near) const;

 private:
  std::array<Vec3<mpz_class>, 3> rows_;
  std::array<Vec3<double>, 3> approx_;
  std::array<double, 3> approx_norm_{};
  int orientation_ = 0;
};

struct TilingReport {
  std::size_t samples = 0;
  std::size_t resampled = 0;
  /// Number of faces containing a direction -> how many directions.
  std::map<std::size_t, std::size_t> histogram;
  /// First few offending directions and their containment counts.
  std::vector<Vec3<double>> violations;
  std::vector<std::size_t> violation_counts;
  std::size_t violation_total = 0;

  bool ok() const { return violation_total == 0; }
};

/// Draws `count` uniform unit directions and counts the face cones
/// containing each one. A direction within tau of any face boundary is
/// redrawn.
TilingReport sample_tiling(std::span<const FaceCone> faces, std::size_t count,
                           std::uint64_t seed, double tau = 1e-12);

/// Every 6-subset (ascending indices) with no three points collinear.
/// Throws BudgetExceeded above `max_points` points.
std::vector<std::array<std::size_t, 6>> brute_force_general_position(
    std::span<const Vec3<Rational>> points, std::size_t max_points = 25);

/// True when some four points exist with no three collinear.
bool has_k4_quadrangulation(std::span<const Vec3<Rational>> points);

/// Size of the largest collinear subset, by exhaustive pair enumeration.
std::size_t max_collinear(std::span<const Vec3<Rational>> points);

}  // namespace projtri::oracle
