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

#include "projtri/oracle.hpp"

#include <cmath>
#include <random>

#include "projtri/errors.hpp"

namespace projtri::oracle {

std::optional<Vec3<Rational>> cone_coefficients(const ConeQuery& q) {
  // Augmented matrix [a' b' c' | d], columns are the representatives.
  std::array<std::array<Rational, 4>, 3> m;
  for (int r = 0; r < 3; ++r) {
    m[r] = {q.a[r], q.b[r], q.c[r], q.d[r]};
  }
  for (int col = 0; col < 3; ++col) {
    int pivot = -1;
    for (int r = col; r < 3; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(m[col], m[pivot]);
    for (int r = 0; r < 3; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return Vec3<Rational>{m[0][3] / m[0][0], m[1][3] / m[1][1],
                        m[2][3] / m[2][2]};
}

Classification oracle_cone_membership(const ConeQuery& q) {
  auto coef = cone_coefficients(q);
  if (!coef) {
    throw Error(ErrorKind::singular_frame,
                "cone representatives are linearly dependent");
  }
  const int sa = sgn((*coef)[0]);
  const int sb = sgn((*coef)[1]);
  const int sc = sgn((*coef)[2]);
  const int zeros = (sa == 0) + (sb == 0) + (sc == 0);
  if (zeros == 0) {
    return (sa == sb && sb == sc) ? Classification::inside()
                                  : Classification::outside();
  }
  if (zeros == 1) {
    // Edge opposite the vanishing coefficient: c' -> ab, a' -> bc, b' -> ca.
    if (sc == 0) return sa == sb ? Classification::on_edge(0)
                                 : Classification::outside();
    if (sa == 0) return sb == sc ? Classification::on_edge(1)
                                 : Classification::outside();
    return sc == sa ? Classification::on_edge(2) : Classification::outside();
  }
  if (zeros == 2) {
    if (sa != 0) return Classification::on_vertex(0);
    if (sb != 0) return Classification::on_vertex(1);
    return Classification::on_vertex(2);
  }
  throw Error(ErrorKind::invalid_argument, "query direction is zero");
}

FaceCone::FaceCone(const Vec3<Rational>& a, const Vec3<Rational>& b,
                   const Vec3<Rational>& c) {
  Vec3<mpz_class> ia = ExactKernel::from_rational(a);
  Vec3<mpz_class> ib = ExactKernel::from_rational(b);
  Vec3<mpz_class> ic = ExactKernel::from_rational(c);
  orientation_ = sgn(det3(ia, ib, ic));
  if (orientation_ == 0) {
    throw Error(ErrorKind::singular_frame,
                "cone representatives are linearly dependent");
  }
  rows_ = {cross(ib, ic), cross(ic, ia), cross(ia, ib)};
  for (int i = 0; i < 3; ++i) {
    approx_[i] = approximate_direction(rows_[i]);
    approx_norm_[i] = norm(approx_[i]);
  }
}

std::array<int, 3> FaceCone::coefficient_signs(const Vec3<double>& d,
                                               double tau,
                                               std::array<bool, 3>& near) const {
  constexpr double kEps = 0x1p-53;
  const double d_abs = std::abs(d[0]) + std::abs(d[1]) + std::abs(d[2]);
  const double d_norm = norm(d);
  std::array<int, 3> out{};
  for (int i = 0; i < 3; ++i) {
    const Vec3<double>& r = approx_[i];
    const double v = r[0] * d[0] + r[1] * d[1] + r[2] * d[2];
    const double mag = std::abs(r[0] * d[0]) + std::abs(r[1] * d[1]) +
                       std::abs(r[2] * d[2]);
    const double r_max =
        std::max({std::abs(r[0]), std::abs(r[1]), std::abs(r[2])});
    // Rounding of the products and sums, plus the truncation made when the
    // exact row was scaled down to double range.
    const double bound = 8 * kEps * mag + 4 * kEps * r_max * d_abs + 1e-300;
    int s;
    if (std::abs(v) > bound) {
      s = sign_of(v);
    } else {
      Vec3<Rational> dq = to_rational(d);
      Rational exact = Rational(rows_[i][0]) * dq[0] +
                       Rational(rows_[i][1]) * dq[1] +
                       Rational(rows_[i][2]) * dq[2];
      s = sgn(exact);
    }
    near[i] = std::abs(v) <= tau * approx_norm_[i] * d_norm;
    out[i] = s * orientation_;
  }
  return out;
}

TilingReport sample_tiling(std::span<const FaceCone> faces, std::size_t count,
                           std::uint64_t seed, double tau) {
  TilingReport report;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  constexpr std::size_t kMaxViolationsKept = 16;

  auto draw = [&] {
    for (;;) {
      Vec3<double> d{gauss(rng), gauss(rng), gauss(rng)};
      double n = norm(d);
      if (n > 1e-6) return Vec3<double>{d[0] / n, d[1] / n, d[2] / n};
    }
  };

  for (std::size_t sample = 0; sample < count; ++sample) {
    std::size_t inside = 0;
    for (int attempt = 0;; ++attempt) {
      Vec3<double> d = draw();
      inside = 0;
      bool proximal = false;
      for (const FaceCone& face : faces) {
        std::array<bool, 3> near{};
        std::array<int, 3> s = face.coefficient_signs(d, tau, near);
        if (s[0] != 0 && s[0] == s[1] && s[1] == s[2] && !near[0] &&
            !near[1] && !near[2]) {
          ++inside;
          continue;
        }
        // Near or on the boundary when every clearly nonzero coefficient
        // agrees and the rest are tiny.
        int agreed = 0;
        bool any_small = false;
        bool consistent = true;
        for (int i = 0; i < 3; ++i) {
          if (s[i] == 0 || near[i]) {
            any_small = true;
            continue;
          }
          if (agreed == 0) agreed = s[i];
          else if (agreed != s[i]) consistent = false;
        }
        if (any_small && consistent) {
          proximal = true;
          break;
        }
      }
      if (!proximal) {
        ++report.histogram[inside];
        if (inside != 1) {
          ++report.violation_total;
          if (report.violations.size() < kMaxViolationsKept) {
            report.violations.push_back(d);
            report.violation_counts.push_back(inside);
          }
        }
        break;
      }
      ++report.resampled;
      if (attempt > 1000) {
        throw Error(ErrorKind::budget_exceeded,
                    "could not draw a direction away from face boundaries");
      }
    }
    ++report.samples;
  }
  return report;
}

namespace {

using ExactPoint = ProjectivePoint<ExactKernel>;

std::vector<ExactPoint> to_points(std::span<const Vec3<Rational>> points) {
  std::vector<ExactPoint> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(ExactPoint::from_rational(p));
  return out;
}

}  // namespace

std::vector<std::array<std::size_t, 6>> brute_force_general_position(
    std::span<const Vec3<Rational>> points, std::size_t max_points) {
  const std::size_t n = points.size();
  if (n > max_points) {
    throw Error(ErrorKind::budget_exceeded,
                std::to_string(n) + " points exceed the enumeration budget of " +
                    std::to_string(max_points));
  }
  std::vector<ExactPoint> pts = to_points(points);
  std::vector<char> col(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        col[(i * n + j) * n + k] = collinear(pts[i], pts[j], pts[k]);
  auto is_col = [&](std::size_t i, std::size_t j, std::size_t k) {
    return col[(i * n + j) * n + k] != 0;
  };

  std::vector<std::array<std::size_t, 6>> out;
  std::array<std::size_t, 6> chosen{};
  auto compatible = [&](std::size_t depth, std::size_t cand) {
    for (std::size_t x = 0; x < depth; ++x)
      for (std::size_t y = x + 1; y < depth; ++y)
        if (is_col(chosen[x], chosen[y], cand)) return false;
    // Equal points are collinear with anything; reject repeats outright.
    for (std::size_t x = 0; x < depth; ++x)
      if (pts[chosen[x]] == pts[cand]) return false;
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
    if (depth == 6) {
      out.push_back(chosen);
      return;
    }
    for (std::size_t cand = from; cand < n; ++cand) {
      if (!compatible(depth, cand)) continue;
      chosen[depth] = cand;
      self(self, depth + 1, cand + 1);
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

bool has_k4_quadrangulation(std::span<const Vec3<Rational>> points) {
  std::vector<ExactPoint> p = to_points(points);
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        if (collinear(p[a], p[b], p[c])) continue;
        for (std::size_t d = c + 1; d < n; ++d) {
          if (!collinear(p[a], p[b], p[d]) && !collinear(p[a], p[c], p[d]) &&
              !collinear(p[b], p[c], p[d])) {
            return true;
          }
        }
      }
  return false;
}

std::size_t max_collinear(std::span<const Vec3<Rational>> points) {
  std::vector<ExactPoint> p = to_points(points);
  const std::size_t n = p.size();
  if (n <= 2) return n;
  std::size_t best = 2;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (p[a] == p[b]) continue;
      std::size_t count = 0;
      for (std::size_t c = 0; c < n; ++c) count += collinear(p[a], p[b], p[c]);
      best = std::max(best, count);
    }
  return best;
}

}  // namespace projtri::oracle
