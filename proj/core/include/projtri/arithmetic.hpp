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

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstdlib>
#include <string>
#include <string_view>

namespace projtri {

enum class Arithmetic { exact, floating };

std::string_view to_string(Arithmetic mode);
Arithmetic arithmetic_from_string(std::string_view text);

template <typename T>
using Vec3 = std::array<T, 3>;

using Rational = mpq_class;

/// Parses an integer, a decimal ("-1.25", "3e-2") or a fraction ("p/q").
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

template <typename T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {T(a[1] * b[2] - a[2] * b[1]), T(a[2] * b[0] - a[0] * b[2]),
          T(a[0] * b[1] - a[1] * b[0])};
}

template <typename T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return T(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]);
}

template <typename T>
T det3(const Vec3<T>& a, const Vec3<T>& b, const Vec3<T>& c) {
  return dot(a, cross(b, c));
}

template <typename T>
Vec3<T> negated(const Vec3<T>& v) {
  return {T(-v[0]), T(-v[1]), T(-v[2])};
}

template <typename T>
Vec3<T> add(const Vec3<T>& a, const Vec3<T>& b) {
  return {T(a[0] + b[0]), T(a[1] + b[1]), T(a[2] + b[2])};
}

template <typename T, typename S>
Vec3<T> scaled(const Vec3<T>& v, const S& s) {
  return {T(v[0] * s), T(v[1] * s), T(v[2] * s)};
}

template <typename T>
bool is_zero(const Vec3<T>& v) {
  return v[0] == 0 && v[1] == 0 && v[2] == 0;
}

inline int sign_of(double v) { return (v > 0) - (v < 0); }
inline int sign_of(const mpz_class& v) { return sgn(v); }
inline int sign_of(const mpq_class& v) { return sgn(v); }

inline double norm(const Vec3<double>& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

/// Approximate direction of an integer vector, rescaled so huge entries do
/// not overflow. The result is parallel to `v` to double precision.
Vec3<double> approximate_direction(const Vec3<mpz_class>& v);
Vec3<double> approximate_direction(const Vec3<Rational>& v);

Vec3<Rational> to_rational(const Vec3<mpz_class>& v);
Vec3<Rational> to_rational(const Vec3<double>& v);

/// Exact arithmetic over arbitrary-precision integers. Homogeneous triples
/// with rational entries are cleared of denominators on entry, so every
/// predicate runs fraction-free.
struct ExactKernel {
  using Coord = mpz_class;
  static constexpr Arithmetic arithmetic = Arithmetic::exact;

  int sign(const Coord& value, const Vec3<Coord>& /*context*/) const {
    return sgn(value);
  }
  int sign_dot(const Vec3<Coord>& a, const Vec3<Coord>& b) const {
    return sgn(dot(a, b));
  }
  int sign_det(const Vec3<Coord>& a, const Vec3<Coord>& b,
               const Vec3<Coord>& c) const {
    return sgn(det3(a, b, c));
  }
  bool parallel(const Vec3<Coord>& a, const Vec3<Coord>& b) const {
    return is_zero(cross(a, b));
  }

  /// Primitive integer representative: gcd 1, first nonzero entry positive.
  static Vec3<Coord> canonical(Vec3<Coord> v);
  static Vec3<Coord> from_rational(const Vec3<Rational>& v);
  static Vec3<Rational> to_rational(const Vec3<Coord>& v) {
    return projtri::to_rational(v);
  }
  static Vec3<double> to_double(const Vec3<Coord>& v) {
    return approximate_direction(v);
  }
  /// Positive rescaling that keeps plane normals small.
  static Vec3<Coord> reduce_positive(Vec3<Coord> v);
};

/// Binary floating point with a relative tolerance on every sign decision.
struct FloatKernel {
  using Coord = double;
  static constexpr Arithmetic arithmetic = Arithmetic::floating;

  double tolerance = 1e-12;

  /// Sign of one entry of `context`, zero when small relative to the vector.
  int sign(double value, const Vec3<double>& context) const {
    return std::abs(value) <= tolerance * norm(context) ? 0 : sign_of(value);
  }
  int sign_dot(const Vec3<double>& a, const Vec3<double>& b) const {
    double v = dot(a, b);
    return std::abs(v) <= tolerance * norm(a) * norm(b) ? 0 : sign_of(v);
  }
  int sign_det(const Vec3<double>& a, const Vec3<double>& b,
               const Vec3<double>& c) const {
    double v = det3(a, b, c);
    return std::abs(v) <= tolerance * norm(a) * norm(b) * norm(c)
               ? 0
               : sign_of(v);
  }
  bool parallel(const Vec3<double>& a, const Vec3<double>& b) const {
    return norm(cross(a, b)) <= tolerance * norm(a) * norm(b);
  }

  /// Divides by the first nonzero entry so that entry becomes +1.
  static Vec3<Coord> canonical(Vec3<Coord> v);
  static Vec3<Coord> from_rational(const Vec3<Rational>& v);
  static Vec3<Rational> to_rational(const Vec3<Coord>& v) {
    return projtri::to_rational(v);
  }
  static Vec3<double> to_double(const Vec3<Coord>& v) { return v; }
  static Vec3<Coord> reduce_positive(Vec3<Coord> v);
};

template <typename K>
concept Kernel = requires(const K& k, const typename K::Coord& c,
                          const Vec3<typename K::Coord>& v) {
  { K::arithmetic } -> std::convertible_to<Arithmetic>;
  { k.sign(c, v) } -> std::convertible_to<int>;
  { k.sign_dot(v, v) } -> std::convertible_to<int>;
  { k.sign_det(v, v, v) } -> std::convertible_to<int>;
  { k.parallel(v, v) } -> std::convertible_to<bool>;
  { K::canonical(v) } -> std::same_as<Vec3<typename K::Coord>>;
};

}  // namespace projtri
