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

#include "projtri/arithmetic.hpp"

#include <cctype>

#include "projtri/errors.hpp"

namespace projtri {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw Error(ErrorKind::parse_error,
                "not a number: '" + std::string(whole) + "'");
  }
  std::string buf(s.front() == '+' ? s.substr(1) : s);
  return mpz_class(buf, 10);
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

std::string_view to_string(Arithmetic mode) {
  return mode == Arithmetic::exact ? "exact" : "float";
}

Arithmetic arithmetic_from_string(std::string_view text) {
  if (text == "exact") return Arithmetic::exact;
  if (text == "float") return Arithmetic::floating;
  throw Error(ErrorKind::invalid_argument,
              "unknown arithmetic mode '" + std::string(text) + "'");
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw Error(ErrorKind::parse_error, "empty number");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(trim(s.substr(0, slash)), s);
    mpz_class den = parse_integer(trim(s.substr(slash + 1)), s);
    if (den == 0) {
      throw Error(ErrorKind::parse_error,
                  "zero denominator in '" + std::string(s) + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view mantissa = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    mpz_class exp = parse_integer(s.substr(e + 1), text);
    if (!exp.fits_slong_p() || abs(exp) > 100000) {
      throw Error(ErrorKind::parse_error,
                  "exponent out of range in '" + std::string(text) + "'");
    }
    exponent = exp.get_si();
  }
  std::string_view int_part = mantissa;
  std::string_view frac_part;
  if (auto dot_pos = mantissa.find('.'); dot_pos != std::string_view::npos) {
    int_part = mantissa.substr(0, dot_pos);
    frac_part = mantissa.substr(dot_pos + 1);
  }
  if ((int_part.empty() && frac_part.empty()) ||
      (!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw Error(ErrorKind::parse_error,
                "not a number: '" + std::string(text) + "'");
  }
  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class value(digits, 10);
  if (negative) value = -value;
  exponent -= static_cast<long>(frac_part.size());

  Rational r;
  if (exponent >= 0) {
    r = Rational(value * pow10(static_cast<unsigned long>(exponent)));
  } else {
    r = Rational(value, pow10(static_cast<unsigned long>(-exponent)));
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  return r.get_str();
}

Vec3<double> approximate_direction(const Vec3<mpz_class>& v) {
  size_t bits = 0;
  for (const auto& c : v) {
    if (c != 0) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  }
  const size_t shift = bits > 60 ? bits - 60 : 0;
  Vec3<double> out{};
  for (int i = 0; i < 3; ++i) {
    mpz_class t;
    mpz_tdiv_q_2exp(t.get_mpz_t(), v[i].get_mpz_t(), shift);
    out[i] = t.get_d();
  }
  return out;
}

Vec3<double> approximate_direction(const Vec3<Rational>& v) {
  return approximate_direction(ExactKernel::from_rational(v));
}

Vec3<Rational> to_rational(const Vec3<mpz_class>& v) {
  return {Rational(v[0]), Rational(v[1]), Rational(v[2])};
}

Vec3<Rational> to_rational(const Vec3<double>& v) {
  for (double c : v) {
    if (!std::isfinite(c)) {
      throw Error(ErrorKind::invalid_argument, "non-finite coordinate");
    }
  }
  return {Rational(v[0]), Rational(v[1]), Rational(v[2])};
}

Vec3<mpz_class> ExactKernel::canonical(Vec3<mpz_class> v) {
  v = reduce_positive(std::move(v));
  for (const auto& c : v) {
    if (c != 0) {
      if (c < 0) v = negated(v);
      break;
    }
  }
  return v;
}

Vec3<mpz_class> ExactKernel::reduce_positive(Vec3<mpz_class> v) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), v[0].get_mpz_t(), v[1].get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[2].get_mpz_t());
  if (g == 0) throw Error(ErrorKind::invalid_argument, "zero vector");
  if (g != 1) {
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return v;
}

Vec3<mpz_class> ExactKernel::from_rational(const Vec3<Rational>& v) {
  mpz_class l = 1;
  for (const auto& c : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Vec3<mpz_class> out;
  for (int i = 0; i < 3; ++i) {
    mpz_class factor;
    mpz_divexact(factor.get_mpz_t(), l.get_mpz_t(), v[i].get_den_mpz_t());
    out[i] = v[i].get_num() * factor;
  }
  if (is_zero(out)) return out;
  return reduce_positive(std::move(out));
}

Vec3<double> FloatKernel::canonical(Vec3<double> v) {
  for (double c : v) {
    if (!std::isfinite(c)) {
      throw Error(ErrorKind::invalid_argument, "non-finite coordinate");
    }
  }
  for (double c : v) {
    if (c != 0.0) {
      return {v[0] / c, v[1] / c, v[2] / c};
    }
  }
  throw Error(ErrorKind::invalid_argument, "zero vector");
}

Vec3<double> FloatKernel::from_rational(const Vec3<Rational>& v) {
  Vec3<double> out{v[0].get_d(), v[1].get_d(), v[2].get_d()};
  for (int i = 0; i < 3; ++i) {
    if (!std::isfinite(out[i]) || (out[i] == 0.0 && v[i] != 0)) {
      throw Error(ErrorKind::invalid_argument,
                  "coordinate not representable as a finite double: " +
                      v[i].get_str());
    }
  }
  return out;
}

Vec3<double> FloatKernel::reduce_positive(Vec3<double> v) {
  double n = norm(v);
  if (n == 0.0 || !std::isfinite(n)) {
    throw Error(ErrorKind::invalid_argument, "zero or non-finite vector");
  }
  return {v[0] / n, v[1] / n, v[2] / n};
}

}  // namespace projtri
