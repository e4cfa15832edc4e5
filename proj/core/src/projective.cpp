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

#include "projtri/projective.hpp"

#include <sstream>

namespace projtri {

TransformCase transform_case(const Vec3<double>& normal) {
  double scale = std::max({std::abs(normal[0]), std::abs(normal[1]),
                           std::abs(normal[2])});
  if (scale == 0.0 || !std::isfinite(scale)) {
    throw Error(ErrorKind::invalid_argument, "plane normal must be nonzero");
  }
  const double b = normal[1] / scale;
  const double g = normal[2] / scale;
  if (g != 0.0 && b * b + g * g > 0.0) return TransformCase::gamma_nonzero;
  if (b != 0.0) return TransformCase::beta_nonzero;
  return TransformCase::x_axis;
}

Mat3<double> plane_transform(const Vec3<double>& normal) {
  const TransformCase which = transform_case(normal);
  double scale = std::max({std::abs(normal[0]), std::abs(normal[1]),
                           std::abs(normal[2])});
  const double a = normal[0] / scale;
  const double b = normal[1] / scale;
  const double g = normal[2] / scale;

  switch (which) {
    case TransformCase::gamma_nonzero: {
      const double bg = b * b + g * g;
      const double s1 = std::sqrt(bg);
      const double s = std::sqrt(a * a + bg);
      const double s12 = s1 * s;
      return {{{0.0, -bg / s12, a / s},
               {g / s1, a * b / s12, b / s},
               {-b / s1, a * g / s12, g / s}}};
    }
    case TransformCase::beta_nonzero: {
      const double r = std::sqrt(a * a + b * b);
      return {{{b / r, 0.0, a / r}, {-a / r, 0.0, b / r}, {0.0, -1.0, 0.0}}};
    }
    case TransformCase::x_axis:
      break;
  }
  return {{{0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}};
}

Classification classify_signs(int d0, int d1, int d2) {
  const int zeros = (d0 == 0) + (d1 == 0) + (d2 == 0);
  const int sum = d0 + d1 + d2;
  if (zeros == 0 && (sum == 3 || sum == -3)) return Classification::inside();
  if (zeros == 1 && (sum == 2 || sum == -2)) {
    return Classification::on_edge(d0 == 0 ? 0 : (d1 == 0 ? 1 : 2));
  }
  if (zeros == 2) {
    if (d1 != 0) return Classification::on_vertex(0);
    if (d2 != 0) return Classification::on_vertex(1);
    return Classification::on_vertex(2);
  }
  return Classification::outside();
}

std::string to_string(const Classification& c) {
  switch (c.kind) {
    case Classification::Kind::inside: return "Inside";
    case Classification::Kind::on_edge:
      return "OnEdge(" + std::to_string(c.index) + ")";
    case Classification::Kind::on_vertex:
      return "OnVertex(" + std::to_string(c.index) + ")";
    case Classification::Kind::outside: return "Outside";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Classification& c) {
  return os << to_string(c);
}

}  // namespace projtri
