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
#include <ostream>
#include <string>

#include "projtri/arithmetic.hpp"
#include "projtri/errors.hpp"

namespace projtri {

struct PointTag {};
struct LineTag {};

/// A nonzero homogeneous triple taken up to nonzero scale. The stored
/// coordinates are the kernel's canonical representative, so `==` is
/// projective equality in exact mode.
template <Kernel K, typename Tag>
class Homogeneous {
 public:
  using Coord = typename K::Coord;

  explicit Homogeneous(Vec3<Coord> coords)
      : coords_(K::canonical(std::move(coords))) {}

  static Homogeneous from_rational(const Vec3<Rational>& coords) {
    return Homogeneous(K::from_rational(coords));
  }

  const Vec3<Coord>& coords() const { return coords_; }
  const Coord& operator[](int i) const { return coords_[i]; }

  /// Representative whose first nonzero coordinate is exactly 1.
  Vec3<Rational> canonical_rational() const {
    Vec3<Rational> r = K::to_rational(coords_);
    for (const auto& c : r) {
      if (c != 0) {
        Rational lead = c;
        for (auto& x : r) x /= lead;
        break;
      }
    }
    return r;
  }

  friend bool operator==(const Homogeneous&, const Homogeneous&) = default;

 private:
  Vec3<Coord> coords_;
};

template <Kernel K>
using ProjectivePoint = Homogeneous<K, PointTag>;
template <Kernel K>
using ProjectiveLine = Homogeneous<K, LineTag>;

template <Kernel K, typename Tag>
std::ostream& operator<<(std::ostream& os, const Homogeneous<K, Tag>& h) {
  const bool point = std::is_same_v<Tag, PointTag>;
  os << (point ? '(' : '[') << h[0] << ", " << h[1] << ", " << h[2]
     << (point ? ')' : ']');
  return os;
}

/// Plane through the origin of R^3, stored by its normal. Only positive
/// rescaling is applied, so the side a representative falls on is kept.
template <Kernel K>
class DistinguishingPlane {
 public:
  using Coord = typename K::Coord;

  explicit DistinguishingPlane(Vec3<Coord> normal)
      : normal_(K::reduce_positive(std::move(normal))) {}

  const Vec3<Coord>& normal() const { return normal_; }

  /// +1, -1 or 0 for the side of the representative `v`.
  int side(const Vec3<Coord>& v, const K& k = K{}) const {
    return k.sign_dot(normal_, v);
  }

  /// The representative of `p` on the positive side. Requires side != 0.
  Vec3<Coord> lift(const Vec3<Coord>& v, const K& k = K{}) const {
    return side(v, k) < 0 ? negated(v) : v;
  }

  /// No vertex lies on the plane, so each has a copy strictly on the
  /// positive side and the triangle's two copies are separated.
  template <typename Tag>
  bool separates(const Homogeneous<K, Tag>& a, const Homogeneous<K, Tag>& b,
                 const Homogeneous<K, Tag>& c, const K& k = K{}) const {
    return side(a.coords(), k) != 0 && side(b.coords(), k) != 0 &&
           side(c.coords(), k) != 0;
  }

  friend bool operator==(const DistinguishingPlane&,
                         const DistinguishingPlane&) = default;

 private:
  Vec3<Coord> normal_;
};

template <Kernel K>
bool equivalent(const ProjectivePoint<K>& p, const ProjectivePoint<K>& q,
                const K& k = K{}) {
  return k.parallel(p.coords(), q.coords());
}

template <Kernel K>
bool equivalent(const ProjectiveLine<K>& p, const ProjectiveLine<K>& q,
                const K& k = K{}) {
  return k.parallel(p.coords(), q.coords());
}

template <Kernel K>
ProjectiveLine<K> join(const ProjectivePoint<K>& p, const ProjectivePoint<K>& q,
                       const K& k = K{}) {
  if (k.parallel(p.coords(), q.coords())) {
    throw Error(ErrorKind::degenerate_join, "points coincide");
  }
  return ProjectiveLine<K>(cross(p.coords(), q.coords()));
}

template <Kernel K>
ProjectivePoint<K> meet(const ProjectiveLine<K>& l, const ProjectiveLine<K>& m,
                        const K& k = K{}) {
  if (k.parallel(l.coords(), m.coords())) {
    throw Error(ErrorKind::degenerate_meet, "lines coincide");
  }
  return ProjectivePoint<K>(cross(l.coords(), m.coords()));
}

template <Kernel K>
bool incident(const ProjectivePoint<K>& p, const ProjectiveLine<K>& l,
              const K& k = K{}) {
  return k.sign_dot(p.coords(), l.coords()) == 0;
}

template <Kernel K>
bool collinear(const ProjectivePoint<K>& p, const ProjectivePoint<K>& q,
               const ProjectivePoint<K>& r, const K& k = K{}) {
  return k.sign_det(p.coords(), q.coords(), r.coords()) == 0;
}

template <typename T>
using Mat3 = std::array<Vec3<T>, 3>;

template <typename T>
Vec3<T> column(const Mat3<T>& m, int j) {
  return {m[0][j], m[1][j], m[2][j]};
}

/// Which of the three plane-aligning rotations applies to a normal.
enum class TransformCase { gamma_nonzero, beta_nonzero, x_axis };

/// The rotation M with M * p' = p that takes the plane with normal
/// (alpha, beta, gamma) to z' = 0. Columns are orthonormal, det M = +1.
Mat3<double> plane_transform(const Vec3<double>& normal);
TransformCase transform_case(const Vec3<double>& normal);

inline Mat3<double> plane_transform(
    const DistinguishingPlane<FloatKernel>& plane) {
  return plane_transform(plane.normal());
}

/// Rows map a representative to plane-aligned coordinates (x', y', z').
/// In exact mode the rows are the rotation's columns without their square
/// root normalizers; every sign used downstream is invariant under that
/// positive rescaling.
template <Kernel K>
struct PlaneFrame {
  using Coord = typename K::Coord;
  Mat3<Coord> rows;

  Vec3<Coord> align(const Vec3<Coord>& p) const {
    return {dot(rows[0], p), dot(rows[1], p), dot(rows[2], p)};
  }
};

template <Kernel K>
PlaneFrame<K> plane_frame(const DistinguishingPlane<K>& plane,
                          const K& k = K{}) {
  using C = typename K::Coord;
  const auto& n = plane.normal();
  if constexpr (K::arithmetic == Arithmetic::exact) {
    const C& a = n[0];
    const C& b = n[1];
    const C& g = n[2];
    if (g != 0) {
      C bg = b * b + g * g;
      return {{Vec3<C>{0, g, C(-b)}, Vec3<C>{C(-bg), C(a * b), C(a * g)},
               Vec3<C>{a, b, g}}};
    }
    if (b != 0) {
      return {{Vec3<C>{b, C(-a), 0}, Vec3<C>{0, 0, -1}, Vec3<C>{a, b, 0}}};
    }
    return {{Vec3<C>{0, 1, 0}, Vec3<C>{0, 0, 1}, Vec3<C>{1, 0, 0}}};
  } else {
    (void)k;
    Mat3<double> m = plane_transform(n);
    return {{column(m, 0), column(m, 1), column(m, 2)}};
  }
}

/// Branch taken by the s-mapping: z' != 0, then z' = 0 and x' != 0, then
/// z' = x' = 0.
enum class SBranch { finite, infinite_x, infinite_y };

/// Image of a point under the s-mapping, stored as numer / denom so exact
/// mode stays fraction-free. Float mode keeps denom = 1.
template <Kernel K>
struct SMapped {
  using Coord = typename K::Coord;
  Vec3<Coord> numer;
  Coord denom;
  SBranch branch;

  Vec3<Rational> value() const {
    Vec3<Rational> v = K::to_rational(numer);
    Rational d = Rational(denom);
    for (auto& c : v) c /= d;
    return v;
  }
};

/// s-mapping of plane-aligned coordinates.
template <Kernel K>
SMapped<K> s_map_aligned(const Vec3<typename K::Coord>& p, const K& k = K{}) {
  using C = typename K::Coord;
  const C& x = p[0];
  const C& y = p[1];
  const C& z = p[2];
  if constexpr (K::arithmetic == Arithmetic::exact) {
    if (z != 0) return {{z, x, y}, z, SBranch::finite};
    if (x != 0) return {{0, x, y}, x, SBranch::infinite_x};
    return {{0, 0, y}, y, SBranch::infinite_y};
  } else {
    if (k.sign(z, p) != 0) return {{1.0, x / z, y / z}, 1.0, SBranch::finite};
    if (k.sign(x, p) != 0) {
      return {{0.0, 1.0, y / x}, 1.0, SBranch::infinite_x};
    }
    return {{0.0, 0.0, 1.0}, 1.0, SBranch::infinite_y};
  }
}

template <Kernel K>
SMapped<K> s_map(const ProjectivePoint<K>& p, const DistinguishingPlane<K>& plane,
                 const K& k = K{}) {
  return s_map_aligned(plane_frame(plane, k).align(p.coords()), k);
}

/// Sign of the 3x3 determinant with rows s0, s1, s2.
template <Kernel K>
int s_det_sign(const SMapped<K>& s0, const SMapped<K>& s1, const SMapped<K>& s2,
               const K& k = K{}) {
  int d = k.sign_det(s0.numer, s1.numer, s2.numer);
  if constexpr (K::arithmetic == Arithmetic::exact) {
    d *= sgn(s0.denom) * sgn(s1.denom) * sgn(s2.denom);
  }
  return d;
}

/// Outcome of the in-triangle test. `index` names the edge (v[i], v[i+1])
/// for on_edge and the vertex v[i] for on_vertex.
struct Classification {
  enum class Kind { inside, on_edge, on_vertex, outside };
  Kind kind = Kind::outside;
  int index = -1;

  static Classification inside() { return {Kind::inside, -1}; }
  static Classification on_edge(int i) { return {Kind::on_edge, i}; }
  static Classification on_vertex(int i) { return {Kind::on_vertex, i}; }
  static Classification outside() { return {Kind::outside, -1}; }

  bool is_inside() const { return kind == Kind::inside; }
  bool is_on_edge() const { return kind == Kind::on_edge; }
  bool is_on_vertex() const { return kind == Kind::on_vertex; }
  bool is_outside() const { return kind == Kind::outside; }

  friend bool operator==(const Classification&, const Classification&) =
      default;
};

std::string to_string(const Classification& c);
std::ostream& operator<<(std::ostream& os, const Classification& c);

/// Classification from the three determinant signs d0, d1, d2.
Classification classify_signs(int d0, int d1, int d2);

/// A triangle with its distinguishing plane, prepared for repeated
/// in-triangle queries.
template <Kernel K>
class TriangleFrame {
 public:
  TriangleFrame(const ProjectivePoint<K>& a, const ProjectivePoint<K>& b,
                const ProjectivePoint<K>& c,
                const DistinguishingPlane<K>& plane, const K& k = K{})
      : kernel_(k),
        frame_(plane_frame(plane, k)),
        degenerate_(collinear(a, b, c, k)) {
    s_[0] = s_map_aligned(frame_.align(a.coords()), k);
    s_[1] = s_map_aligned(frame_.align(b.coords()), k);
    s_[2] = s_map_aligned(frame_.align(c.coords()), k);
  }

  Classification classify(const ProjectivePoint<K>& p) const {
    return classify(p.coords());
  }

  Classification classify(const Vec3<typename K::Coord>& p) const {
    SMapped<K> s = s_map_aligned(frame_.align(p), kernel_);
    if (s.branch != SBranch::finite && s_[0].branch != SBranch::finite &&
        s_[1].branch != SBranch::finite && s_[2].branch != SBranch::finite) {
      throw Error(ErrorKind::all_at_infinity,
                  "triangle and query all lie on the distinguishing plane");
    }
    if (degenerate_) {
      throw Error(ErrorKind::degenerate_triangle, "triangle vertices collinear");
    }
    return classify_signs(s_det_sign(s_[0], s_[1], s, kernel_),
                          s_det_sign(s_[1], s_[2], s, kernel_),
                          s_det_sign(s_[2], s_[0], s, kernel_));
  }

  const SMapped<K>& vertex_image(int i) const { return s_[i]; }

 private:
  K kernel_;
  PlaneFrame<K> frame_;
  bool degenerate_;
  std::array<SMapped<K>, 3> s_{};
};

/// In-triangle test of point p against triangle abc with the given
/// distinguishing plane.
template <Kernel K>
Classification classify(const ProjectivePoint<K>& a, const ProjectivePoint<K>& b,
                        const ProjectivePoint<K>& c, const ProjectivePoint<K>& p,
                        const DistinguishingPlane<K>& plane, const K& k = K{}) {
  return TriangleFrame<K>(a, b, c, plane, k).classify(p);
}

/// Normal of the origin plane parallel to the plane through a', b', c',
/// oriented so all three representatives are on its positive side.
template <Kernel K>
DistinguishingPlane<K> distinguishing_plane_for(
    const Vec3<typename K::Coord>& a, const Vec3<typename K::Coord>& b,
    const Vec3<typename K::Coord>& c, const K& k = K{}) {
  int orientation = k.sign_det(a, b, c);
  if (orientation == 0) {
    throw Error(ErrorKind::degenerate_triangle,
                "representatives are linearly dependent");
  }
  Vec3<typename K::Coord> n = add(add(cross(b, c), cross(c, a)), cross(a, b));
  return DistinguishingPlane<K>(orientation > 0 ? n : negated(n));
}

}  // namespace projtri
