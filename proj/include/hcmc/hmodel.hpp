#pragma once

// Upper half-space model of hyperbolic 3-space,
//   H^3 = {(x, y, z) : z > 0},  ds^2 = (dx^2 + dy^2 + dz^2) / z^2.
// Points, geodesics, vertical planes and the handful of isometries used by the
// cusp constructions. Everything here is a pure function of immutable values.

#include <Eigen/Core>

#include <cmath>
#include <numbers>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "hcmc/errors.hpp"
#include "hcmc/lattice.hpp"

namespace hcmc {

/// Smallest height accepted for a point; anything lower is treated as the
/// ideal boundary and rejected.
template <typename Scalar>
constexpr Scalar min_height() {
  return Scalar(1e-300);
}

template <typename Scalar>
class HPoint {
 public:
  using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

  HPoint(Scalar x, Scalar y, Scalar z) : p_(x, y, z) { validate(); }
  explicit HPoint(const Vec3& p) : p_(p) { validate(); }

  Scalar x() const { return p_.x(); }
  Scalar y() const { return p_.y(); }
  Scalar z() const { return p_.z(); }
  const Vec3& coords() const { return p_; }

  bool operator==(const HPoint&) const = default;

 private:
  void validate() const {
    using std::isfinite;
    if (!(p_.z() > Scalar(0)))
      throw InvalidArgument("HPoint: height z must be positive");
    if (p_.z() < min_height<Scalar>())
      throw DegenerateInput("HPoint: height underflows the representable range");
    if (!isfinite(double(p_.x())) || !isfinite(double(p_.y())) || !isfinite(double(p_.z())))
      throw DegenerateInput("HPoint: non-finite coordinate");
  }

  Vec3 p_;
};

using HPointd = HPoint<double>;

// ---------------------------------------------------------------------------
// Geodesics and vertical planes

template <typename Scalar>
struct VerticalLine {
  Scalar x0 = 0;
  Scalar y0 = 0;
};

/// Geodesic with two distinct ideal endpoints on z = 0.
template <typename Scalar>
class Semicircle {
 public:
  using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
  Semicircle(const Vec2& a, const Vec2& b) : a_(a), b_(b) {
    if (a == b) throw InvalidArgument("Semicircle: endpoints must be distinct");
  }
  const Vec2& a() const { return a_; }
  const Vec2& b() const { return b_; }

 private:
  Vec2 a_;
  Vec2 b_;
};

template <typename Scalar>
using Geodesic = std::variant<VerticalLine<Scalar>, Semicircle<Scalar>>;

using Geodesicd = Geodesic<double>;

/// The totally geodesic vertical plane {A x + B y + c = 0}.
template <typename Scalar>
class VerticalPlane {
 public:
  VerticalPlane(Scalar A, Scalar B, Scalar c) : A_(A), B_(B), c_(c) {
    if (A == Scalar(0) && B == Scalar(0))
      throw InvalidArgument("VerticalPlane: (A, B) must be nonzero");
  }
  Scalar A() const { return A_; }
  Scalar B() const { return B_; }
  Scalar c() const { return c_; }

  /// Signed Euclidean horizontal offset of (x, y) from the boundary line.
  Scalar offset(Scalar x, Scalar y) const {
    using std::hypot;
    return (A_ * x + B_ * y + c_) / hypot(A_, B_);
  }

 private:
  Scalar A_;
  Scalar B_;
  Scalar c_;
};

using VerticalPlaned = VerticalPlane<double>;

// ---------------------------------------------------------------------------
// Isometries as generator words

template <typename Scalar>
struct HorizontalTranslate {
  Eigen::Matrix<Scalar, 2, 1> v;
};

/// Rotation by `angle` about the vertical axis through the origin.
template <typename Scalar>
struct HorizontalRotate {
  Scalar angle;
};

/// sigma_t : p -> e^{-t} p.
template <typename Scalar>
struct Dilate {
  Scalar t;
};

/// p -> p / |p|^2, reflection in the unit hemisphere.
struct UnitSphereInversion {};

template <typename Scalar>
using Generator = std::variant<HorizontalTranslate<Scalar>, HorizontalRotate<Scalar>,
                               Dilate<Scalar>, UnitSphereInversion>;

/// An isometry of H^3 stored as a word of generators, applied first to last.
template <typename Scalar>
class Isometry {
 public:
  using Gen = Generator<Scalar>;
  using Point = HPoint<Scalar>;
  using Vec3 = typename Point::Vec3;

  Isometry() = default;
  explicit Isometry(std::vector<Gen> word) : word_(std::move(word)) {}

  static Isometry identity() { return Isometry(); }

  const std::vector<Gen>& word() const { return word_; }
  bool is_identity_word() const { return word_.empty(); }

  Point operator()(const Point& p) const {
    Vec3 q = p.coords();
    for (const Gen& g : word_) q = apply_generator(g, q);
    return Point(q);
  }

  /// `*this` followed by `next`.
  Isometry then(const Isometry& next) const {
    std::vector<Gen> w = word_;
    w.insert(w.end(), next.word_.begin(), next.word_.end());
    return Isometry(std::move(w));
  }

  Isometry inverse() const {
    std::vector<Gen> w;
    w.reserve(word_.size());
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) w.push_back(invert_generator(*it));
    return Isometry(std::move(w));
  }

  static Vec3 apply_generator(const Gen& g, const Vec3& q) {
    return std::visit(
        [&](const auto& gen) -> Vec3 {
          using G = std::decay_t<decltype(gen)>;
          using std::cos;
          using std::exp;
          using std::sin;
          if constexpr (std::is_same_v<G, HorizontalTranslate<Scalar>>) {
            return Vec3(q.x() + gen.v.x(), q.y() + gen.v.y(), q.z());
          } else if constexpr (std::is_same_v<G, HorizontalRotate<Scalar>>) {
            const Scalar c = cos(gen.angle), s = sin(gen.angle);
            return Vec3(c * q.x() - s * q.y(), s * q.x() + c * q.y(), q.z());
          } else if constexpr (std::is_same_v<G, Dilate<Scalar>>) {
            return exp(-gen.t) * q;
          } else {
            return q / q.squaredNorm();
          }
        },
        g);
  }

  static Gen invert_generator(const Gen& g) {
    return std::visit(
        [](const auto& gen) -> Gen {
          using G = std::decay_t<decltype(gen)>;
          if constexpr (std::is_same_v<G, HorizontalTranslate<Scalar>>) {
            return HorizontalTranslate<Scalar>{-gen.v};
          } else if constexpr (std::is_same_v<G, HorizontalRotate<Scalar>>) {
            return HorizontalRotate<Scalar>{-gen.angle};
          } else if constexpr (std::is_same_v<G, Dilate<Scalar>>) {
            return Dilate<Scalar>{-gen.t};
          } else {
            return UnitSphereInversion{};
          }
        },
        g);
  }

 private:
  std::vector<Gen> word_;
};

using Isometryd = Isometry<double>;

// ---------------------------------------------------------------------------
// Distances

/// Riemannian distance. Uses d = 2 asinh(|p - q| / (2 sqrt(z_p z_q))), which
/// equals arccosh(1 + |p - q|^2 / (2 z_p z_q)) without the cancellation near 0.
template <typename Scalar>
Scalar dist(const HPoint<Scalar>& p, const HPoint<Scalar>& q) {
  using std::asinh;
  using std::sqrt;
  const Scalar chord = (p.coords() - q.coords()).norm();
  return Scalar(2) * asinh(chord / (Scalar(2) * sqrt(p.z() * q.z())));
}

/// Distance to the horosphere {z = t}; depends on height only.
template <typename Scalar>
Scalar dist_to_horosphere(const HPoint<Scalar>& p, Scalar t) {
  using std::abs;
  using std::log;
  if (!(t > Scalar(0))) throw InvalidArgument("dist_to_horosphere: t must be positive");
  return abs(log(p.z() / t));
}

/// Isometry word taking g onto the vertical axis through the origin.
///
/// A vertical line needs a single translation. A semicircle from a to b is
/// translated so a sits at the origin, rotated so b lies on the positive
/// x-axis, dilated to unit diameter, inverted in the unit sphere (which sends
/// the origin to infinity and fixes (1, 0, 0)), and finally translated by (-1, 0).
template <typename Scalar>
Isometry<Scalar> normalize_to_axis(const Geodesic<Scalar>& g) {
  using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
  using Gen = Generator<Scalar>;
  if (const auto* line = std::get_if<VerticalLine<Scalar>>(&g)) {
    if (line->x0 == Scalar(0) && line->y0 == Scalar(0)) return Isometry<Scalar>::identity();
    return Isometry<Scalar>({Gen{HorizontalTranslate<Scalar>{Vec2(-line->x0, -line->y0)}}});
  }
  using std::atan2;
  using std::log;
  const auto& sc = std::get<Semicircle<Scalar>>(g);
  const Vec2 d = sc.b() - sc.a();
  std::vector<Gen> w;
  w.push_back(HorizontalTranslate<Scalar>{-sc.a()});
  w.push_back(HorizontalRotate<Scalar>{-atan2(d.y(), d.x())});
  w.push_back(Dilate<Scalar>{log(d.norm())});
  w.push_back(UnitSphereInversion{});
  w.push_back(HorizontalTranslate<Scalar>{Vec2(Scalar(-1), Scalar(0))});
  return Isometry<Scalar>(std::move(w));
}

/// Distance from p to the geodesic g: asinh(r / z) after moving g to the z-axis.
template <typename Scalar>
Scalar dist_to_geodesic(const HPoint<Scalar>& p, const Geodesic<Scalar>& g) {
  using std::asinh;
  using std::hypot;
  const HPoint<Scalar> q = normalize_to_axis(g)(p);
  return asinh(hypot(q.x(), q.y()) / q.z());
}

/// Signed distance to a vertical plane, positive on the side where
/// A x + B y + c > 0. With s the horizontal offset this is
/// atanh(s / sqrt(s^2 + z^2)) = asinh(s / z).
template <typename Scalar>
Scalar dist_to_vertical_plane(const HPoint<Scalar>& p, const VerticalPlane<Scalar>& plane) {
  using std::asinh;
  return asinh(plane.offset(p.x(), p.y()) / p.z());
}

// ---------------------------------------------------------------------------
// The cusp isometries

/// Parabolic translation tau(m, n) : p -> p + m u + n v.
template <typename Scalar>
Isometry<Scalar> tau(const Lattice<Scalar>& lattice, long m, long n) {
  if (m == 0 && n == 0) return Isometry<Scalar>::identity();
  return Isometry<Scalar>({Generator<Scalar>{HorizontalTranslate<Scalar>{lattice.vector(m, n)}}});
}

/// Hyperbolic dilation sigma_t : p -> e^{-t} p. sigma_t sigma_s = sigma_{t+s}.
template <typename Scalar>
Isometry<Scalar> sigma(Scalar t) {
  if (t == Scalar(0)) return Isometry<Scalar>::identity();
  return Isometry<Scalar>({Generator<Scalar>{Dilate<Scalar>{t}}});
}

/// Horizontal translation by an arbitrary vector.
template <typename Scalar>
Isometry<Scalar> translate(const Eigen::Matrix<Scalar, 2, 1>& v) {
  return Isometry<Scalar>({Generator<Scalar>{HorizontalTranslate<Scalar>{v}}});
}

}  // namespace hcmc
