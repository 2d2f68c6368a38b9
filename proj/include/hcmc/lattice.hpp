#pragma once

#include <Eigen/Core>

#include <cmath>

#include "hcmc/errors.hpp"

namespace hcmc {

/// Rank-2 horizontal lattice generated by u and v; the deck group G(u,v) of a cusp end.
template <typename Scalar>
class Lattice {
 public:
  using Vec2 = Eigen::Matrix<Scalar, 2, 1>;

  Lattice(const Vec2& u, const Vec2& v) : u_(u), v_(v) {
    if (!(std::abs(det()) > Scalar(0)) || !std::isfinite(double(det())))
      throw InvalidArgument("Lattice: u and v must be linearly independent");
  }

  const Vec2& u() const { return u_; }
  const Vec2& v() const { return v_; }

  /// u_x v_y - u_y v_x.
  Scalar det() const { return u_.x() * v_.y() - u_.y() * v_.x(); }

  /// m u + n v, evaluated componentwise in a fixed order.
  Vec2 vector(long m, long n) const {
    const Scalar ms = Scalar(m), ns = Scalar(n);
    return Vec2(ms * u_.x() + ns * v_.x(), ms * u_.y() + ns * v_.y());
  }

 private:
  Vec2 u_;
  Vec2 v_;
};

using Latticed = Lattice<double>;

}  // namespace hcmc
