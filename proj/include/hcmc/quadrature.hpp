#pragma once

#include <array>
#include <cmath>
#include <string>

#include "hcmc/errors.hpp"

namespace hcmc {

struct QuadratureResult {
  double value = 0;
  double error = 0;  ///< estimated absolute error
  int intervals = 0;
};

namespace detail {

// Gauss-Kronrod 7/15 nodes on [-1, 1] (nonnegative half) and weights.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
void gk15(F& f, double a, double b, double& kronrod, double& gauss) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  kronrod = fc * kKronrodWeights[7];
  gauss = fc * kGaussWeights[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kKronrodNodes[static_cast<size_t>(i)];
    const double sum = f(c - dx) + f(c + dx);
    kronrod += kKronrodWeights[static_cast<size_t>(i)] * sum;
    if (i % 2 == 1) gauss += kGaussWeights[static_cast<size_t>(i / 2)] * sum;
  }
  kronrod *= h;
  gauss *= h;
}

template <typename F>
void adapt(F& f, double a, double b, double tol, int depth, QuadratureResult& out) {
  double k = 0, g = 0;
  gk15(f, a, b, k, g);
  const double err = std::abs(k - g);
  if (err <= tol || depth == 0) {
    if (err > tol) throw DegenerateInput("integrate: recursion limit reached before tolerance");
    out.value += k;
    out.error += err;
    ++out.intervals;
    return;
  }
  const double m = 0.5 * (a + b);
  adapt(f, a, m, 0.5 * tol, depth - 1, out);
  adapt(f, m, b, 0.5 * tol, depth - 1, out);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod 7/15 on a finite interval. Subintervals are
/// visited left to right, so the sum is reproducible.
template <typename F>
QuadratureResult integrate(F f, double a, double b, double rel_tol = 1e-8, int max_depth = 40) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw InvalidArgument("integrate: bounds must be finite");
  if (a == b) return {};
  double k = 0, g = 0;
  detail::gk15(f, a, b, k, g);
  const double tol = std::max(rel_tol * std::abs(k), 1e-300);
  QuadratureResult out;
  detail::adapt(f, a, b, tol, max_depth, out);
  return out;
}

}  // namespace hcmc
