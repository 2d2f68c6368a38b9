#pragma once

// Comparison functions for the distance R to a geodesic in an ambient space
// with sectional curvature <= -a^2, and the isoperimetric constants built
// from them.
//
// With k fixed, f_k(x) = -k / (a cosh(ax)^{1/k}) solves
//   f' mu_s = k/(k+1) (f' mu_theta - f''),
// and Delta(f_k o R) >= g_k(R) on any surface with |H| <= a.

#include <cmath>
#include <optional>
#include <string>

#include "hcmc/errors.hpp"

namespace hcmc {

/// Largest a*x for which cosh(a*x) is evaluated; beyond it C_2 would be
/// silently corrupted, so evaluation is refused.
inline constexpr double kMaxCoshArgument = 350.0;

namespace detail {

template <typename Scalar>
void require_cosh_range(Scalar a, Scalar x, const char* who) {
  using std::abs;
  if (abs(a * x) > Scalar(kMaxCoshArgument))
    throw OverflowError(std::string(who) + ": a*x exceeds the cosh overflow guard (350)");
}

template <typename Scalar>
void require_positive_a(Scalar a, const char* who) {
  if (!(a > Scalar(0))) throw InvalidArgument(std::string(who) + ": a must be positive");
}

inline void require_k(int k, const char* who) {
  if (k < 1) throw InvalidArgument(std::string(who) + ": k must be a positive integer");
}

}  // namespace detail

/// mu_theta(x) = a coth(ax) for a > 0, 1/x for a = 0.
template <typename Scalar>
Scalar mu_theta(Scalar a, Scalar x) {
  using std::tanh;
  if (a < Scalar(0)) throw InvalidArgument("mu_theta: a must be nonnegative");
  if (!(x > Scalar(0))) throw InvalidArgument("mu_theta: x must be positive");
  if (a == Scalar(0)) return Scalar(1) / x;
  return a / tanh(a * x);
}

/// mu_s(x) = a tanh(ax) for a > 0, 0 for a = 0.
template <typename Scalar>
Scalar mu_s(Scalar a, Scalar x) {
  using std::tanh;
  if (a < Scalar(0)) throw InvalidArgument("mu_s: a must be nonnegative");
  if (x < Scalar(0)) throw InvalidArgument("mu_s: x must be nonnegative");
  if (a == Scalar(0)) return Scalar(0);
  return a * tanh(a * x);
}

template <typename Scalar>
Scalar f_k(Scalar a, int k, Scalar x) {
  using std::cosh;
  using std::pow;
  detail::require_positive_a(a, "f_k");
  detail::require_k(k, "f_k");
  detail::require_cosh_range(a, x, "f_k");
  return -Scalar(k) / (a * pow(cosh(a * x), Scalar(1) / Scalar(k)));
}

/// f_k'(x) = tanh(ax) / cosh(ax)^{1/k}.
template <typename Scalar>
Scalar f_k_prime(Scalar a, int k, Scalar x) {
  using std::cosh;
  using std::pow;
  using std::tanh;
  detail::require_positive_a(a, "f_k_prime");
  detail::require_k(k, "f_k_prime");
  detail::require_cosh_range(a, x, "f_k_prime");
  return tanh(a * x) / pow(cosh(a * x), Scalar(1) / Scalar(k));
}

/// f_k''(x) = a (k + 1 - cosh^2(ax)) / (k cosh(ax)^{(2k+1)/k}).
template <typename Scalar>
Scalar f_k_double_prime(Scalar a, int k, Scalar x) {
  using std::cosh;
  using std::pow;
  detail::require_positive_a(a, "f_k_double_prime");
  detail::require_k(k, "f_k_double_prime");
  detail::require_cosh_range(a, x, "f_k_double_prime");
  const Scalar c = cosh(a * x);
  const Scalar kk = Scalar(k);
  return a * (kk + 1 - c * c) / (kk * pow(c, (2 * kk + 1) / kk));
}

/// f_k' mu_s - k/(k+1) (f_k' mu_theta - f_k''); identically zero.
template <typename Scalar>
Scalar ode_residual(Scalar a, int k, Scalar x) {
  if (!(x > Scalar(0))) throw InvalidArgument("ode_residual: x must be positive");
  const Scalar fp = f_k_prime(a, k, x);
  const Scalar fpp = f_k_double_prime(a, k, x);
  const Scalar kk = Scalar(k);
  return fp * mu_s(a, x) - kk / (kk + 1) * (fp * mu_theta(a, x) - fpp);
}

/// g_k(x) = a (k + 1 - cosh^2(ax)) / (k (k+1) cosh(ax)^{(2k+1)/k}), the lower
/// bound for Delta(f_k o R). Positive iff cosh^2(ax) < k + 1.
template <typename Scalar>
Scalar g_k(Scalar a, int k, Scalar x) {
  using std::cosh;
  using std::pow;
  detail::require_positive_a(a, "g_k");
  detail::require_k(k, "g_k");
  if (x < Scalar(0)) throw InvalidArgument("g_k: x must be nonnegative");
  detail::require_cosh_range(a, x, "g_k");
  const Scalar c = cosh(a * x);
  const Scalar kk = Scalar(k);
  return a * (kk + 1 - c * c) / (kk * (kk + 1) * pow(c, (2 * kk + 1) / kk));
}

/// Constants (C1, C2, C = C1/C2) with Area <= C Length(boundary) for
/// surfaces with |H| <= a within distance r of a geodesic, K <= -a^2.
struct ComparisonProfile {
  double a = 0;
  double r = 0;
  std::optional<int> k;  ///< empty in the a = 0 branch (f(x) = x^2)
  double C1 = 0;
  double C2 = 0;
  double C = 0;
};

/// Least k >= 1 with cosh^2(a r) < k + 1, i.e. floor(sinh^2(a r)) + 1.
int select_k(double a, double r);

ComparisonProfile build_profile(double a, double r);

/// C(a, L/2): the constant for surfaces with at most two boundary components
/// of total length L, which lie in a solid geodesic cylinder of radius L/2.
double corollary_constant(double a, double L);

/// The comparison function the profile uses: f_k for a > 0, x^2 for a = 0.
double profile_function(const ComparisonProfile& profile, double x);

}  // namespace hcmc
