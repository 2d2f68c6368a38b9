#include "hcmc/comparison.hpp"

#include <cmath>

namespace hcmc {

int select_k(double a, double r) {
  detail::require_positive_a(a, "select_k");
  if (!(r > 0)) throw InvalidArgument("select_k: r must be positive");
  detail::require_cosh_range(a, r, "select_k");
  // cosh^2 - 1 = sinh^2 keeps the comparison accurate when a r is small.
  const double s = std::sinh(a * r);
  return static_cast<int>(std::floor(s * s)) + 1;
}

ComparisonProfile build_profile(double a, double r) {
  if (a < 0) throw InvalidArgument("build_profile: a must be nonnegative");
  if (!(r > 0)) throw InvalidArgument("build_profile: r must be positive");
  ComparisonProfile p;
  p.a = a;
  p.r = r;
  if (a == 0) {
    // f(x) = x^2: C1 = f'(r) = 2r, C2 = 2.
    p.C1 = 2 * r;
    p.C2 = 2;
    p.C = r;
    return p;
  }
  const int k = select_k(a, r);
  p.k = k;
  p.C1 = 1;
  p.C2 = g_k(a, k, r);
  p.C = p.C1 / p.C2;
  return p;
}

double corollary_constant(double a, double L) {
  if (!(L > 0)) throw InvalidArgument("corollary_constant: L must be positive");
  return build_profile(a, L / 2).C;
}

double profile_function(const ComparisonProfile& profile, double x) {
  if (!profile.k) return x * x;
  return f_k(profile.a, *profile.k, x);
}

}  // namespace hcmc
