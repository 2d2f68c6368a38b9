#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <random>

#include "hcmc/hmodel.hpp"

using namespace hcmc;
using boost::multiprecision::cpp_bin_float_50;

namespace {

// Golden-section minimization of a unimodal function on [lo, hi].
template <class F>
double golden_min(F f, double lo, double hi, int iters = 200) {
  const double g = (std::sqrt(5.0) - 1) / 2;
  double a = lo, b = hi;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return f(0.5 * (a + b));
}

// Length of the geodesic arc between two points at equal height, by
// integrating ds / z along the semicircle through them.
double arc_length_oracle(double x0, double x1, double z) {
  const double xc = 0.5 * (x0 + x1);
  // ds = R dphi and z = R sin(phi), so the radius cancels.
  const double phi0 = std::atan2(z, x1 - xc);
  const double phi1 = std::atan2(z, x0 - xc);
  auto integrand = [](double phi) { return 1.0 / std::sin(phi); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, phi0, phi1, 15, 1e-14);
}

double mp_arccosh_dist(const HPointd& p, const HPointd& q) {
  const cpp_bin_float_50 dx = cpp_bin_float_50(p.x()) - q.x();
  const cpp_bin_float_50 dy = cpp_bin_float_50(p.y()) - q.y();
  const cpp_bin_float_50 dz = cpp_bin_float_50(p.z()) - q.z();
  const cpp_bin_float_50 arg =
      1 + (dx * dx + dy * dy + dz * dz) / (2 * cpp_bin_float_50(p.z()) * q.z());
  return static_cast<double>(acosh(arg));
}

Isometryd random_word(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(-1.5, 1.5);
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Generator<double>> w;
  for (int i = 0; i < 5; ++i) {
    switch (pick(rng)) {
      case 0: w.emplace_back(HorizontalTranslate<double>{{U(rng), U(rng)}}); break;
      case 1: w.emplace_back(HorizontalRotate<double>{2 * U(rng)}); break;
      case 2: w.emplace_back(Dilate<double>{U(rng)}); break;
      default: w.emplace_back(UnitSphereInversion{}); break;
    }
  }
  return Isometryd(std::move(w));
}

HPointd random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(-2, 2), Z(0.2, 3);
  return {U(rng), U(rng), Z(rng)};
}

}  // namespace

TEST_CASE("points reject heights outside the model") {
  CHECK_THROWS_AS(HPointd(0, 0, 0), InvalidArgument);
  CHECK_THROWS_AS(HPointd(0, 0, -1), InvalidArgument);
  CHECK_THROWS_AS(HPointd(0, 0, 1e-310), DegenerateInput);
  CHECK_THROWS_AS(HPointd(std::nan(""), 0, 1), DegenerateInput);
  CHECK_NOTHROW(HPointd(3, -4, 1e-200));
}

TEST_CASE("dist: anchors") {
  const HPointd o(0, 0, 1);
  CHECK(dist(o, o) == 0);
  CHECK(dist(o, HPointd(0, 0, std::exp(1.0))) == doctest::Approx(1).epsilon(1e-15));

  const double oracle = arc_length_oracle(0, 1, 1);
  CHECK(oracle == doctest::Approx(0.962424).epsilon(1e-6));
  CHECK(dist(o, HPointd(1, 0, 1)) == doctest::Approx(oracle).epsilon(1e-13));
}

TEST_CASE("dist agrees with high-precision arccosh and with arc length") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const HPointd p = random_point(rng), q = random_point(rng);
    CHECK(dist(p, q) == doctest::Approx(mp_arccosh_dist(p, q)).epsilon(1e-12));
  }
  for (double x1 : {0.01, 0.3, 2.0, 7.5})
    CHECK(dist(HPointd(0, 0, 0.7), HPointd(x1, 0, 0.7)) ==
          doctest::Approx(arc_length_oracle(0, x1, 0.7)).epsilon(1e-11));
}

TEST_CASE("dist is symmetric and satisfies the triangle inequality") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const HPointd p = random_point(rng), q = random_point(rng), r = random_point(rng);
    CHECK(dist(p, q) == dist(q, p));
    CHECK(dist(p, r) <= dist(p, q) + dist(q, r) + 1e-12);
  }
}

TEST_CASE("isometry words preserve distance") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Isometryd w = random_word(rng);
    const HPointd p = random_point(rng), q = random_point(rng);
    CHECK(std::abs(dist(w(p), w(q)) - dist(p, q)) < 1e-10);
    const HPointd back = w.inverse()(w(p));
    CHECK((back.coords() - p.coords()).norm() < 1e-10 * (1 + p.coords().norm()));
  }
}

TEST_CASE("composition is associative") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Isometryd a = random_word(rng), b = random_word(rng), c = random_word(rng);
    const HPointd p = random_point(rng);
    const HPointd l = a.then(b).then(c)(p), r = a.then(b.then(c))(p);
    CHECK(l == r);
  }
}

TEST_CASE("dist_to_horosphere") {
  CHECK(dist_to_horosphere(HPointd(0, 0, 2), 2.0) == 0);
  CHECK(dist_to_horosphere(HPointd(0, 0, std::exp(2.0)), 1.0) == doctest::Approx(2));
  CHECK(dist_to_horosphere(HPointd(5, -3, std::exp(1.0)), 1.0) == doctest::Approx(1));
  CHECK_THROWS_AS(dist_to_horosphere(HPointd(0, 0, 1), 0.0), InvalidArgument);
  CHECK_THROWS_AS(dist_to_horosphere(HPointd(0, 0, 1), -2.0), InvalidArgument);
}

TEST_CASE("dist_to_geodesic: anchors and brute-force oracle") {
  const Geodesicd axis = VerticalLine<double>{};
  CHECK(dist_to_geodesic(HPointd(0, 0, 5), axis) == 0);

  const HPointd p(1, 0, 1);
  const double brute =
      golden_min([&](double s) { return dist(p, HPointd(0, 0, std::exp(s))); }, -5, 5);
  CHECK(brute == doctest::Approx(0.881374).epsilon(1e-6));
  CHECK(dist_to_geodesic(p, axis) == doctest::Approx(brute).epsilon(1e-10));

  const Geodesicd sc = Semicircle<double>({-1, 0}, {1, 0});
  const HPointd pulled = normalize_to_axis(sc)(p);
  CHECK(dist_to_geodesic(p, sc) == doctest::Approx(dist_to_geodesic(pulled, axis)).epsilon(1e-14));
}

TEST_CASE("dist_to_geodesic for semicircles matches minimization along the arc") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> U(-2, 2);
  for (int i = 0; i < 30; ++i) {
    const Eigen::Vector2d a(U(rng), U(rng)), b(U(rng), U(rng));
    const Geodesicd g = Semicircle<double>(a, b);
    const Eigen::Vector2d mid = 0.5 * (a + b);
    const Eigen::Vector2d half = 0.5 * (b - a);
    const double R = half.norm();
    auto arc = [&](double th) {
      const Eigen::Vector2d xy = mid + std::cos(th) * half;
      return HPointd(xy.x(), xy.y(), R * std::sin(th));
    };
    const HPointd p = random_point(rng);
    // Parameterize by s with theta = 2 atan(e^s) to reach both ends.
    const double brute = golden_min(
        [&](double s) { return dist(p, arc(2 * std::atan(std::exp(s)))); }, -30, 30, 300);
    CHECK(dist_to_geodesic(p, g) == doctest::Approx(brute).epsilon(1e-8));
  }
}

TEST_CASE("dist_to_geodesic is invariant under isometries fixing the axis") {
  const Geodesicd axis = VerticalLine<double>{};
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const HPointd p = random_point(rng);
    const double t = std::uniform_real_distribution<double>(-3, 3)(rng);
    const Isometryd fix({Dilate<double>{t}, HorizontalRotate<double>{t}});
    CHECK(dist_to_geodesic(fix(p), axis) == doctest::Approx(dist_to_geodesic(p, axis)).epsilon(1e-12));
  }
  // Translation along a vertical line through (3, 4) fixes that line.
  const Geodesicd line = VerticalLine<double>{3, 4};
  const HPointd q(1, 1, 2);
  const Isometryd along = translate(Eigen::Vector2d(-3, -4))
                              .then(sigma(0.7))
                              .then(translate(Eigen::Vector2d(3, 4)));
  CHECK(dist_to_geodesic(along(q), line) == doctest::Approx(dist_to_geodesic(q, line)).epsilon(1e-12));
}

TEST_CASE("dist_to_vertical_plane: anchors and brute-force oracle") {
  const VerticalPlaned x0(1, 0, 0);
  CHECK(dist_to_vertical_plane(HPointd(0, 7, 3), x0) == 0);
  const HPointd p(1, 0, 1);
  // By symmetry the nearest point keeps y; minimize over the height.
  const double brute = golden_min([&](double s) { return dist(p, HPointd(0, 0, std::exp(s))); }, -5, 5);
  CHECK(brute == doctest::Approx(0.881374).epsilon(1e-6));
  CHECK(dist_to_vertical_plane(p, x0) == doctest::Approx(brute).epsilon(1e-10));
  CHECK(dist_to_vertical_plane(HPointd(-1, 0, 1), x0) == doctest::Approx(-brute).epsilon(1e-10));
  CHECK_THROWS_AS(VerticalPlaned(0, 0, 1), InvalidArgument);

  // A general plane: rotate and translate the picture.
  const VerticalPlaned tilted(3, 4, -5);  // passes through (1.8, -0.1)
  std::mt19937_64 rng(29);
  for (int i = 0; i < 50; ++i) {
    const HPointd q = random_point(rng);
    const double off = tilted.offset(q.x(), q.y());
    const double brute_q =
        golden_min([&](double s) { return dist(HPointd(off, 0, q.z()), HPointd(0, 0, std::exp(s))); }, -8, 8);
    CHECK(std::abs(dist_to_vertical_plane(q, tilted)) == doctest::Approx(brute_q).epsilon(1e-9));
  }
}

TEST_CASE("tau and sigma") {
  const Latticed L({1, 0}, {0, 1});
  const HPointd o(0, 0, 1);
  CHECK(tau(L, 1, 0)(o) == HPointd(1, 0, 1));
  CHECK(tau(L, 0, 0).is_identity_word());
  CHECK(sigma(0.0).is_identity_word());

  const Latticed M({1.3, 0.2}, {-0.4, 0.9});
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const HPointd p = random_point(rng);
    const HPointd back = tau(M, 3, -2).then(tau(M, -3, 2))(p);
    CHECK((back.coords() - p.coords()).norm() < 1e-14);
    CHECK(tau(M, 5, 7)(p).z() == p.z());
  }
  for (double t : {-1.0, 0.5, 2.0}) {
    const HPointd s = sigma(t)(o);
    CHECK(s.x() == 0);
    CHECK(s.z() == doctest::Approx(std::exp(-t)).epsilon(1e-15));
    const HPointd a = sigma(t).then(sigma(0.3))(HPointd(0.2, 0.4, 1.1));
    const HPointd b = sigma(t + 0.3)(HPointd(0.2, 0.4, 1.1));
    CHECK((a.coords() - b.coords()).norm() < 1e-14);
  }
}

TEST_CASE("sigma_t tau equals tau scaled by e^{-t} after sigma_t") {
  const Latticed L({1, 0.2}, {0.3, 1.1});
  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    const double t = std::uniform_real_distribution<double>(-2, 2)(rng);
    const HPointd p = random_point(rng);
    const Latticed scaled(std::exp(-t) * L.u(), std::exp(-t) * L.v());
    const HPointd lhs = tau(L, 2, -1).then(sigma(t))(p);  // sigma_t after tau
    const HPointd rhs = sigma(t).then(tau(scaled, 2, -1))(p);
    CHECK((lhs.coords() - rhs.coords()).norm() < 1e-10);
  }
}

TEST_CASE("sigma_t maps P_{0,c} onto P_{0,e^{-t}c}") {
  const double A = 0.6, B = -0.8, c = 1.7;
  for (double t : {0.5, 1.0, 3.0}) {
    const VerticalPlaned image(A, B, std::exp(-t) * c);
    for (int i = 0; i < 20; ++i) {
      const double s = -2 + 0.2 * i, z = 0.3 + 0.1 * i;
      // Point on A x + B y + c = 0.
      const HPointd p(-A * c + s * -B, -B * c + s * A, z);
      const HPointd q = sigma(t)(p);
      CHECK(std::abs(image.offset(q.x(), q.y())) < 1e-10);
    }
  }
}

TEST_CASE("normalize_to_axis") {
  CHECK(normalize_to_axis(Geodesicd(VerticalLine<double>{})).is_identity_word());
  const Isometryd w = normalize_to_axis(Geodesicd(VerticalLine<double>{3, 4}));
  REQUIRE(w.word().size() == 1);
  const auto* tr = std::get_if<HorizontalTranslate<double>>(&w.word()[0]);
  REQUIRE(tr != nullptr);
  CHECK(tr->v == Eigen::Vector2d(-3, -4));

  const auto check_semicircle = [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    const Isometryd n = normalize_to_axis(Geodesicd(Semicircle<double>(a, b)));
    const Eigen::Vector2d mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 1; i < 20; ++i) {
      const double th = 3.14159265358979 * i / 20;
      const Eigen::Vector2d xy = mid + std::cos(th) * half;
      const HPointd q = n(HPointd(xy.x(), xy.y(), half.norm() * std::sin(th)));
      CHECK(q.x() * q.x() + q.y() * q.y() < 1e-12);
    }
  };
  check_semicircle({-1, 0}, {1, 0});
  check_semicircle({0.5, 2}, {-1.5, -0.25});
  CHECK_THROWS_AS(Semicircle<double>({1, 1}, {1, 1}), InvalidArgument);
}

TEST_CASE("templates work in extended precision") {
  using P = HPoint<long double>;
  const long double d = dist(P(0, 0, 1), P(1, 0, 1));
  CHECK(static_cast<double>(d) == doctest::Approx(dist(HPointd(0, 0, 1), HPointd(1, 0, 1))).epsilon(1e-15));
  const Geodesic<long double> g = Semicircle<long double>({-1, 0}, {1, 0});
  CHECK(static_cast<double>(dist_to_geodesic(P(0, 0, 1), g)) == doctest::Approx(0).epsilon(1e-15));
}
