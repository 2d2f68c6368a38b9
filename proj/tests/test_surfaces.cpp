#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <random>

#include "hcmc/dmesh.hpp"
#include "hcmc/surfaces.hpp"

using namespace hcmc;
using boost::multiprecision::cpp_bin_float_50;

namespace {

template <class F>
double bisect(F f, double lo, double hi) {
  // f(lo) and f(hi) have opposite signs.
  const bool rising = f(hi) > f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) > 0) == rising) hi = mid; else lo = mid;
  }
  return 0.5 * (lo + hi);
}

const Geodesicd kAxis = VerticalLine<double>{};

HPointd at(const Eigen::Vector3d& p) { return HPointd(p); }

}  // namespace

TEST_CASE("closed-form curvature") {
  CHECK(mean_curvature_closed_form(Horosphere{2}) == 1);
  CHECK(mean_curvature_closed_form(TiltedPlane(1, 0, 0, Side::Plus, 0)) == 0);
  CHECK(mean_curvature_closed_form(TiltedPlane(1, 1, 3, Side::Minus, 0.4)) == doctest::Approx(0.4));
  CHECK(mean_curvature_closed_form(GeodesicCylinder{kAxis, 0.5}) == doctest::Approx(1.313035).epsilon(1e-6));
  CHECK(mean_curvature_closed_form(GeodesicCylinder{kAxis, 0.5}) ==
        doctest::Approx(1 / std::tanh(1.0)).epsilon(1e-14));
  const auto [k1, k2] = principal_curvatures_closed_form(GeodesicCylinder{kAxis, 0.5});
  const cpp_bin_float_50 half("0.5");
  CHECK(k1 == doctest::Approx(static_cast<double>(cosh(half) / sinh(half))).epsilon(1e-15));
  CHECK(k2 == doctest::Approx(static_cast<double>(tanh(half))).epsilon(1e-15));
  CHECK(k1 == doctest::Approx(2.163953).epsilon(1e-6));
  CHECK(k2 == doctest::Approx(0.462117).epsilon(1e-6));
  CHECK(mean_curvature_closed_form(GeodesicSphere{{0, 0, 1}, 2}) == doctest::Approx(1 / std::tanh(2.0)));
  CHECK(mean_curvature_closed_form(GeodesicDisk{}) == 0);
}

TEST_CASE("cylinder_radius_for_H") {
  const double oracle = bisect([](double r) { return 1 / std::tanh(2 * r) - 2; }, 0.01, 5);
  CHECK(cylinder_radius_for_H(2) == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(cylinder_radius_for_H(2) == doctest::Approx(0.274653).epsilon(1e-6));
  // rho grows like log(1 / (H - 1)) / 4 as H decreases to 1.
  CHECK(cylinder_radius_for_H(1.0001) == doctest::Approx(0.25 * std::log(2.0001 / 0.0001)).epsilon(1e-9));
  CHECK(cylinder_radius_for_H(1 + 1e-7) > 4);
  CHECK(mean_curvature_closed_form(GeodesicCylinder{kAxis, cylinder_radius_for_H(3)}) ==
        doctest::Approx(3).epsilon(1e-12));
  CHECK_THROWS_AS(cylinder_radius_for_H(1), InvalidArgument);
  CHECK_THROWS_AS(cylinder_radius_for_H(0.5), InvalidArgument);
}

TEST_CASE("equidistance_for_H") {
  CHECK(equidistance_for_H(0) == 0);
  const double oracle = bisect([](double d) { return std::tanh(d) - 0.5; }, 0, 3);
  CHECK(equidistance_for_H(0.5) == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(equidistance_for_H(0.5) == doctest::Approx(0.549306).epsilon(1e-6));
  CHECK_THROWS_AS(equidistance_for_H(1), InvalidArgument);
  CHECK_THROWS_AS(equidistance_for_H(-0.1), InvalidArgument);

  // The plane x = z: slope 1, H = cos(pi/4).
  const TiltedPlane p(1, 0, 0, Side::Plus, std::cos(std::numbers::pi / 4));
  CHECK(p.slope() == doctest::Approx(1).epsilon(1e-14));
  for (double z : {0.5, 1.0, 4.0}) {
    const HPointd q = at(surface_point(p, 0.3, z));
    CHECK(q.x() == doctest::Approx(z));
    CHECK(dist_to_vertical_plane(q, p.vertical_plane()) == doctest::Approx(0.881374).epsilon(1e-6));
  }
}

TEST_CASE("tilted planes keep a constant signed distance") {
  for (Side side : {Side::Plus, Side::Minus}) {
    for (double H : {0.0, 0.3, 0.5, 0.95}) {
      const TiltedPlane p(0.3, -1.1, 0.7, side, H);
      for (int i = 0; i < 20; ++i) {
        const HPointd q = at(surface_point(p, -2 + 0.2 * i, 0.1 + 0.3 * i));
        CHECK(std::abs(dist_to_vertical_plane(q, p.vertical_plane()) - side_sign(side) * std::atanh(H)) <
              1e-10);
      }
    }
  }
}

TEST_CASE("sigma_t maps tilted planes to tilted planes with scaled offset") {
  for (double t : {0.4, 2.0}) {
    const TiltedPlane p(1, 2, 1.5, Side::Minus, 0.6);
    const TiltedPlane image = p.with_c(std::exp(-t) * p.c());
    for (int i = 0; i < 20; ++i) {
      const HPointd q = sigma(t)(at(surface_point(p, -1 + 0.1 * i, 0.2 + 0.2 * i)));
      CHECK(std::abs(dist_to_vertical_plane(q, image.vertical_plane()) + std::atanh(0.6)) < 1e-10);
    }
  }
}

TEST_CASE("mesh_patch") {
  const TriMesh h = mesh_patch(Horosphere{1}, {0, 1, 0, 1}, 2, 2);
  CHECK(h.num_vertices() == 9);
  CHECK(h.num_faces() == 8);
  CHECK(euler_characteristic(h) == 1);
  for (Eigen::Index i = 0; i < h.num_vertices(); ++i) CHECK(h.vertices()(i, 2) == 1);

  const TriMesh c = mesh_cylinder(GeodesicCylinder{kAxis, 0.5}, 0, 1, 4, 12);
  CHECK(euler_characteristic(c) == 0);
  CHECK(c.boundary_loops().size() == 2);

  const GeodesicCylinder bent{Semicircle<double>({-1, 0.5}, {2, 1}), 0.3};
  const TriMesh cb = mesh_cylinder(bent, -0.5, 0.5, 6, 10);
  for (Eigen::Index i = 0; i < cb.num_vertices(); ++i)
    CHECK(std::abs(dist_to_geodesic(at(cb.vertices().row(i).transpose()), bent.axis) - 0.3) < 1e-10);

  const TiltedPlane tp(1, 0, 0, Side::Plus, 0.5);
  const TriMesh t = mesh_patch(tp, {-0.5, 0.5, 1, 2}, 5, 5);
  for (Eigen::Index i = 0; i < t.num_vertices(); ++i)
    CHECK(std::abs(dist_to_vertical_plane(at(t.vertices().row(i).transpose()), tp.vertical_plane()) -
                   0.549306) < 1e-6);

  CHECK_THROWS_AS(mesh_patch(Horosphere{1}, {0, 0, 0, 1}, 2, 2), InvalidArgument);
  CHECK_THROWS_AS(mesh_patch(Horosphere{1}, {0, 1, 0, 1}, 1, 2), InvalidArgument);
  CHECK_THROWS_AS(mesh_patch(tp, {0, 1, -1, 1}, 2, 2), InvalidArgument);
}

TEST_CASE("sphere and disk meshes lie on their surfaces") {
  const GeodesicSphere s{{0.2, -0.1, 1.5}, 1.0};
  const TriMesh sm = mesh_sphere(s, 2);
  CHECK(euler_characteristic(sm) == 2);
  CHECK(sm.boundary_loops().empty());
  for (Eigen::Index i = 0; i < sm.num_vertices(); ++i)
    CHECK(std::abs(dist(at(sm.vertices().row(i).transpose()), at(s.center)) - 1.0) < 1e-10);

  for (auto plane : {GeodesicDisk::Plane::Vertical, GeodesicDisk::Plane::Hemisphere}) {
    const GeodesicDisk d{{1, 1, 2}, 1.5, plane, 0.4};
    const TriMesh dm = mesh_disk(d, 6);
    CHECK(euler_characteristic(dm) == 1);
    REQUIRE(dm.boundary_loops().size() == 1);
    for (int v : dm.boundary_loops()[0])
      CHECK(std::abs(dist(at(dm.vertices().row(v).transpose()), at(d.center)) - 1.5) < 1e-10);
    for (Eigen::Index i = 0; i < dm.num_vertices(); ++i) {
      const Eigen::Vector3d p = dm.vertices().row(i).transpose();
      if (plane == GeodesicDisk::Plane::Vertical) {
        const Eigen::Vector2d off = p.head<2>() - d.center.head<2>();
        CHECK(std::abs(-std::sin(0.4) * off.x() + std::cos(0.4) * off.y()) < 1e-12);
      } else {
        CHECK(std::abs((p - Eigen::Vector3d(1, 1, 0)).norm() - 2) < 1e-12);
      }
    }
  }
}

TEST_CASE("lattice disk mesh") {
  const GeodesicDisk d{{0, 0, 1}, 1.0, GeodesicDisk::Plane::Vertical, 0};
  for (int n : {3, 8, 17}) {
    const TriMesh m = mesh_disk_lattice(d, n);
    CHECK(euler_characteristic(m) == 1);
    CHECK(m.boundary_loops().size() == 1);
    std::vector<int> valence(static_cast<size_t>(m.num_vertices()), 0);
    for (const auto& e : m.edges()) {
      ++valence[static_cast<size_t>(e[0])];
      ++valence[static_cast<size_t>(e[1])];
    }
    for (int v = 0; v < m.num_vertices(); ++v) {
      CHECK(dist(at(m.vertices().row(v).transpose()), at(d.center)) <= 1 + 1e-12);
      if (!m.is_boundary_vertex(v)) CHECK(valence[static_cast<size_t>(v)] == 6);
    }
  }
}

TEST_CASE("numeric second fundamental form: anchors") {
  const SecondFundamentalForm h = numeric_second_fundamental_form(Horosphere{1}, 0.3, -0.2);
  CHECK(std::abs(h.H - 1) < 1e-6);
  CHECK(std::abs(h.k1 - 1) < 1e-6);
  CHECK(std::abs(h.k2 - 1) < 1e-6);
  const SecondFundamentalForm v =
      numeric_second_fundamental_form(TiltedPlane(1, 0, 0, Side::Plus, 0), 0.1, 1.3);
  CHECK(std::abs(v.H) < 1e-8);
  const SecondFundamentalForm c = numeric_second_fundamental_form(GeodesicCylinder{kAxis, 0.5}, 0.2, 1.0);
  CHECK(c.k1 == doctest::Approx(2.163953).epsilon(1e-6));
  CHECK(c.k2 == doctest::Approx(0.462117).epsilon(1e-6));
  CHECK_THROWS_AS(numeric_second_fundamental_form(GeodesicSphere{}, 0.0, 0.0), DegenerateInput);
}

TEST_CASE("numeric second fundamental form agrees with closed forms on random points") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> U(0, 1);
  const std::vector<std::pair<Surface, ParamRect>> kinds = {
      {Horosphere{0.7}, {-3, 3, -3, 3}},
      {GeodesicCylinder{kAxis, 0.8}, {-2, 2, 0, 6.2}},
      {GeodesicCylinder{Semicircle<double>({-1, 0.5}, {2, 1}), 0.3}, {-1, 1, 0, 6.2}},
      {TiltedPlane(1, 2, 0.5, Side::Plus, 0.0), {-2, 2, 0.3, 3}},
      {TiltedPlane(1, -1, 0.2, Side::Plus, 0.6), {-2, 2, 0.3, 3}},
      {TiltedPlane(0, 1, -1, Side::Minus, 0.9), {-2, 2, 0.3, 3}},
      {GeodesicSphere{{0.2, -0.1, 1.5}, 0.7}, {0.2, 2.9, 0, 6.2}},
      {GeodesicDisk{{1, 1, 2}, 1.5, GeodesicDisk::Plane::Vertical, 0.3}, {0.2, 1.4, 0, 6.2}},
      {GeodesicDisk{{1, 1, 2}, 1.5, GeodesicDisk::Plane::Hemisphere, 0}, {0.2, 1.4, 0, 6.2}},
  };
  for (const auto& [s, r] : kinds) {
    const double H = mean_curvature_closed_form(s);
    for (int i = 0; i < 100; ++i) {
      const double u = r.u0 + (r.u1 - r.u0) * U(rng), v = r.v0 + (r.v1 - r.v0) * U(rng);
      CHECK(std::abs(numeric_second_fundamental_form(s, u, v).H - H) < 1e-6);
    }
  }
}

TEST_CASE("region_membership") {
  for (double y : {-3.0, 0.0, 2.0})
    for (double z : {1.0, 2.5, 40.0}) CHECK(region_membership(HPointd(0, y, z), 1, 0, 0.5, 1, 1));
  CHECK_FALSE(region_membership(HPointd(0, 0, 0.5), 1, 0, 0.5, 1, 1));
  CHECK_FALSE(region_membership(HPointd(50, 0, 1), 1, 0, 0.5, 1, 1));
  CHECK_FALSE(region_membership(HPointd(-50, 0, 1), 1, 0, 0.5, 1, 1));
  CHECK_THROWS_AS(region_membership(HPointd(0, 0, 1), 1, 0, 1.0, 1, 1), InvalidArgument);
}
