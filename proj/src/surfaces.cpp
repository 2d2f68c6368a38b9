#include "hcmc/surfaces.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <vector>

namespace hcmc {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_cylinder(const GeodesicCylinder& c) {
  if (!(c.rho > 0)) throw InvalidArgument("GeodesicCylinder: rho must be positive");
}
void require_sphere(const GeodesicSphere& s) {
  if (!(s.radius > 0)) throw InvalidArgument("GeodesicSphere: radius must be positive");
  if (!(s.center.z() > 0)) throw InvalidArgument("GeodesicSphere: center must have z > 0");
}
void require_disk(const GeodesicDisk& d) {
  if (!(d.radius > 0)) throw InvalidArgument("GeodesicDisk: radius must be positive");
  if (!(d.center.z() > 0)) throw InvalidArgument("GeodesicDisk: center must have z > 0");
}

/// The same surface pushed slightly to the side its reference normal points to.
Surface inward_offset(const Surface& s, double delta) {
  return std::visit(
      overloaded{
          [&](const Horosphere& h) -> Surface { return Horosphere{h.t * (1 + delta)}; },
          [&](const GeodesicCylinder& c) -> Surface {
            return GeodesicCylinder{c.axis, c.rho * (1 - delta)};
          },
          [&](const TiltedPlane& p) -> Surface {
            // Toward the vertical plane; for H = 0 toward the + side.
            if (p.H() == 0) return p.with_c(p.c() - delta * std::hypot(p.A(), p.B()));
            return TiltedPlane(p.A(), p.B(), p.c(), p.side(), p.H() * (1 - delta));
          },
          [&](const GeodesicSphere& g) -> Surface {
            return GeodesicSphere{g.center, g.radius * (1 - delta)};
          },
          [&](const GeodesicDisk& d) -> Surface { return d; },
      },
      s);
}

/// Reference orientation at a parameter point: a Euclidean direction whose
/// sign agrees with the convention normal.
Eigen::Vector3d reference_direction(const Surface& s, double u, double v) {
  if (const auto* d = std::get_if<GeodesicDisk>(&s)) {
    // H = 0, any consistent side: the normal of the containing plane.
    (void)u;
    (void)v;
    if (d->plane == GeodesicDisk::Plane::Vertical)
      return {-std::sin(d->azimuth), std::cos(d->azimuth), 0};
    const Eigen::Vector3d p = surface_point(s, u, v);
    return p - Eigen::Vector3d(d->center.x(), d->center.y(), 0);
  }
  const double delta = 1e-3;
  return surface_point(inward_offset(s, delta), u, v) - surface_point(s, u, v);
}

}  // namespace

// ---------------------------------------------------------------------------
// TiltedPlane

TiltedPlane::TiltedPlane(double A, double B, double c, Side side, double H)
    : A_(A), B_(B), c_(c), side_(side), H_(H) {
  if (A == 0 && B == 0) throw InvalidArgument("TiltedPlane: (A, B) must be nonzero");
  if (!(H >= 0 && H < 1)) throw InvalidArgument("TiltedPlane: H must lie in [0, 1)");
}

double TiltedPlane::slope() const { return H_ / std::sqrt((1 - H_) * (1 + H_)); }

Eigen::Vector2d TiltedPlane::unit_normal() const {
  return Eigen::Vector2d(A_, B_) / std::hypot(A_, B_);
}

Eigen::Vector2d TiltedPlane::unit_direction() const {
  const Eigen::Vector2d n = unit_normal();
  return {-n.y(), n.x()};
}

Eigen::Vector2d TiltedPlane::base_point() const {
  return -(c_ / std::hypot(A_, B_)) * unit_normal();
}

// ---------------------------------------------------------------------------
// Parameterizations

Eigen::Vector3d surface_point(const Surface& s, double u, double v) {
  return std::visit(
      overloaded{
          [&](const Horosphere& h) -> Eigen::Vector3d { return {u, v, h.t}; },
          [&](const GeodesicCylinder& c) -> Eigen::Vector3d {
            // About the z-axis: distance rho means r = z sinh(rho); the foot
            // point on the axis is at height sqrt(r^2 + z^2) = e^u.
            const double e = std::exp(u);
            const Eigen::Vector3d q(e * std::tanh(c.rho) * std::cos(v),
                                    e * std::tanh(c.rho) * std::sin(v), e / std::cosh(c.rho));
            return normalize_to_axis(c.axis).inverse()(HPointd(q)).coords();
          },
          [&](const TiltedPlane& p) -> Eigen::Vector3d {
            const Eigen::Vector2d xy = p.base_point() + u * p.unit_direction() +
                                       side_sign(p.side()) * p.slope() * v * p.unit_normal();
            return {xy.x(), xy.y(), v};
          },
          [&](const GeodesicSphere& g) -> Eigen::Vector3d {
            // Euclidean center (x0, y0, z0 cosh R), Euclidean radius z0 sinh R.
            const double zc = g.center.z() * std::cosh(g.radius);
            const double re = g.center.z() * std::sinh(g.radius);
            return Eigen::Vector3d(g.center.x(), g.center.y(), zc) +
                   re * Eigen::Vector3d(std::sin(u) * std::cos(v), std::sin(u) * std::sin(v),
                                        std::cos(u));
          },
          [&](const GeodesicDisk& d) -> Eigen::Vector3d {
            const double z0 = d.center.z();
            if (d.plane == GeodesicDisk::Plane::Hemisphere) {
              // Unit-hemisphere point at polar angle phi lies at distance
              // acosh(1 / cos(phi)) from its top.
              const double phi = std::acos(1.0 / std::cosh(u));
              return Eigen::Vector3d(d.center.x(), d.center.y(), 0) +
                     z0 * Eigen::Vector3d(std::sin(phi) * std::cos(v),
                                          std::sin(phi) * std::sin(v), std::cos(phi));
            }
            // Geodesic polar coordinates in the upper half-plane about i z0 via
            // the Poincare disk: w = i z0 (1 + zeta) / (1 - zeta).
            const double r = std::tanh(u / 2);
            const double zr = r * std::cos(v), zi = r * std::sin(v);
            const double den = (1 - zr) * (1 - zr) + zi * zi;
            const double X = z0 * (-2 * zi) / den;
            const double Z = z0 * (1 - r * r) / den;
            return {d.center.x() + X * std::cos(d.azimuth), d.center.y() + X * std::sin(d.azimuth),
                    Z};
          },
      },
      s);
}

// ---------------------------------------------------------------------------
// Curvature

double mean_curvature_closed_form(const Surface& s) {
  const auto [k1, k2] = principal_curvatures_closed_form(s);
  return 0.5 * (k1 + k2);
}

std::pair<double, double> principal_curvatures_closed_form(const Surface& s) {
  return std::visit(
      overloaded{
          [](const Horosphere&) { return std::pair{1.0, 1.0}; },
          [](const GeodesicCylinder& c) {
            require_cylinder(c);
            return std::pair{1.0 / std::tanh(c.rho), std::tanh(c.rho)};
          },
          [](const TiltedPlane& p) { return std::pair{p.H(), p.H()}; },
          [](const GeodesicSphere& g) {
            require_sphere(g);
            const double k = 1.0 / std::tanh(g.radius);
            return std::pair{k, k};
          },
          [](const GeodesicDisk&) { return std::pair{0.0, 0.0}; },
      },
      s);
}

double cylinder_radius_for_H(double H) {
  if (!(H > 1)) throw InvalidArgument("cylinder_radius_for_H: H must exceed 1");
  return 0.5 * std::atanh(1.0 / H);
}

double equidistance_for_H(double H) {
  if (!(H >= 0 && H < 1)) throw InvalidArgument("equidistance_for_H: H must lie in [0, 1)");
  return std::atanh(H);
}

namespace {

SecondFundamentalForm sff_at_step(const Surface& s, double u, double v, double h) {
  auto X = [&](double a, double b) { return surface_point(s, a, b); };
  const Eigen::Vector3d p = X(u, v);
  const Eigen::Vector3d xu = (X(u + h, v) - X(u - h, v)) / (2 * h);
  const Eigen::Vector3d xv = (X(u, v + h) - X(u, v - h)) / (2 * h);
  const Eigen::Vector3d xuu = (X(u + h, v) - 2 * p + X(u - h, v)) / (h * h);
  const Eigen::Vector3d xvv = (X(u, v + h) - 2 * p + X(u, v - h)) / (h * h);
  const Eigen::Vector3d xuv =
      (X(u + h, v + h) - X(u + h, v - h) - X(u - h, v + h) + X(u - h, v - h)) / (4 * h * h);

  Eigen::Vector3d N = xu.cross(xv);
  if (!(N.norm() > 0)) throw DegenerateInput("numeric_second_fundamental_form: singular point");
  N.normalize();
  if (N.dot(reference_direction(s, u, v)) < 0) N = -N;

  Eigen::Matrix2d I, II;
  I << xu.dot(xu), xu.dot(xv), xu.dot(xv), xv.dot(xv);
  II << xuu.dot(N), xuv.dot(N), xuv.dot(N), xvv.dot(N);
  // Shape operator I^{-1} II is self-adjoint w.r.t. I; solve the generalized problem.
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::Matrix2d> es(II, I);
  const Eigen::Vector2d ke = es.eigenvalues();
  SecondFundamentalForm out;
  const double k_a = p.z() * ke(0) + N.z();
  const double k_b = p.z() * ke(1) + N.z();
  out.k1 = std::max(k_a, k_b);
  out.k2 = std::min(k_a, k_b);
  out.H = 0.5 * (out.k1 + out.k2);
  out.step = h;
  return out;
}

}  // namespace

SecondFundamentalForm numeric_second_fundamental_form(const Surface& s, double u, double v) {
  // Parameters of horospheres and tilted planes are Euclidean lengths, whose
  // natural scale is the height; the other kinds use intrinsic parameters.
  const bool euclidean = std::holds_alternative<Horosphere>(s) || std::holds_alternative<TiltedPlane>(s);
  const double scale = euclidean ? surface_point(s, u, v).z() : 1.0;
  // Richardson-extrapolated central differences, halving until two
  // extrapolations agree.
  auto richardson = [&](double h) {
    const SecondFundamentalForm coarse = sff_at_step(s, u, v, h);
    SecondFundamentalForm fine = sff_at_step(s, u, v, h / 2);
    fine.k1 = (4 * fine.k1 - coarse.k1) / 3;
    fine.k2 = (4 * fine.k2 - coarse.k2) / 3;
    fine.H = 0.5 * (fine.k1 + fine.k2);
    return fine;
  };
  double h = 1e-2 * scale;
  SecondFundamentalForm prev = richardson(h);
  while (true) {
    h /= 2;
    if (h < 1e-5 * scale) throw DegenerateInput("numeric_second_fundamental_form: step underflow");
    const SecondFundamentalForm cur = richardson(h);
    const double tol = 1e-9 * (1 + std::abs(cur.k1) + std::abs(cur.k2));
    if (std::abs(cur.k1 - prev.k1) < tol && std::abs(cur.k2 - prev.k2) < tol) return cur;
    prev = cur;
  }
}

// ---------------------------------------------------------------------------
// Meshing

TriMesh mesh_patch(const Surface& s, const ParamRect& r, int nu, int nv, bool periodic_v) {
  if (nu < 2 || nv < 2) throw InvalidArgument("mesh_patch: resolution must be at least 2x2");
  if (!(r.u1 > r.u0) || !(r.v1 > r.v0))
    throw InvalidArgument("mesh_patch: degenerate parameter rectangle");
  if (const auto* p = std::get_if<TiltedPlane>(&s); p && !(r.v0 > 0))
    throw InvalidArgument("mesh_patch: tilted-plane heights must be positive");
  if (const auto* c = std::get_if<GeodesicCylinder>(&s)) require_cylinder(*c);
  if (const auto* h = std::get_if<Horosphere>(&s); h && !(h->t > 0))
    throw InvalidArgument("mesh_patch: horosphere height must be positive");

  const int cols = periodic_v ? nv : nv + 1;
  VertexMatrix V((nu + 1) * cols, 3);
  auto id = [&](int i, int j) { return i * cols + (periodic_v ? j % nv : j); };
  for (int i = 0; i <= nu; ++i) {
    const double u = r.u0 + (r.u1 - r.u0) * i / nu;
    for (int j = 0; j < cols; ++j) {
      const double v = r.v0 + (r.v1 - r.v0) * j / nv;
      V.row(id(i, j)) = surface_point(s, u, v).transpose();
    }
  }
  FaceMatrix F(2 * nu * nv, 3);
  int f = 0;
  for (int i = 0; i < nu; ++i) {
    for (int j = 0; j < nv; ++j) {
      F.row(f++) << id(i, j), id(i + 1, j), id(i + 1, j + 1);
      F.row(f++) << id(i, j), id(i + 1, j + 1), id(i, j + 1);
    }
  }
  return TriMesh(std::move(V), std::move(F));
}

TriMesh mesh_cylinder(const GeodesicCylinder& cyl, double s0, double s1, int n_axis, int n_angle) {
  if (n_angle < 3) throw InvalidArgument("mesh_cylinder: need at least 3 angular steps");
  return mesh_patch(cyl, {s0, s1, 0.0, 2 * kPi}, n_axis, n_angle, true);
}

TriMesh mesh_disk(const GeodesicDisk& disk, int rings, int base) {
  require_disk(disk);
  if (rings < 1 || base < 3) throw InvalidArgument("mesh_disk: need rings >= 1 and base >= 3");
  std::vector<int> ring_start{0};
  int count = 1;
  for (int i = 1; i <= rings; ++i) {
    ring_start.push_back(count);
    count += base * i;
  }
  VertexMatrix V(count, 3);
  V.row(0) = surface_point(disk, 0.0, 0.0).transpose();
  for (int i = 1; i <= rings; ++i) {
    const double rho = disk.radius * i / rings;
    for (int k = 0; k < base * i; ++k)
      V.row(ring_start[i] + k) =
          surface_point(disk, rho, 2 * kPi * k / (base * i)).transpose();
  }
  std::vector<Eigen::Vector3i> faces;
  for (int k = 0; k < base; ++k) faces.emplace_back(0, 1 + k, 1 + (k + 1) % base);
  for (int i = 2; i <= rings; ++i) {
    // Stitch ring i-1 (n_in vertices) to ring i (n_out) by merging angles.
    const int n_in = base * (i - 1), n_out = base * i;
    int a = 0, b = 0;
    while (a < n_in || b < n_out) {
      const int ia = ring_start[i - 1] + a % n_in, ib = ring_start[i] + b % n_out;
      const double next_a = double(a + 1) / n_in, next_b = double(b + 1) / n_out;
      if (b < n_out && (a >= n_in || next_b <= next_a)) {
        faces.emplace_back(ia, ib, ring_start[i] + (b + 1) % n_out);
        ++b;
      } else {
        faces.emplace_back(ia, ib, ring_start[i - 1] + (a + 1) % n_in);
        ++a;
      }
    }
  }
  FaceMatrix F(static_cast<Eigen::Index>(faces.size()), 3);
  for (size_t f = 0; f < faces.size(); ++f) F.row(static_cast<Eigen::Index>(f)) = faces[f].transpose();
  return TriMesh(std::move(V), std::move(F));
}

TriMesh mesh_disk_lattice(const GeodesicDisk& disk, int n) {
  require_disk(disk);
  if (n < 1) throw InvalidArgument("mesh_disk_lattice: n must be at least 1");
  const double half_sqrt3 = std::sqrt(3.0) / 2;
  // Lattice point (a, b) sits at a e1 + b e2 with e1 = (1, 0), e2 = (1/2, sqrt(3)/2).
  std::map<std::pair<int, int>, int> index;
  std::vector<Eigen::Vector3d> points;
  for (int b = -n; b <= n; ++b) {
    for (int a = -2 * n; a <= 2 * n; ++a) {
      const double X = a + 0.5 * b, Y = half_sqrt3 * b;
      const double len = std::hypot(X, Y);
      if (len > n + 1e-9) continue;
      index.emplace(std::pair{a, b}, static_cast<int>(points.size()));
      points.push_back(surface_point(disk, disk.radius * len / n, len > 0 ? std::atan2(Y, X) : 0.0));
    }
  }
  std::vector<Eigen::Vector3i> faces;
  auto find = [&](int a, int b) {
    const auto it = index.find({a, b});
    return it == index.end() ? -1 : it->second;
  };
  for (int b = -n; b <= n; ++b) {
    for (int a = -2 * n; a <= 2 * n; ++a) {
      const int p = find(a, b);
      if (p < 0) continue;
      const int right = find(a + 1, b), up = find(a, b + 1), up_left = find(a - 1, b + 1);
      if (right >= 0 && up >= 0) faces.emplace_back(p, right, up);
      if (up >= 0 && up_left >= 0) faces.emplace_back(p, up, up_left);
    }
  }
  VertexMatrix V(static_cast<Eigen::Index>(points.size()), 3);
  for (size_t i = 0; i < points.size(); ++i) V.row(static_cast<Eigen::Index>(i)) = points[i].transpose();
  FaceMatrix F(static_cast<Eigen::Index>(faces.size()), 3);
  for (size_t f = 0; f < faces.size(); ++f) F.row(static_cast<Eigen::Index>(f)) = faces[f].transpose();
  return TriMesh(std::move(V), std::move(F));
}

TriMesh mesh_sphere(const GeodesicSphere& sphere, int subdivisions) {
  require_sphere(sphere);
  if (subdivisions < 0) throw InvalidArgument("mesh_sphere: subdivisions must be nonnegative");
  std::vector<Eigen::Vector3d> P = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                                    {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  std::vector<Eigen::Vector3i> T = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
                                    {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  for (int level = 0; level < subdivisions; ++level) {
    std::map<std::pair<int, int>, int> mid;
    auto midpoint = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = mid.find(key);
      if (it != mid.end()) return it->second;
      P.push_back((P[a] + P[b]).normalized());
      const int id = static_cast<int>(P.size()) - 1;
      mid.emplace(key, id);
      return id;
    };
    std::vector<Eigen::Vector3i> next;
    for (const auto& t : T) {
      const int ab = midpoint(t(0), t(1)), bc = midpoint(t(1), t(2)), ca = midpoint(t(2), t(0));
      next.emplace_back(t(0), ab, ca);
      next.emplace_back(ab, t(1), bc);
      next.emplace_back(ca, bc, t(2));
      next.emplace_back(ab, bc, ca);
    }
    T = std::move(next);
  }
  const double zc = sphere.center.z() * std::cosh(sphere.radius);
  const double re = sphere.center.z() * std::sinh(sphere.radius);
  VertexMatrix V(static_cast<Eigen::Index>(P.size()), 3);
  for (size_t i = 0; i < P.size(); ++i)
    V.row(static_cast<Eigen::Index>(i)) =
        (Eigen::Vector3d(sphere.center.x(), sphere.center.y(), zc) + re * P[i]).transpose();
  FaceMatrix F(static_cast<Eigen::Index>(T.size()), 3);
  for (size_t f = 0; f < T.size(); ++f) F.row(static_cast<Eigen::Index>(f)) = T[f].transpose();
  return TriMesh(std::move(V), std::move(F));
}

// ---------------------------------------------------------------------------

bool region_membership(const HPointd& p, double A, double B, double H, double c, double t_floor) {
  if (!(H >= 0 && H < 1)) throw InvalidArgument("region_membership: H must lie in [0, 1)");
  if (c < 0) throw InvalidArgument("region_membership: c must be nonnegative");
  if (!(t_floor > 0)) throw InvalidArgument("region_membership: t_floor must be positive");
  if (p.z() < t_floor) return false;
  const double d = std::atanh(H);
  const double to_minus_wall = dist_to_vertical_plane(p, VerticalPlaned(A, B, c));
  const double to_plus_wall = dist_to_vertical_plane(p, VerticalPlaned(A, B, -c));
  return to_minus_wall >= -d && to_plus_wall <= d;
}

}  // namespace hcmc
