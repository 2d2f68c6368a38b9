#include "hcmc/cusp.hpp"

#include <Eigen/Geometry>

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "hcmc/dmesh.hpp"
#include "hcmc/quadrature.hpp"

namespace hcmc {

namespace {

constexpr double kCoordinateSnap = 1e-12;

Eigen::Vector2d lattice_coordinates(const Latticed& L, double x, double y) {
  const double d = L.det();
  return {(x * L.v().y() - y * L.v().x()) / d, (L.u().x() * y - L.u().y() * x) / d};
}

bool in_fundamental_domain(const Eigen::Vector2d& st) {
  return st.x() >= -kCoordinateSnap && st.x() < 1 - kCoordinateSnap &&
         st.y() >= -kCoordinateSnap && st.y() < 1 - kCoordinateSnap;
}

double length_of(const Latticed& L, long m, long n) {
  return L.vector(m, n).norm();
}

}  // namespace

Reduction reduce(const HPointd& p, const Latticed& L) {
  double x = p.x(), y = p.y();
  HomotopyClass removed;
  for (int iter = 0; iter < 8; ++iter) {
    const Eigen::Vector2d st = lattice_coordinates(L, x, y);
    if (in_fundamental_domain(st)) return {HPointd(x, y, p.z()), removed};
    const long dm = static_cast<long>(std::floor(st.x() + kCoordinateSnap));
    const long dn = static_cast<long>(std::floor(st.y() + kCoordinateSnap));
    const Eigen::Vector2d shift = L.vector(dm, dn);
    x -= shift.x();
    y -= shift.y();
    removed.m += dm;
    removed.n += dn;
  }
  throw DegenerateInput("reduce: lattice coordinates did not settle (ill-conditioned lattice)");
}

ShortestVector shortest_vector(const Latticed& L) {
  // Coefficients of the working basis b1, b2 over (u, v); vectors are always
  // re-evaluated from the integer coefficients so no error accumulates.
  long a1 = 1, c1 = 0, a2 = 0, c2 = 1;
  auto vec = [&](long m, long n) { return L.vector(m, n); };
  auto norm2 = [&](long m, long n) { return vec(m, n).squaredNorm(); };
  if (norm2(a1, c1) > norm2(a2, c2)) {
    std::swap(a1, a2);
    std::swap(c1, c2);
  }
  for (int iter = 0; iter < 10000; ++iter) {
    const Eigen::Vector2d b1 = vec(a1, c1), b2 = vec(a2, c2);
    const double mu = std::round(b1.dot(b2) / b1.squaredNorm());
    const long q = static_cast<long>(mu);
    a2 -= q * a1;
    c2 -= q * c1;
    if (norm2(a2, c2) >= norm2(a1, c1)) break;
    std::swap(a1, a2);
    std::swap(c1, c2);
  }
  // The reduced basis contains a shortest vector; comparing against the
  // neighbouring combinations guards against near-ties decided by rounding.
  const std::array<std::array<long, 2>, 4> candidates = {
      {{a1, c1}, {a2, c2}, {a1 + a2, c1 + c2}, {a1 - a2, c1 - c2}}};
  ShortestVector best{a1, c1, length_of(L, a1, c1)};
  for (const auto& cand : candidates) {
    if (cand[0] == 0 && cand[1] == 0) continue;
    const double len = length_of(L, cand[0], cand[1]);
    if (len < best.length) best = {cand[0], cand[1], len};
  }
  return best;
}

double systole_torus(const Latticed& L, double t) {
  if (!(t > 0)) throw InvalidArgument("systole_torus: t must be positive");
  return shortest_vector(L).length / t;
}

double injectivity_radius_torus(const Latticed& L, double t) { return systole_torus(L, t) / 2; }

PrimitiveSplit primitive_split(const HomotopyClass& c) {
  if (c.is_trivial()) throw InvalidArgument("primitive_split: the trivial class has no primitive root");
  const long k = std::gcd(c.m, c.n);
  return {k, c.m / k, c.n / k};
}

double plane_shift(const Latticed& L, long k1, long k2, long m, long n) {
  if (std::gcd(k1, k2) != 1) throw InvalidArgument("plane_shift: (k1, k2) must be coprime");
  return double(k1 * n - k2 * m) * L.det();
}

double plane_family_period(const Latticed& L, long k1, long k2) {
  if (std::gcd(k1, k2) != 1)
    throw InvalidArgument("plane_family_period: (k1, k2) must be coprime");
  return std::abs(L.det());
}

TiltedPlane cusp_plane(const Latticed& L, long k1, long k2, double c, Side side, double H) {
  const Eigen::Vector2d w = L.vector(k1, k2);
  return TiltedPlane(w.y(), -w.x(), c, side, H);
}

double tilted_annulus_area(const Latticed& L, long k1, long k2, double H, double t_lo,
                           double t_hi) {
  if (!(H >= 0 && H < 1)) throw InvalidArgument("tilted_annulus_area: H must lie in [0, 1)");
  if (!(t_lo > 0)) throw InvalidArgument("tilted_annulus_area: t_lo must be positive");
  if (!(t_hi > t_lo)) throw InvalidArgument("tilted_annulus_area: t_hi must exceed t_lo");
  if (k1 == 0 && k2 == 0) throw InvalidArgument("tilted_annulus_area: (k1, k2) must be nonzero");
  const TiltedPlane plane = cusp_plane(L, k1, k2, 0.0, Side::Plus, H);
  const double period = L.vector(k1, k2).norm();
  // Induced metric is the Euclidean one over z^2, so the area element is
  // |X_s x X_z| / z^2 ds dz. With w = 1/z the z^-2 factor cancels dz.
  const Eigen::Vector3d xs(plane.unit_direction().x(), plane.unit_direction().y(), 0);
  const Eigen::Vector2d tilt = side_sign(plane.side()) * plane.slope() * plane.unit_normal();
  const Eigen::Vector3d xz(tilt.x(), tilt.y(), 1.0);
  const double element = period * xs.cross(xz).norm();
  auto density = [&](double) { return element; };
  const double w_lo = std::isinf(t_hi) ? 0.0 : 1.0 / t_hi;
  return integrate(density, w_lo, 1.0 / t_lo, 1e-8).value;
}

namespace {

void require_annulus_options(const AnnulusMeshOptions& opt) {
  if (!(opt.t_lo > 0) || !(opt.t_hi > opt.t_lo) || !std::isfinite(opt.t_hi))
    throw InvalidArgument("annulus mesh: need 0 < t_lo < t_hi < infinity");
  if (opt.n_along < 3 || opt.n_height < 1)
    throw InvalidArgument("annulus mesh: need n_along >= 3 and n_height >= 1");
}

/// Grid around the annulus: rows[j] holds the positions of row j, faces
/// between consecutive rows wrap with the deck shift w.
TriMesh periodic_strip(const std::vector<std::vector<Eigen::Vector3d>>& rows,
                       const Eigen::Vector2d& w) {
  const int n = static_cast<int>(rows.front().size());
  const int nr = static_cast<int>(rows.size());
  VertexMatrix V(n * nr, 3);
  for (int j = 0; j < nr; ++j)
    for (int i = 0; i < n; ++i) V.row(j * n + i) = rows[static_cast<size_t>(j)][static_cast<size_t>(i)].transpose();
  FaceMatrix F(2 * n * (nr - 1), 3);
  std::vector<CornerShift> S(static_cast<size_t>(F.rows()), CornerShift::Zero());
  int f = 0;
  for (int j = 0; j + 1 < nr; ++j) {
    for (int i = 0; i < n; ++i) {
      const bool wrap = (i + 1 == n);
      const int i1 = wrap ? 0 : i + 1;
      const int a = j * n + i, b = j * n + i1, c = (j + 1) * n + i1, d = (j + 1) * n + i;
      F.row(f) << a, b, c;
      if (wrap) S[static_cast<size_t>(f)].row(1) = w.transpose(), S[static_cast<size_t>(f)].row(2) = w.transpose();
      ++f;
      F.row(f) << a, c, d;
      if (wrap) S[static_cast<size_t>(f)].row(1) = w.transpose();
      ++f;
    }
  }
  return TriMesh(std::move(V), std::move(F), std::move(S));
}

}  // namespace

TriMesh mesh_quotient_annulus(const Latticed& L, long k1, long k2, double H,
                              const AnnulusMeshOptions& opt) {
  return mesh_flanged_annulus(L, k1, k2, H, opt, 0.0, 0);
}

TriMesh mesh_flanged_annulus(const Latticed& L, long k1, long k2, double H,
                             const AnnulusMeshOptions& opt, double flange_width, int n_flange) {
  require_annulus_options(opt);
  if (flange_width < 0 || n_flange < 0 || (flange_width > 0) != (n_flange > 0))
    throw InvalidArgument("annulus mesh: flange needs a positive width and row count together");
  const TiltedPlane plane = cusp_plane(L, k1, k2, opt.c, opt.side, H);
  const Eigen::Vector2d w = L.vector(k1, k2);
  const double period = w.norm();
  std::vector<std::vector<Eigen::Vector3d>> rows;
  auto param_row = [&](double z, double extra_offset) {
    std::vector<Eigen::Vector3d> row;
    for (int i = 0; i < opt.n_along; ++i) {
      Eigen::Vector3d p = surface_point(plane, period * i / opt.n_along, z);
      p.head<2>() += extra_offset * plane.unit_normal();
      row.push_back(p);
    }
    return row;
  };
  // The flange extends horizontally away from the plane's tilt direction.
  const double away = -side_sign(opt.side);
  for (int k = 0; k < n_flange; ++k)
    rows.push_back(param_row(opt.t_lo, away * flange_width * (n_flange - k) / n_flange));
  for (int j = 0; j <= opt.n_height; ++j) {
    const double z = opt.t_lo * std::pow(opt.t_hi / opt.t_lo, double(j) / opt.n_height);
    rows.push_back(param_row(z, 0.0));
  }
  return periodic_strip(rows, w);
}

CuspAreaReport cusp_area_bound_check(const TriMesh& m, const Latticed& L, double H,
                                     double tolerance) {
  if (!(H >= 0 && H < 1)) throw InvalidArgument("cusp_area_bound_check: H must lie in [0, 1)");
  if (m.boundary_loops().empty())
    throw InvalidArgument("cusp_area_bound_check: mesh has no boundary");
  for (const CornerShift& s : m.shifts()) {
    for (int c = 0; c < 3; ++c) {
      const Eigen::Vector2d st = lattice_coordinates(L, s(c, 0), s(c, 1));
      if ((st - st.array().round().matrix()).norm() > 1e-9)
        throw InvalidArgument("cusp_area_bound_check: corner shift is not a lattice vector");
    }
  }
  const std::vector<int>* lowest = nullptr;
  double lowest_z = 0;
  for (const auto& loop : m.boundary_loops()) {
    double z = 0;
    for (int v : loop) z += m.vertices()(v, 2);
    z /= double(loop.size());
    if (!lowest || z < lowest_z) {
      lowest = &loop;
      lowest_z = z;
    }
  }
  CuspAreaReport r;
  r.area = mesh_area(m);
  r.len_gamma1 = loop_length(m, *lowest);
  r.bound = r.len_gamma1 / ((1 - H) * (1 + H));
  r.tolerance = tolerance;
  r.pass = r.area <= r.bound * (1 + tolerance);
  return r;
}

}  // namespace hcmc
