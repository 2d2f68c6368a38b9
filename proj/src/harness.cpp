#include "hcmc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "hcmc/comparison.hpp"
#include "hcmc/cusp.hpp"
#include "hcmc/dmesh.hpp"

namespace hcmc {

namespace {

constexpr double kDistanceSlack = 1e-9;
constexpr double kGaussBonnetBound = 1e-9;
/// Errors below this are treated as exact when fitting convergence orders.
constexpr double kRoundingLevel = 1e-11;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string describe(const Geodesicd& g) {
  if (const auto* line = std::get_if<VerticalLine<double>>(&g))
    return "vertical(" + fmt(line->x0) + "," + fmt(line->y0) + ")";
  const auto& sc = std::get<Semicircle<double>>(g);
  return "semicircle(" + fmt(sc.a().x()) + "," + fmt(sc.a().y()) + ";" + fmt(sc.b().x()) + "," +
         fmt(sc.b().y()) + ")";
}

HPointd vertex_point(const TriMesh& m, Eigen::Index i) {
  return HPointd(m.vertices()(i, 0), m.vertices()(i, 1), m.vertices()(i, 2));
}

double max_distance_to(const TriMesh& m, const Geodesicd& g) {
  double worst = 0;
  for (Eigen::Index i = 0; i < m.num_vertices(); ++i)
    worst = std::max(worst, dist_to_geodesic(vertex_point(m, i), g));
  return worst;
}

std::vector<int> interior_vertices(const TriMesh& m) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(m.num_vertices()); ++i)
    if (!m.is_boundary_vertex(i)) out.push_back(i);
  return out;
}

/// Least-squares order of log(err) against log(h); infinity when every error
/// is at rounding level.
double observed_order(const std::vector<double>& h, const std::vector<double>& err) {
  if (*std::max_element(err.begin(), err.end()) < kRoundingLevel)
    return std::numeric_limits<double>::infinity();
  std::vector<double> lh, le;
  for (size_t i = 0; i < h.size(); ++i) {
    lh.push_back(std::log(h[i]));
    le.push_back(std::log(std::max(err[i], kRoundingLevel)));
  }
  return fitted_slope(lh, le);
}

void record_order(CheckReport& r, double order) {
  if (std::isinf(order)) {
    r.measured.emplace_back("exact_to_rounding", 1.0);
  } else {
    r.measured.emplace_back("exact_to_rounding", 0.0);
    r.measured.emplace_back("order", order);
  }
}

}  // namespace

double CheckReport::value(const std::string& key) const {
  for (const auto& [k, v] : measured)
    if (k == key) return v;
  throw InvalidArgument("CheckReport " + name + ": no measurement named " + key);
}

bool CheckReport::has(const std::string& key) const {
  return std::any_of(measured.begin(), measured.end(),
                     [&](const auto& kv) { return kv.first == key; });
}

Fields mesh_resolution(const TriMesh& m) {
  return {{"vertices", long(m.num_vertices())},
          {"faces", long(m.num_faces())},
          {"max_edge_length", max_edge_length(m)}};
}

double fitted_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw InvalidArgument("fitted_slope: need two or more paired samples");
  const double n = double(x.size());
  double sx = 0, sy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxy = 0, sxx = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0) throw InvalidArgument("fitted_slope: abscissae are all equal");
  return sxy / sxx;
}

// ---------------------------------------------------------------------------

CheckReport check_isoperimetric(const TriMesh& m, double a, const Geodesicd& g, double r,
                                const IsoOptions& opt) {
  if (m.boundary_loops().empty())
    throw InvalidArgument("check_isoperimetric: mesh has no boundary");
  const ComparisonProfile prof = build_profile(a, r);
  const double area = mesh_area(m);
  const double length = boundary_length(m);
  const double max_d = max_distance_to(m, g);
  const bool inside = max_d <= r + kDistanceSlack;
  const bool curvature_ok = !opt.mean_curvature || std::abs(*opt.mean_curvature) <= a;

  CheckReport rep;
  rep.name = "isoperimetric";
  rep.inputs = {{"a", a}, {"r", r}, {"geodesic", describe(g)}};
  if (opt.mean_curvature) rep.inputs.emplace_back("mean_curvature", *opt.mean_curvature);
  rep.measured = {{"area", area},
                  {"boundary_length", length},
                  {"ratio", area / length},
                  {"C", prof.C},
                  {"max_distance", max_d},
                  {"distance_hypothesis_violated", inside ? 0.0 : 1.0},
                  {"mean_curvature_hypothesis_violated", curvature_ok ? 0.0 : 1.0}};
  rep.primary = "ratio";
  rep.bound = prof.C;
  rep.tolerance = opt.tolerance;
  rep.pass = inside && curvature_ok && area <= prof.C * length * (1 + opt.tolerance);
  rep.resolution = mesh_resolution(m);
  return rep;
}

double spot_check_mean_curvature(const Surface& s, const ParamRect& rect, int n) {
  if (n < 1) throw InvalidArgument("spot_check_mean_curvature: need n >= 1");
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double u = rect.u0 + (rect.u1 - rect.u0) * (i + 0.5) / n;
      const double v = rect.v0 + (rect.v1 - rect.v0) * (j + 0.5) / n;
      worst = std::max(worst, std::abs(numeric_second_fundamental_form(s, u, v).H));
    }
  }
  return worst;
}

CheckReport check_claim_superharmonic(const TriMesh& m, double a, const Geodesicd& g, double r,
                                      double kappa) {
  const std::vector<int> interior = interior_vertices(m);
  if (interior.empty()) throw InvalidArgument("check_claim_superharmonic: no interior vertices");
  const ComparisonProfile prof = build_profile(a, r);
  ScalarField phi(m.num_vertices());
  double max_d = 0;
  for (Eigen::Index i = 0; i < m.num_vertices(); ++i) {
    const double R = dist_to_geodesic(vertex_point(m, i), g);
    max_d = std::max(max_d, R);
    phi(i) = profile_function(prof, R);
  }
  const ScalarField lap = laplacian(m, phi);
  double lo = std::numeric_limits<double>::infinity();
  for (int v : interior) lo = std::min(lo, lap(v));
  const double h = max_edge_length(m);
  const bool inside = max_d <= r + kDistanceSlack;

  CheckReport rep;
  rep.name = "claim_superharmonic";
  rep.inputs = {{"a", a}, {"r", r}, {"geodesic", describe(g)}, {"kappa", kappa}};
  rep.measured = {{"min_laplacian", lo},
                  {"C2", prof.C2},
                  {"k", prof.k ? double(*prof.k) : 0.0},
                  {"max_distance", max_d},
                  {"distance_hypothesis_violated", inside ? 0.0 : 1.0},
                  {"h", h}};
  rep.primary = "min_laplacian";
  rep.bound = prof.C2;
  rep.tolerance = kappa * h;
  rep.pass = inside && lo >= prof.C2 - rep.tolerance;
  rep.resolution = mesh_resolution(m);
  return rep;
}

CheckReport check_cusp_superharmonic(const TriMesh& m, double H, double kappa) {
  if (!(std::abs(H) < 1))
    throw InvalidArgument("check_cusp_superharmonic: requires |H| < 1 (horospheres are excluded)");
  const std::vector<int> interior = interior_vertices(m);
  if (interior.empty()) throw InvalidArgument("check_cusp_superharmonic: no interior vertices");
  const ScalarField logz = m.vertices().col(2).array().log().matrix();
  const ScalarField lap = laplacian(m, logz);
  double hi = -std::numeric_limits<double>::infinity();
  double lo = std::numeric_limits<double>::infinity();
  for (int v : interior) {
    hi = std::max(hi, lap(v));
    lo = std::min(lo, lap(v));
  }
  const double min_z = m.vertices().col(2).minCoeff();
  const bool in_cusp = min_z >= 1 - 1e-12;
  const double h = max_edge_length(m);

  CheckReport rep;
  rep.name = "cusp_superharmonic";
  rep.inputs = {{"H", H}, {"kappa", kappa}};
  rep.measured = {{"max_laplacian", hi},
                  {"min_laplacian", lo},
                  {"min_height", min_z},
                  {"height_hypothesis_violated", in_cusp ? 0.0 : 1.0},
                  {"h", h}};
  rep.primary = "max_laplacian";
  rep.bound = H * H - 1;
  rep.tolerance = kappa * h;
  rep.pass = in_cusp && hi <= rep.bound + rep.tolerance;
  rep.resolution = mesh_resolution(m);
  return rep;
}

CheckReport check_cusp_area(const TriMesh& m, const Latticed& L, double H, double tolerance) {
  const CuspAreaReport a = cusp_area_bound_check(m, L, H, tolerance);
  CheckReport rep;
  rep.name = "cusp_area";
  rep.inputs = {{"H", H},
                {"ux", L.u().x()},
                {"uy", L.u().y()},
                {"vx", L.v().x()},
                {"vy", L.v().y()}};
  rep.measured = {{"area", a.area}, {"len_gamma1", a.len_gamma1}, {"area_over_bound", a.area / a.bound}};
  rep.primary = "area";
  rep.bound = a.bound;
  rep.tolerance = a.tolerance;
  rep.pass = a.pass;
  rep.resolution = mesh_resolution(m);
  return rep;
}

CheckReport check_total_curvature(const TriMesh& m, std::optional<double> umbilic_H, double kappa) {
  const FaceGeometry g = face_angles_area(m);
  const double total = total_curvature(m, g);
  const double turning = boundary_turning(m, g);
  const long chi = euler_characteristic(m);
  const double two_pi_chi = 2 * std::numbers::pi * double(chi);
  const double residual = std::abs(total + turning - two_pi_chi);
  const double area = g.area.sum();

  CheckReport rep;
  rep.name = "total_curvature";
  rep.measured = {{"residual", residual},
                  {"total_curvature", total},
                  {"boundary_turning", turning},
                  {"two_pi_chi", two_pi_chi},
                  {"euler_characteristic", double(chi)},
                  {"area", area}};
  rep.primary = "residual";
  rep.bound = kGaussBonnetBound;
  rep.pass = residual < kGaussBonnetBound;
  if (umbilic_H) {
    const double h = max_edge_length(m);
    const double density = total / area;
    const double target = *umbilic_H * *umbilic_H - 1;
    rep.inputs = {{"H", *umbilic_H}, {"kappa", kappa}};
    rep.measured.emplace_back("density", density);
    rep.measured.emplace_back("density_target", target);
    rep.measured.emplace_back("density_error", std::abs(density - target));
    rep.measured.emplace_back("h", h);
    rep.tolerance = kappa * h;
    rep.pass = rep.pass && std::abs(density - target) <= rep.tolerance;
  }
  rep.resolution = mesh_resolution(m);
  return rep;
}

CheckReport check_scaling_flow(double H, double c, const FlowOptions& opt) {
  if (!(H >= 0 && H < 1)) throw InvalidArgument("check_scaling_flow: H must lie in [0, 1)");
  if (c == 0) throw InvalidArgument("check_scaling_flow: c = 0 is already invariant under the flow");
  if (opt.t_grid.size() < 2) throw InvalidArgument("check_scaling_flow: need at least two times");
  if (opt.samples < 2) throw InvalidArgument("check_scaling_flow: need at least two samples");

  const TiltedPlane plane(1.0, 0.0, c, opt.side, H);
  const VerticalPlaned mid(1.0, 0.0, 0.0);
  const double target = side_sign(opt.side) * std::atanh(H);
  CheckReport rep;
  rep.name = "scaling_flow";
  rep.inputs = {{"H", H}, {"c", c}, {"side", std::string(opt.side == Side::Plus ? "+" : "-")}};
  std::vector<double> ts, logs;
  for (double t : opt.t_grid) {
    const Isometryd flow = sigma(t);
    const double grow = std::exp(t);
    double sup = 0;
    for (int i = 0; i < opt.samples; ++i) {
      for (int j = 0; j < opt.samples; ++j) {
        const double s = -1 + 2.0 * i / (opt.samples - 1);
        const double z = 1 + 1.0 * j / (opt.samples - 1);
        // sigma_t maps this point of P_{H,c} to the band point (s, z) of P_{H, e^-t c}.
        const HPointd q = flow(HPointd(surface_point(plane, grow * s, grow * z)));
        sup = std::max(sup, std::abs(dist_to_vertical_plane(q, mid) - target));
      }
    }
    if (!(sup > 0)) throw DegenerateInput("check_scaling_flow: distance vanished at t = " + fmt(t));
    ts.push_back(t);
    logs.push_back(std::log(sup));
    rep.series.push_back({"scaling_flow_H" + fmt(H) + "_c" + fmt(c), t, sup, 0.0});
  }
  const double slope = fitted_slope(ts, logs);
  rep.inputs.emplace_back("t_min", ts.front());
  rep.inputs.emplace_back("t_max", ts.back());
  rep.inputs.emplace_back("samples", long(opt.samples));
  rep.measured = {{"slope", slope}, {"sup_distance_first", std::exp(logs.front())},
                  {"sup_distance_last", std::exp(logs.back())}};
  rep.primary = "slope";
  rep.bound = opt.expected_slope;
  rep.tolerance = opt.slope_tolerance * std::abs(opt.expected_slope);
  rep.pass = std::abs(slope - opt.expected_slope) <= rep.tolerance;
  rep.resolution = {{"times", long(ts.size())}, {"samples_per_time", long(opt.samples * opt.samples)}};
  return rep;
}

CheckReport check_laplacian_anchor(const std::vector<TriMesh>& meshes, double kappa_ceiling) {
  if (meshes.size() < 2) throw InvalidArgument("check_laplacian_anchor: need two or more meshes");
  CheckReport rep;
  rep.name = "laplacian_anchor";
  rep.inputs = {{"field", std::string("log z")}, {"target", -1.0}, {"kappa_ceiling", kappa_ceiling}};
  std::vector<double> hs, errs;
  double kappa_fit = 0;
  for (const TriMesh& m : meshes) {
    const std::vector<int> interior = interior_vertices(m);
    if (interior.empty()) throw InvalidArgument("check_laplacian_anchor: mesh without interior vertices");
    const ScalarField logz = m.vertices().col(2).array().log().matrix();
    const ScalarField lap = laplacian(m, logz);
    double err = 0;
    for (int v : interior) err = std::max(err, std::abs(lap(v) + 1));
    const double h = max_edge_length(m);
    hs.push_back(h);
    errs.push_back(err);
    kappa_fit = std::max(kappa_fit, err / h);
    rep.series.push_back({"laplacian_anchor", h, err, err});
  }
  const double order = observed_order(hs, errs);
  rep.measured = {{"kappa", kappa_fit}, {"max_error_finest", errs.back()}};
  record_order(rep, order);
  rep.primary = "kappa";
  rep.bound = kappa_ceiling;
  rep.tolerance = 0;
  rep.pass = kappa_fit <= kappa_ceiling && order >= 1;
  rep.resolution = {{"meshes", long(meshes.size())}, {"h_finest", hs.back()}};
  return rep;
}

CheckReport check_curvature_density(const std::vector<TriMesh>& meshes, double H, double kappa) {
  if (meshes.size() < 2) throw InvalidArgument("check_curvature_density: need two or more meshes");
  const double target = H * H - 1;
  CheckReport rep;
  rep.name = "curvature_density";
  rep.inputs = {{"H", H}, {"kappa", kappa}};
  std::vector<double> hs, errs;
  bool within = true;
  double density = 0;
  for (const TriMesh& m : meshes) {
    density = total_curvature(m) / mesh_area(m);
    const double err = std::abs(density - target);
    const double h = max_edge_length(m);
    within = within && err <= kappa * h;
    hs.push_back(h);
    errs.push_back(err);
    rep.series.push_back({"curvature_density_H" + fmt(H), h, density, err});
  }
  const double order = observed_order(hs, errs);
  rep.measured = {{"density_finest", density}, {"error_finest", errs.back()}};
  record_order(rep, order);
  rep.primary = "density_finest";
  rep.bound = target;
  rep.tolerance = kappa * hs.back();
  rep.pass = within && order >= 1;
  rep.resolution = {{"meshes", long(meshes.size())}, {"h_finest", hs.back()}};
  return rep;
}

CheckReport negative_control(CheckReport inner) {
  inner.measured.emplace_back("inner_pass", inner.pass ? 1.0 : 0.0);
  inner.name = "negative_control:" + inner.name;
  inner.pass = !inner.pass;
  return inner;
}

}  // namespace hcmc
