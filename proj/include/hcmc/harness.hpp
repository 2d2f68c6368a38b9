#pragma once

// Verification checks. Each check returns a CheckReport carrying its inputs,
// the measured quantities, the bound, the tolerance and the verdict.
//
// Mesh-based inequality checks use a first-order discretization tolerance
// kappa * h, h being the largest hyperbolic edge length of the mesh.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hcmc/hmodel.hpp"
#include "hcmc/lattice.hpp"
#include "hcmc/surfaces.hpp"
#include "hcmc/trimesh.hpp"

namespace hcmc {

/// Consistency constant of the discrete Laplacian. The vertical-plane anchor
/// fits about 0.08; the curvature-density families need about 0.35.
inline constexpr double kDefaultKappa = 1.0;

/// Largest kappa the consistency anchor may fit.
inline constexpr double kKappaCeiling = 3.0;

using FieldValue = std::variant<long, double, bool, std::string>;
using Fields = std::vector<std::pair<std::string, FieldValue>>;
using Measurements = std::vector<std::pair<std::string, double>>;

/// One sample of a refinement series, for plotting.
struct SeriesPoint {
  std::string series;
  double h = 0;
  double value = 0;
  double error = 0;
};

struct CheckReport {
  std::string name;
  Fields inputs;
  Measurements measured;
  std::string primary;  ///< key of `measured` quoted in the summary CSV
  double bound = 0;
  double tolerance = 0;
  bool pass = false;
  Fields resolution;
  std::vector<SeriesPoint> series;

  /// Value of a measured quantity; throws InvalidArgument when absent.
  double value(const std::string& key) const;
  bool has(const std::string& key) const;
};

/// Vertex count, face count and largest edge length of a mesh.
Fields mesh_resolution(const TriMesh& m);

struct IsoOptions {
  double tolerance = 0.01;  ///< relative slack on the inequality
  /// Mean curvature of the surface, when known. |H| > a is reported as a
  /// violated hypothesis and fails the check.
  std::optional<double> mean_curvature;
};

/// Area(m) <= C(a, r) Length(boundary). Every vertex must lie within r of g
/// (with 1e-9 slack for boundary vertices placed exactly at distance r).
CheckReport check_isoperimetric(const TriMesh& m, double a, const Geodesicd& g, double r,
                                const IsoOptions& opt = {});

/// Largest |H| found by numeric_second_fundamental_form on an n x n grid of
/// interior parameter points: the optional mean-curvature spot check.
double spot_check_mean_curvature(const Surface& s, const ParamRect& rect, int n = 4);

/// min over interior vertices of Laplacian(f o R) >= C2 - kappa h, where f is
/// the comparison function of build_profile(a, r) and R the distance to g.
CheckReport check_claim_superharmonic(const TriMesh& m, double a, const Geodesicd& g, double r,
                                      double kappa = kDefaultKappa);

/// max over interior vertices of Laplacian(log z) <= H^2 - 1 + kappa h.
/// Requires H < 1.
CheckReport check_cusp_superharmonic(const TriMesh& m, double H, double kappa = kDefaultKappa);

/// Area(m) <= Length(Gamma_1) / (1 - H^2) within the relative tolerance.
CheckReport check_cusp_area(const TriMesh& m, const Latticed& L, double H,
                            double tolerance = 0.01);

/// Polyhedral Gauss-Bonnet residual |total + turning - 2 pi chi| < 1e-9.
/// With `umbilic_H` the curvature density total/area is also compared with
/// H^2 - 1 within kappa h.
CheckReport check_total_curvature(const TriMesh& m, std::optional<double> umbilic_H = {},
                                  double kappa = kDefaultKappa);

struct FlowOptions {
  Side side = Side::Plus;
  std::vector<double> t_grid = {4, 5, 6, 7, 8, 9, 10, 11, 12};
  double expected_slope = -1;
  double slope_tolerance = 0.02;  ///< relative
  int samples = 9;                ///< per direction of the sample band
};

/// Fixed ambient band {|s| <= 1, 1 <= z <= 2} pulled back to P_{H,c} and pushed
/// forward by sigma_t; the sup distance to P_{H,0} decays like e^{-t}.
/// Fits log(sup distance) against t. c = 0 is rejected.
CheckReport check_scaling_flow(double H, double c, const FlowOptions& opt = {});

/// Max interior |Laplacian(log z) + 1| on a family of vertical-plane meshes;
/// fits kappa = max err/h and the convergence order.
CheckReport check_laplacian_anchor(const std::vector<TriMesh>& meshes,
                                   double kappa_ceiling = kKappaCeiling);

/// total_curvature / mesh_area against H^2 - 1 on a refinement family of
/// totally umbilic meshes. Passes when the error stays within kappa h and the
/// observed order is at least 1 (or the error is at rounding level).
CheckReport check_curvature_density(const std::vector<TriMesh>& meshes, double H,
                                    double kappa = kDefaultKappa);

/// Inverts the verdict of a check run on inputs built to violate it.
CheckReport negative_control(CheckReport inner);

/// Least-squares slope of y against x.
double fitted_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace hcmc
