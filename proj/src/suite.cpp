#include "hcmc/suite.hpp"

#include <cmath>
#include <numbers>

#include "hcmc/cusp.hpp"
#include "hcmc/surfaces.hpp"

namespace hcmc {

namespace {

constexpr double kPi = std::numbers::pi;
const Geodesicd kAxis = VerticalLine<double>{};

}  // namespace

TriMesh vertical_plane_mesh(double h_target) {
  if (!(h_target > 0)) throw InvalidArgument("vertical_plane_mesh: h must be positive");
  // Cells of side d at height >= 1 have diagonals of hyperbolic length <= sqrt(2) d.
  const int n = static_cast<int>(std::ceil(std::sqrt(2.0) / h_target));
  return mesh_patch(TiltedPlane(1, 0, 0, Side::Plus, 0), {-0.5, 0.5, 1.0, 2.0}, n, n);
}

TriMesh tilted_plane_mesh(double H, int n) {
  return mesh_patch(TiltedPlane(1, 0, 0, Side::Plus, H), {-0.5, 0.5, 1.0, 2.0}, n, n);
}

TriMesh anchor_disk_mesh(int rings) {
  return mesh_disk(GeodesicDisk{{0, 0, 1}, 1.0, GeodesicDisk::Plane::Vertical, 0.0}, rings);
}

TriMesh anchor_disk_lattice_mesh(int n) {
  return mesh_disk_lattice(GeodesicDisk{{0, 0, 1}, 1.0, GeodesicDisk::Plane::Vertical, 0.0}, n);
}

TriMesh tube_mesh(double rho, double L, int n_axis, int n_angle) {
  return mesh_cylinder(GeodesicCylinder{kAxis, rho}, 0.0, L, n_axis, n_angle);
}

TriMesh unit_cusp_annulus(double H, int n_along, int n_height, double t_hi) {
  AnnulusMeshOptions opt;
  opt.t_lo = 1;
  opt.t_hi = t_hi;
  opt.n_along = n_along;
  opt.n_height = n_height;
  return mesh_quotient_annulus(Latticed({1, 0}, {0, 1}), 1, 0, H, opt);
}

std::vector<NamedMesh> gauss_bonnet_shapes(int level) {
  if (level < 1) throw InvalidArgument("gauss_bonnet_shapes: level must be at least 1");
  const int n = 4 << level;
  const Latticed unit({1, 0}, {0, 1});
  const Latticed skew({1, 0}, {0.3, 1.2});
  AnnulusMeshOptions ann;
  ann.t_lo = 1;
  ann.t_hi = 3;
  ann.n_along = n;
  ann.n_height = n;
  AnnulusMeshOptions skew_ann = ann;
  skew_ann.c = 0.25;
  skew_ann.side = Side::Minus;

  std::vector<NamedMesh> out;
  out.push_back({"horosphere_t1", mesh_patch(Horosphere{1}, {0, 1, 0, 1}, n, n)});
  out.push_back({"horosphere_t3", mesh_patch(Horosphere{3}, {-1, 2, 0, 1}, n, n)});
  out.push_back({"vertical_plane", mesh_patch(TiltedPlane(1, 2, 0.5, Side::Plus, 0),
                                              {-0.5, 0.5, 1, 2}, n, n)});
  out.push_back({"tilted_H0.5", tilted_plane_mesh(0.5, n)});
  out.push_back({"tilted_H0.9_minus", mesh_patch(TiltedPlane(0, 1, -1, Side::Minus, 0.9),
                                                 {0, 1, 0.5, 1.5}, n, n)});
  out.push_back({"cylinder_z_axis", tube_mesh(0.5, 1.0, n, n)});
  out.push_back({"cylinder_semicircle",
                 mesh_cylinder(GeodesicCylinder{Semicircle<double>({-1, 0.5}, {2, 1}), 0.3}, -0.5,
                               0.5, n, n)});
  out.push_back({"sphere", mesh_sphere(GeodesicSphere{{0.2, -0.1, 1.5}, 1.0}, level + 1)});
  out.push_back({"disk_vertical", anchor_disk_mesh(n / 2)});
  out.push_back({"disk_vertical_lattice", anchor_disk_lattice_mesh(n / 2)});
  out.push_back({"disk_hemisphere",
                 mesh_disk(GeodesicDisk{{1, 1, 2}, 1.5, GeodesicDisk::Plane::Hemisphere, 0}, n / 2)});
  out.push_back({"annulus_H0", mesh_quotient_annulus(unit, 1, 0, 0.0, ann)});
  out.push_back({"annulus_skew_H0.6", mesh_quotient_annulus(skew, 1, 1, 0.6, skew_ann)});
  out.push_back({"annulus_flanged", mesh_flanged_annulus(unit, 0, 1, 0.3, ann, 0.5, n / 4)});
  return out;
}

std::vector<CheckReport> standard_suite(double kappa) {
  std::vector<CheckReport> out;
  const Latticed unit({1, 0}, {0, 1});

  out.push_back(check_laplacian_anchor(
      {vertical_plane_mesh(0.08), vertical_plane_mesh(0.04), vertical_plane_mesh(0.02)}));

  for (int n : {8, 16, 32}) {
    const TriMesh disk = anchor_disk_lattice_mesh(n);
    out.push_back(check_claim_superharmonic(disk, 1.0, kAxis, 1.0, kappa));
    out.push_back(check_claim_superharmonic(disk, 0.0, kAxis, 1.0, kappa));
  }
  out.push_back(check_isoperimetric(anchor_disk_mesh(32), 1.0, kAxis, 1.0, {0.01, 0.0}));

  // A constant-mean-curvature tube with H = coth(0.4) > 1: every hypothesis
  // but |H| <= a holds and the ratio grows linearly with its length.
  const GeodesicCylinder thin{kAxis, 0.2};
  for (double L : {10.0, 100.0}) {
    const TriMesh tube = tube_mesh(0.2, L, static_cast<int>(10 * L), 24);
    IsoOptions opt;
    opt.mean_curvature = spot_check_mean_curvature(thin, {0.0, L, 0.0, 2 * kPi});
    out.push_back(negative_control(check_isoperimetric(tube, 1.0, kAxis, 0.25, opt)));
  }
  out.push_back(negative_control(
      check_claim_superharmonic(tube_mesh(0.2, 1.0, 20, 24), 1.0, kAxis, 0.25, kappa)));

  out.push_back(check_cusp_superharmonic(unit_cusp_annulus(0.0, 32, 32, std::exp(1.0)), 0.0, kappa));
  const TriMesh tilted06 = unit_cusp_annulus(0.6, 32, 32, std::exp(1.0));
  out.push_back(check_cusp_superharmonic(tilted06, 0.6, kappa));
  out.push_back(negative_control(check_cusp_superharmonic(tilted06, 0.0, kappa)));

  out.push_back(check_cusp_area(unit_cusp_annulus(0.0, 32, 64, 1000.0), unit, 0.0));
  for (double H : {0.3, 0.6, 0.9})
    out.push_back(check_cusp_area(unit_cusp_annulus(H, 32, 64, 1000.0), unit, H));
  {
    AnnulusMeshOptions opt;
    opt.t_hi = 1000;
    opt.n_along = 32;
    opt.n_height = 64;
    out.push_back(negative_control(
        check_cusp_area(mesh_flanged_annulus(unit, 1, 0, 0.0, opt, 1.0, 16), unit, 0.0)));
  }

  for (int level = 1; level <= 3; ++level)
    for (const NamedMesh& s : gauss_bonnet_shapes(level)) {
      CheckReport r = check_total_curvature(s.mesh);
      r.inputs.emplace_back("shape", s.name);
      r.inputs.emplace_back("level", long(level));
      out.push_back(std::move(r));
    }
  for (double H : {0.0, 0.5, 0.9})
    out.push_back(check_curvature_density(
        {unit_cusp_annulus(H, 8, 8, std::exp(1.0)), unit_cusp_annulus(H, 16, 16, std::exp(1.0)),
         unit_cusp_annulus(H, 32, 32, std::exp(1.0))},
        H, kappa));
  out.push_back(negative_control(check_total_curvature(tilted_plane_mesh(0.5, 16), 0.0, kappa)));

  out.push_back(check_scaling_flow(0.0, 1.0));
  out.push_back(check_scaling_flow(0.7, 2.0));
  {
    FlowOptions wrong;
    wrong.expected_slope = -2;
    out.push_back(negative_control(check_scaling_flow(0.7, 2.0, wrong)));
  }
  return out;
}

}  // namespace hcmc
