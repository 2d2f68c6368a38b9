#pragma once

// The standard verification suite behind `hcmc report`, and the model meshes
// it is built from. Resolutions here are the documented defaults.

#include <string>
#include <utility>
#include <vector>

#include "hcmc/harness.hpp"
#include "hcmc/lattice.hpp"
#include "hcmc/trimesh.hpp"

namespace hcmc {

/// Patch {x = 0, |y| <= 1/2, 1 <= z <= 2} of the vertical plane with largest
/// hyperbolic edge length at most `h_target`.
TriMesh vertical_plane_mesh(double h_target);

/// Patch of P_{H,0}^+ over the boundary line x = 0: |u| <= 1/2, 1 <= z <= 2,
/// n x n cells.
TriMesh tilted_plane_mesh(double H, int n);

/// The disk of geodesic radius 1 about (0, 0, 1) in the plane y = 0. It
/// contains the geodesic z-axis as a diameter.
TriMesh anchor_disk_mesh(int rings);

/// The same disk meshed by mesh_disk_lattice with lattice radius n.
TriMesh anchor_disk_lattice_mesh(int n);

/// Tube of radius rho about the z-axis with axis length L.
TriMesh tube_mesh(double rho, double L, int n_axis, int n_angle);

/// Quotient annulus of P_{H,0}(1, 0) in the unit-lattice cusp between heights
/// t_lo = 1 and t_hi.
TriMesh unit_cusp_annulus(double H, int n_along, int n_height, double t_hi);

struct NamedMesh {
  std::string name;
  TriMesh mesh;
};

/// Fourteen model shapes at refinement level `level` (1, 2, 3, ...), used for
/// the Gauss-Bonnet identity.
std::vector<NamedMesh> gauss_bonnet_shapes(int level);

/// Laplacian anchor, claim, isoperimetric, cusp Laplacian, cusp area,
/// Gauss-Bonnet, curvature density and flow checks with their negative
/// controls. Deterministic.
std::vector<CheckReport> standard_suite(double kappa = kDefaultKappa);

}  // namespace hcmc
