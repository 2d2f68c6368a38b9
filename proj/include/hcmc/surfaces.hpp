#pragma once

// Model surfaces in H^3 (curvature -1): horospheres, geodesic cylinders,
// vertical and tilted equidistant planes, geodesic spheres and totally
// geodesic disks. Each comes with a parameterization, closed-form curvature
// data and a mesher.
//
// Mean curvature sign convention: horospheres have H = +1 for the upward
// normal. Tilted planes use the normal pointing toward their totally geodesic
// vertical plane, cylinders and spheres the normal pointing inward.

#include <Eigen/Core>

#include <utility>
#include <variant>

#include "hcmc/hmodel.hpp"
#include "hcmc/trimesh.hpp"

namespace hcmc {

enum class Side { Plus, Minus };

inline double side_sign(Side s) { return s == Side::Plus ? 1.0 : -1.0; }

/// Horosphere {z = t}. Parameters (u, v) = (x, y).
struct Horosphere {
  double t = 1;
};

/// Points at geodesic distance rho from `axis`. Parameters (u, v) = (arclength
/// along the axis, angle about it).
struct GeodesicCylinder {
  Geodesicd axis = VerticalLine<double>{};
  double rho = 1;
};

/// P_{H,c}^{+/-}: the surface at signed distance +/- atanh(H) from the
/// vertical plane {A x + B y + c = 0}, meeting z = 0 along the same line.
/// H = 0 is the vertical plane itself. Parameters (u, v) = (arclength along
/// the boundary line in Euclidean units, height z).
class TiltedPlane {
 public:
  TiltedPlane(double A, double B, double c, Side side, double H);

  double A() const { return A_; }
  double B() const { return B_; }
  double c() const { return c_; }
  Side side() const { return side_; }
  double H() const { return H_; }

  VerticalPlaned vertical_plane() const { return {A_, B_, c_}; }
  /// Horizontal slope: the surface is {offset = sign * slope * z}.
  double slope() const;
  /// Same plane with c replaced.
  TiltedPlane with_c(double c) const { return {A_, B_, c, side_, H_}; }

  Eigen::Vector2d unit_normal() const;     ///< horizontal unit normal n of the line
  Eigen::Vector2d unit_direction() const;  ///< (-n_y, n_x)
  Eigen::Vector2d base_point() const;      ///< point of the line closest to the origin

 private:
  double A_, B_, c_;
  Side side_;
  double H_;
};

/// Geodesic sphere of radius R about `center`. Parameters (u, v) = (Euclidean
/// polar angle on the model sphere, azimuth).
struct GeodesicSphere {
  Eigen::Vector3d center{0, 0, 1};
  double radius = 1;
};

/// Totally geodesic disk of geodesic radius `radius` about `center`.
/// Vertical: lies in the vertical plane through `center` with horizontal
/// direction `azimuth`. Hemisphere: lies in the hemisphere orthogonal to the
/// vertical geodesic through `center`. Parameters (u, v) = (geodesic radius,
/// polar angle) about the center.
struct GeodesicDisk {
  enum class Plane { Vertical, Hemisphere };
  Eigen::Vector3d center{0, 0, 1};
  double radius = 1;
  Plane plane = Plane::Vertical;
  double azimuth = 0;
};

using Surface = std::variant<Horosphere, GeodesicCylinder, TiltedPlane, GeodesicSphere, GeodesicDisk>;

/// Position of the parameter point (u, v).
Eigen::Vector3d surface_point(const Surface& s, double u, double v);

/// Closed-form mean curvature: horosphere 1, tilted plane tanh(d) = H,
/// cylinder coth(2 rho), sphere coth(R), disk 0.
double mean_curvature_closed_form(const Surface& s);

/// Closed-form principal curvatures, larger first.
std::pair<double, double> principal_curvatures_closed_form(const Surface& s);

/// rho with coth(2 rho) = H, i.e. atanh(1/H) / 2. Requires H > 1.
double cylinder_radius_for_H(double H);

/// d = atanh(H): the equidistance at which a tilted plane has mean curvature H.
double equidistance_for_H(double H);

struct SecondFundamentalForm {
  double H = 0;
  double k1 = 0;  ///< larger principal curvature
  double k2 = 0;
  double step = 0;  ///< finite-difference step actually used
};

/// Principal and mean curvature at (u, v) from central differences of the
/// parameterization. The Euclidean shape operator is converted with
/// kappa_hyp = z kappa_euc + N_z for the conformal factor 1/z.
SecondFundamentalForm numeric_second_fundamental_form(const Surface& s, double u, double v);

struct ParamRect {
  double u0, u1, v0, v1;
};

/// Grid mesh of a parameter rectangle with nu x nv cells, two triangles per
/// cell. With `periodic_v` the seam v = v1 is identified with v = v0 by
/// sharing vertices.
TriMesh mesh_patch(const Surface& s, const ParamRect& rect, int nu, int nv, bool periodic_v = false);

/// Geodesic cylinder piece: full angle with the seam identified, axis
/// arclength in [s0, s1].
TriMesh mesh_cylinder(const GeodesicCylinder& cyl, double s0, double s1, int n_axis, int n_angle);

/// Polar mesh of a geodesic disk: a center vertex and `rings` rings, ring i
/// carrying `base * i` vertices.
TriMesh mesh_disk(const GeodesicDisk& disk, int rings, int base = 6);

/// Lattice mesh of a geodesic disk: the triangular lattice of spacing 1,
/// restricted to the Euclidean disk of radius n, pushed through the geodesic
/// polar map X -> (radius |X| / n, arg X). Only faces with all three corners
/// kept are used, so the boundary follows the lattice and lies inside the
/// circle. Interior vertices have a full six-fold star that is a smooth
/// image of a regular hexagon, which makes the cotangent Laplacian
/// pointwise consistent there; the ring mesh above is not.
TriMesh mesh_disk_lattice(const GeodesicDisk& disk, int n);

/// Closed mesh of a geodesic sphere obtained by subdividing an octahedron.
TriMesh mesh_sphere(const GeodesicSphere& sphere, int subdivisions);

/// Point of the region bounded by the horosphere {z = t_floor} and the
/// tilted walls P_{H,c}^- and P_{H,-c}^+ around the vertical plane
/// {A x + B y = 0}: z >= t_floor, not below P_{H,c}^- and not beyond P_{H,-c}^+.
bool region_membership(const HPointd& p, double A, double B, double H, double c, double t_floor);

}  // namespace hcmc
