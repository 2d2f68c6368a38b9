#pragma once

// Discrete calculus on triangle meshes in H^3. Each face is treated as the
// geodesic triangle of the hyperbolic plane with the same three side lengths
// (hyperbolic distances between its corners). Areas are angle deficits
// pi - (alpha + beta + gamma), which makes the polyhedral Gauss-Bonnet
// identity exact up to rounding.

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "hcmc/trimesh.hpp"

namespace hcmc {

using ScalarField = Eigen::VectorXd;

/// Column c holds the length of the edge opposite corner c.
Eigen::MatrixX3d face_edge_lengths(const TriMesh& m);

/// Lengths of mesh.edges(), in that order.
Eigen::VectorXd edge_lengths(const TriMesh& m);

double max_edge_length(const TriMesh& m);

/// Interior angles of a hyperbolic triangle from its side lengths; entry c is
/// the angle at the corner opposite side l(c). Throws DegenerateInput when the
/// strict triangle inequalities fail.
Eigen::Vector3d hyperbolic_triangle_angles(const Eigen::Vector3d& l);

struct FaceGeometry {
  Eigen::MatrixX3d angles;  ///< per face, per corner
  Eigen::VectorXd area;     ///< pi - angle sum
};

FaceGeometry face_angles_area(const TriMesh& m);

double mesh_area(const TriMesh& m);
double boundary_length(const TriMesh& m);
/// Length of one boundary loop of m.
double loop_length(const TriMesh& m, const std::vector<int>& loop);
long euler_characteristic(const TriMesh& m);

/// Sum of incident face angles at each vertex.
Eigen::VectorXd vertex_angle_sums(const TriMesh& m, const FaceGeometry& g);

/// Sum over interior vertices of (2 pi - angle sum) minus the total face area.
double total_curvature(const TriMesh& m);
double total_curvature(const TriMesh& m, const FaceGeometry& g);

/// Sum over boundary vertices of (pi - angle sum).
double boundary_turning(const TriMesh& m);
double boundary_turning(const TriMesh& m, const FaceGeometry& g);

/// Symmetric cotangent matrix with zero row sums: (L f)_i = sum_j w_ij (f_j - f_i),
/// w_ij = (cot alpha_ij + cot beta_ij) / 2 from the hyperbolic face angles.
Eigen::SparseMatrix<double> cotangent_matrix(const TriMesh& m);

/// One third of the incident face area at each vertex.
Eigen::VectorXd vertex_areas(const TriMesh& m);

/// Integrated (un-normalized) Laplacian. Contributions are accumulated face
/// by face as w (f_j - f_i), so constants map to exact zeros and the sum
/// over all vertices vanishes.
ScalarField laplacian_unnormalized(const TriMesh& m, const ScalarField& f);

/// Laplacian divided by the lumped vertex area.
ScalarField laplacian(const TriMesh& m, const ScalarField& f);

/// Sum of the un-normalized Laplacian over boundary vertices; the interior
/// sum equals its negative.
double flux_through_boundary(const TriMesh& m, const ScalarField& f);

}  // namespace hcmc
