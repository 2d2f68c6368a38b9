#pragma once

#include <Eigen/Core>

#include <array>
#include <vector>

#include "hcmc/hmodel.hpp"

namespace hcmc {

using VertexMatrix = Eigen::Matrix<double, Eigen::Dynamic, 3>;
using FaceMatrix = Eigen::Matrix<int, Eigen::Dynamic, 3>;
/// Horizontal translation applied to each corner of one face, one row per corner.
using CornerShift = Eigen::Matrix<double, 3, 2>;

/// Triangle mesh with vertices in the half-space model.
///
/// Faces are consistently oriented and every edge borders at most two faces.
/// Quotient meshes (annuli in a cusp end) carry per-face corner shifts: corner
/// c of face f sits at V(F(f, c)) + shift(c), so a face straddling the
/// fundamental domain uses a deck-translated copy of a vertex.
///
/// Boundary loops are inferred at construction and follow the face
/// orientation. Each loop starts at its smallest vertex index; loops are
/// sorted by that index.
class TriMesh {
 public:
  TriMesh(VertexMatrix V, FaceMatrix F, std::vector<CornerShift> shifts = {});

  const VertexMatrix& vertices() const { return V_; }
  const FaceMatrix& faces() const { return F_; }
  const std::vector<CornerShift>& shifts() const { return shifts_; }
  bool has_shifts() const { return !shifts_.empty(); }

  Eigen::Index num_vertices() const { return V_.rows(); }
  Eigen::Index num_faces() const { return F_.rows(); }
  Eigen::Index num_edges() const { return static_cast<Eigen::Index>(edges_.size()); }

  /// Undirected edges in order of first appearance (face order, then corner order).
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }
  /// For each entry of edges(): the first face containing it and the corner opposite.
  const std::vector<std::array<int, 2>>& edge_faces() const { return edge_face_; }

  const std::vector<std::vector<int>>& boundary_loops() const { return boundary_; }
  bool is_boundary_vertex(int v) const { return on_boundary_[static_cast<size_t>(v)]; }

  /// Position of corner c of face f, shifts applied.
  Eigen::Vector3d corner(Eigen::Index f, int c) const;
  HPointd corner_point(Eigen::Index f, int c) const { return HPointd(corner(f, c)); }

 private:
  void build_topology();
  void check_faces_nondegenerate() const;

  VertexMatrix V_;
  FaceMatrix F_;
  std::vector<CornerShift> shifts_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::array<int, 2>> edge_face_;
  std::vector<std::vector<int>> boundary_;
  std::vector<bool> on_boundary_;
};

}  // namespace hcmc
