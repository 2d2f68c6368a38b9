#include "hcmc/dmesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <vector>

namespace hcmc {

namespace {

constexpr double kPi = std::numbers::pi;

void require_field(const TriMesh& m, const ScalarField& f) {
  if (f.size() != m.num_vertices())
    throw InvalidArgument("scalar field has " + std::to_string(f.size()) + " values for " +
                          std::to_string(m.num_vertices()) + " vertices");
}

}  // namespace

Eigen::MatrixX3d face_edge_lengths(const TriMesh& m) {
  Eigen::MatrixX3d L(m.num_faces(), 3);
  for (Eigen::Index f = 0; f < m.num_faces(); ++f)
    for (int c = 0; c < 3; ++c)
      L(f, c) = dist(m.corner_point(f, (c + 1) % 3), m.corner_point(f, (c + 2) % 3));
  return L;
}

Eigen::VectorXd edge_lengths(const TriMesh& m) {
  Eigen::VectorXd out(m.num_edges());
  for (Eigen::Index e = 0; e < m.num_edges(); ++e) {
    const auto [f, c] = m.edge_faces()[static_cast<size_t>(e)];
    const double l = dist(m.corner_point(f, (c + 1) % 3), m.corner_point(f, (c + 2) % 3));
    if (!(l > 0)) throw DegenerateInput("edge " + std::to_string(e) + " has zero length");
    out(e) = l;
  }
  return out;
}

double max_edge_length(const TriMesh& m) {
  return m.num_edges() == 0 ? 0.0 : edge_lengths(m).maxCoeff();
}

Eigen::Vector3d hyperbolic_triangle_angles(const Eigen::Vector3d& l) {
  const double s = 0.5 * l.sum();
  const Eigen::Vector3d d(s - l(0), s - l(1), s - l(2));
  if (!(l.minCoeff() > 0) || !(d.minCoeff() > 0))
    throw DegenerateInput("hyperbolic triangle violates the strict triangle inequality");
  // Half-angle form of the hyperbolic law of cosines:
  //   tan(alpha/2)^2 = sinh(s-b) sinh(s-c) / (sinh(s) sinh(s-a)).
  const double ss = std::sinh(s);
  Eigen::Vector3d ang;
  for (int c = 0; c < 3; ++c) {
    const double num = std::sinh(d((c + 1) % 3)) * std::sinh(d((c + 2) % 3));
    const double den = ss * std::sinh(d(c));
    ang(c) = 2.0 * std::atan2(std::sqrt(num), std::sqrt(den));
  }
  return ang;
}

FaceGeometry face_angles_area(const TriMesh& m) {
  const Eigen::MatrixX3d L = face_edge_lengths(m);
  FaceGeometry g;
  g.angles.resize(m.num_faces(), 3);
  g.area.resize(m.num_faces());
  for (Eigen::Index f = 0; f < m.num_faces(); ++f) {
    Eigen::Vector3d ang;
    try {
      ang = hyperbolic_triangle_angles(L.row(f).transpose());
    } catch (const DegenerateInput&) {
      throw DegenerateInput("face " + std::to_string(f) + " is degenerate");
    }
    g.angles.row(f) = ang.transpose();
    g.area(f) = kPi - (ang(0) + ang(1) + ang(2));
  }
  return g;
}

double mesh_area(const TriMesh& m) { return face_angles_area(m).area.sum(); }

double loop_length(const TriMesh& m, const std::vector<int>& loop) {
  // Boundary edges belong to exactly one face; measure them there so that
  // quotient meshes use the correct deck translate.
  std::map<std::pair<int, int>, size_t> index;
  for (size_t e = 0; e < m.edges().size(); ++e)
    index.emplace(std::make_pair(m.edges()[e][0], m.edges()[e][1]), e);
  double total = 0;
  for (size_t i = 0; i < loop.size(); ++i) {
    const auto key = std::minmax(loop[i], loop[(i + 1) % loop.size()]);
    auto it = index.find({key.first, key.second});
    if (it == index.end()) throw InvalidArgument("loop_length: loop step is not a mesh edge");
    const auto [f, c] = m.edge_faces()[it->second];
    total += dist(m.corner_point(f, (c + 1) % 3), m.corner_point(f, (c + 2) % 3));
  }
  return total;
}

double boundary_length(const TriMesh& m) {
  double total = 0;
  for (const auto& loop : m.boundary_loops()) total += loop_length(m, loop);
  return total;
}

long euler_characteristic(const TriMesh& m) {
  return static_cast<long>(m.num_vertices()) - static_cast<long>(m.num_edges()) +
         static_cast<long>(m.num_faces());
}

Eigen::VectorXd vertex_angle_sums(const TriMesh& m, const FaceGeometry& g) {
  Eigen::VectorXd sums = Eigen::VectorXd::Zero(m.num_vertices());
  for (Eigen::Index f = 0; f < m.num_faces(); ++f)
    for (int c = 0; c < 3; ++c) sums(m.faces()(f, c)) += g.angles(f, c);
  return sums;
}

double total_curvature(const TriMesh& m, const FaceGeometry& g) {
  const Eigen::VectorXd sums = vertex_angle_sums(m, g);
  double defect = 0;
  for (Eigen::Index v = 0; v < m.num_vertices(); ++v)
    if (!m.is_boundary_vertex(static_cast<int>(v))) defect += 2 * kPi - sums(v);
  return defect - g.area.sum();
}

double total_curvature(const TriMesh& m) { return total_curvature(m, face_angles_area(m)); }

double boundary_turning(const TriMesh& m, const FaceGeometry& g) {
  const Eigen::VectorXd sums = vertex_angle_sums(m, g);
  double turning = 0;
  for (Eigen::Index v = 0; v < m.num_vertices(); ++v)
    if (m.is_boundary_vertex(static_cast<int>(v))) turning += kPi - sums(v);
  return turning;
}

double boundary_turning(const TriMesh& m) { return boundary_turning(m, face_angles_area(m)); }

Eigen::SparseMatrix<double> cotangent_matrix(const TriMesh& m) {
  const FaceGeometry g = face_angles_area(m);
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(static_cast<size_t>(m.num_faces()) * 12);
  for (Eigen::Index f = 0; f < m.num_faces(); ++f) {
    for (int c = 0; c < 3; ++c) {
      const int i = m.faces()(f, (c + 1) % 3);
      const int j = m.faces()(f, (c + 2) % 3);
      const double w = 0.5 / std::tan(g.angles(f, c));
      t.emplace_back(i, j, w);
      t.emplace_back(j, i, w);
      t.emplace_back(i, i, -w);
      t.emplace_back(j, j, -w);
    }
  }
  Eigen::SparseMatrix<double> L(m.num_vertices(), m.num_vertices());
  L.setFromTriplets(t.begin(), t.end());
  return L;
}

Eigen::VectorXd vertex_areas(const TriMesh& m) {
  const FaceGeometry g = face_angles_area(m);
  Eigen::VectorXd A = Eigen::VectorXd::Zero(m.num_vertices());
  for (Eigen::Index f = 0; f < m.num_faces(); ++f)
    for (int c = 0; c < 3; ++c) A(m.faces()(f, c)) += g.area(f) / 3.0;
  return A;
}

ScalarField laplacian_unnormalized(const TriMesh& m, const ScalarField& field) {
  require_field(m, field);
  const FaceGeometry g = face_angles_area(m);
  ScalarField out = ScalarField::Zero(m.num_vertices());
  for (Eigen::Index f = 0; f < m.num_faces(); ++f) {
    for (int c = 0; c < 3; ++c) {
      const int i = m.faces()(f, (c + 1) % 3);
      const int j = m.faces()(f, (c + 2) % 3);
      const double w = 0.5 / std::tan(g.angles(f, c));
      const double flow = w * (field(j) - field(i));
      out(i) += flow;
      out(j) -= flow;
    }
  }
  return out;
}

ScalarField laplacian(const TriMesh& m, const ScalarField& field) {
  return laplacian_unnormalized(m, field).cwiseQuotient(vertex_areas(m));
}

double flux_through_boundary(const TriMesh& m, const ScalarField& field) {
  const ScalarField L = laplacian_unnormalized(m, field);
  double flux = 0;
  for (Eigen::Index v = 0; v < m.num_vertices(); ++v)
    if (m.is_boundary_vertex(static_cast<int>(v))) flux += L(v);
  return flux;
}

}  // namespace hcmc
