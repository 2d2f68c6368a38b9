#include "hcmc/trimesh.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace hcmc {

TriMesh::TriMesh(VertexMatrix V, FaceMatrix F, std::vector<CornerShift> shifts)
    : V_(std::move(V)), F_(std::move(F)), shifts_(std::move(shifts)) {
  if (!shifts_.empty() && static_cast<Eigen::Index>(shifts_.size()) != F_.rows())
    throw InvalidArgument("TriMesh: corner shifts must be given for every face or none");
  for (Eigen::Index i = 0; i < V_.rows(); ++i) {
    try {
      HPointd(V_(i, 0), V_(i, 1), V_(i, 2));
    } catch (const std::exception& e) {
      throw InvalidArgument("TriMesh: vertex " + std::to_string(i) + ": " + e.what());
    }
  }
  for (Eigen::Index f = 0; f < F_.rows(); ++f) {
    for (int c = 0; c < 3; ++c) {
      if (F_(f, c) < 0 || F_(f, c) >= V_.rows())
        throw InvalidArgument("TriMesh: face " + std::to_string(f) + " has an out-of-range index");
    }
    if (F_(f, 0) == F_(f, 1) || F_(f, 1) == F_(f, 2) || F_(f, 0) == F_(f, 2))
      throw DegenerateInput("TriMesh: face " + std::to_string(f) + " repeats a vertex");
  }
  build_topology();
  check_faces_nondegenerate();
}

Eigen::Vector3d TriMesh::corner(Eigen::Index f, int c) const {
  Eigen::Vector3d p = V_.row(F_(f, c)).transpose();
  if (!shifts_.empty()) {
    p.x() += shifts_[static_cast<size_t>(f)](c, 0);
    p.y() += shifts_[static_cast<size_t>(f)](c, 1);
  }
  return p;
}

void TriMesh::build_topology() {
  std::map<std::pair<int, int>, int> directed;  // (i, j) -> face
  std::map<std::pair<int, int>, int> undirected;  // (min, max) -> index into edges_
  std::vector<int> edge_use;
  for (Eigen::Index f = 0; f < F_.rows(); ++f) {
    for (int c = 0; c < 3; ++c) {
      const int i = F_(f, (c + 1) % 3);
      const int j = F_(f, (c + 2) % 3);
      if (!directed.emplace(std::make_pair(i, j), static_cast<int>(f)).second)
        throw InvalidArgument("TriMesh: face " + std::to_string(f) +
                              " is inconsistently oriented or the edge is non-manifold");
      const auto key = std::minmax(i, j);
      auto [it, inserted] = undirected.emplace(key, static_cast<int>(edges_.size()));
      if (inserted) {
        edges_.push_back({key.first, key.second});
        edge_face_.push_back({static_cast<int>(f), c});
        edge_use.push_back(1);
      } else if (++edge_use[static_cast<size_t>(it->second)] > 2) {
        throw InvalidArgument("TriMesh: edge in face " + std::to_string(f) +
                              " is shared by more than two faces");
      }
    }
  }

  // Boundary: directed edges whose reverse is absent.
  std::map<int, int> next;
  for (const auto& [e, f] : directed) {
    (void)f;
    if (directed.count({e.second, e.first})) continue;
    if (!next.emplace(e.first, e.second).second)
      throw InvalidArgument("TriMesh: vertex " + std::to_string(e.first) +
                            " is a non-manifold boundary vertex");
  }
  on_boundary_.assign(static_cast<size_t>(V_.rows()), false);
  std::vector<bool> visited(static_cast<size_t>(V_.rows()), false);
  for (const auto& [start, unused] : next) {
    (void)unused;
    if (visited[static_cast<size_t>(start)]) continue;
    std::vector<int> loop;
    int v = start;
    do {
      visited[static_cast<size_t>(v)] = true;
      on_boundary_[static_cast<size_t>(v)] = true;
      loop.push_back(v);
      auto it = next.find(v);
      if (it == next.end())
        throw InvalidArgument("TriMesh: boundary is not a union of closed loops");
      v = it->second;
    } while (v != start);
    boundary_.push_back(std::move(loop));
  }
}

void TriMesh::check_faces_nondegenerate() const {
  for (Eigen::Index f = 0; f < F_.rows(); ++f) {
    std::array<double, 3> l{};
    for (int c = 0; c < 3; ++c)
      l[static_cast<size_t>(c)] = dist(corner_point(f, (c + 1) % 3), corner_point(f, (c + 2) % 3));
    const double s = 0.5 * (l[0] + l[1] + l[2]);
    const bool ok = l[0] > 0 && l[1] > 0 && l[2] > 0 && s - l[0] > 0 && s - l[1] > 0 &&
                    s - l[2] > 0;
    if (!ok) throw DegenerateInput("TriMesh: face " + std::to_string(f) + " is degenerate");
  }
}

}  // namespace hcmc
