#include "hcmc/mesh_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace hcmc {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void write_obj(std::ostream& out, const TriMesh& m) {
  for (Eigen::Index i = 0; i < m.num_vertices(); ++i)
    out << "v " << fmt(m.vertices()(i, 0)) << ' ' << fmt(m.vertices()(i, 1)) << ' '
        << fmt(m.vertices()(i, 2)) << '\n';
  for (Eigen::Index f = 0; f < m.num_faces(); ++f)
    out << "f " << m.faces()(f, 0) + 1 << ' ' << m.faces()(f, 1) + 1 << ' '
        << m.faces()(f, 2) + 1 << '\n';
  for (size_t f = 0; f < m.shifts().size(); ++f) {
    const CornerShift& s = m.shifts()[f];
    if (s.isZero(0)) continue;
    out << "#shift " << f + 1;
    for (int c = 0; c < 3; ++c) out << ' ' << fmt(s(c, 0)) << ' ' << fmt(s(c, 1));
    out << '\n';
  }
}

TriMesh read_obj(std::istream& in) {
  std::vector<Eigen::Vector3d> verts;
  std::vector<Eigen::Vector3i> faces;
  std::vector<std::pair<long, CornerShift>> shifts;
  std::string line;
  long lineno = 0;
  auto fail = [&](const std::string& what) {
    throw InvalidArgument("OBJ line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      Eigen::Vector3d p;
      if (!(ls >> p.x() >> p.y() >> p.z())) fail("malformed vertex");
      verts.push_back(p);
    } else if (tag == "f") {
      Eigen::Vector3i f;
      for (int c = 0; c < 3; ++c) {
        std::string tok;
        if (!(ls >> tok)) fail("face needs three indices");
        // Accept `i/t/n` forms; only the position index matters.
        f(c) = std::stoi(tok.substr(0, tok.find('/'))) - 1;
      }
      std::string extra;
      if (ls >> extra) fail("only triangular faces are supported");
      faces.push_back(f);
    } else if (tag == "#shift") {
      long f = 0;
      CornerShift s;
      if (!(ls >> f)) fail("malformed shift");
      for (int c = 0; c < 3; ++c)
        if (!(ls >> s(c, 0) >> s(c, 1))) fail("malformed shift");
      shifts.emplace_back(f - 1, s);
    }
  }
  VertexMatrix V(static_cast<Eigen::Index>(verts.size()), 3);
  for (size_t i = 0; i < verts.size(); ++i) V.row(static_cast<Eigen::Index>(i)) = verts[i].transpose();
  FaceMatrix F(static_cast<Eigen::Index>(faces.size()), 3);
  for (size_t i = 0; i < faces.size(); ++i) F.row(static_cast<Eigen::Index>(i)) = faces[i].transpose();
  std::vector<CornerShift> S;
  if (!shifts.empty()) {
    S.assign(faces.size(), CornerShift::Zero());
    for (const auto& [f, s] : shifts) {
      if (f < 0 || f >= static_cast<long>(faces.size())) fail("shift refers to a missing face");
      S[static_cast<size_t>(f)] = s;
    }
  }
  return TriMesh(std::move(V), std::move(F), std::move(S));
}

void save_obj(const std::string& path, const TriMesh& m) {
  std::ofstream out(path);
  if (!out) throw IoError(path, "cannot open for writing");
  write_obj(out, m);
  if (!out) throw IoError(path, "write failed");
}

TriMesh load_obj(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open for reading");
  return read_obj(in);
}

void save_field(const std::string& path, const ScalarField& f) {
  std::ofstream out(path);
  if (!out) throw IoError(path, "cannot open for writing");
  for (Eigen::Index i = 0; i < f.size(); ++i) out << fmt(f(i)) << '\n';
  if (!out) throw IoError(path, "write failed");
}

ScalarField load_field(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open for reading");
  std::vector<double> vals;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      vals.push_back(std::stod(line));
    } catch (const std::exception&) {
      throw IoError(path, "not a number: " + line);
    }
  }
  return Eigen::Map<ScalarField>(vals.data(), static_cast<Eigen::Index>(vals.size()));
}

}  // namespace hcmc
