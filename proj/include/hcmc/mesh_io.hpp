#pragma once

#include <iosfwd>
#include <string>

#include "hcmc/dmesh.hpp"
#include "hcmc/trimesh.hpp"

namespace hcmc {

// OBJ-style text: `v x y z` (half-space coordinates, z > 0) and `f i j k`
// with one-based indices. Corner shifts of quotient meshes are stored as
// comment lines `#shift f sx0 sy0 sx1 sy1 sx2 sy2` (one-based face index),
// which other OBJ readers skip. Boundary loops are re-inferred on load.

void write_obj(std::ostream& out, const TriMesh& m);
TriMesh read_obj(std::istream& in);

void save_obj(const std::string& path, const TriMesh& m);
TriMesh load_obj(const std::string& path);

/// Sidecar scalar field: one value per line.
void save_field(const std::string& path, const ScalarField& f);
ScalarField load_field(const std::string& path);

}  // namespace hcmc
