#pragma once

#include <array>
#include <string>
#include <vector>

#include "epsteinlab/epstein.hpp"

namespace epsteinlab {

struct ObjMesh {
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<int, 3>> faces;  ///< zero-based vertex indices
};

/// Poincare-ball vertices of the active nodes (row-major), two triangles per
/// grid quad whose four corners are all active.
ObjMesh surface_mesh(const EmbeddedSurface& s);

void export_obj(const ObjMesh& m, const std::string& path);
void export_obj(const EmbeddedSurface& s, const std::string& path);
/// Reads `v` and triangular `f` lines; other records are ignored. IoError on
/// unreadable files or malformed records.
ObjMesh import_obj(const std::string& path);

/// sup |<x,x> + 1| over the vertices mapped back to the hyperboloid.
double hyperboloid_roundtrip_residual(const ObjMesh& m);

}  // namespace epsteinlab
