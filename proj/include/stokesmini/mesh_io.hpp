#pragma once

#include <iosfwd>
#include <string>

#include "stokesmini/mesh.hpp"

namespace stokesmini {

// Plain-text mesh format:
//   mesh2d 1
//   vertices N
//   id x y boundary_flag      (N lines, 17 significant digits)
//   triangles M
//   id v1 v2 v3               (M lines, counterclockwise, 0-based)
void write_mesh(const Mesh& mesh, std::ostream& out);
void write_mesh_file(const Mesh& mesh, const std::string& path);

// Parses the format above.  The domain rectangle is recovered as the bounding
// box of the vertices (generated meshes carry the corners as vertices).
// Throws Error on malformed input.
Mesh read_mesh(std::istream& in);
Mesh read_mesh_file(const std::string& path);

}  // namespace stokesmini
