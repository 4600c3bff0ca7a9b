#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sas/mesh.hpp"

namespace sas {

// Mesh document:
// {"vertices": [{"id", "point": [x, y], "interior"}],
//  "edges": [{"id", "form" | "curve", "tail", "head", "interior"}],
//  "faces": [{"id", "boundary": [{"edge", "sign"}]}]}
// Coordinates are JSON numbers or rational strings; a three-entry point is
// read as homogeneous coordinates. "form" is a homogeneous polynomial in
// x, y, z and "curve" an affine polynomial in x, y. Keys named "comment" are
// ignored at every level.
Mesh parse_mesh(std::string_view json_text);
Mesh load_mesh(const std::filesystem::path& path);

// Canonical document: cells sorted by id, edges written with "form".
std::string serialize_mesh(const Mesh& mesh);

// Reads a whole file; throws FileNotFound.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace sas
