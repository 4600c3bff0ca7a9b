#pragma once

#include <random>
#include <string>

#include "sas/mesh.hpp"

namespace sas::testing {

// Line through two affine points.
Form line_through(const Point3& p, const Point3& q);

// Small meshes with at most three faces and line or conic edges:
// "pair" (two faces, one interior edge), "strip" (three faces, two interior
// edges between the same two boundary vertices), "fan" (three faces around
// one interior vertex).
struct ToyMesh {
  std::string kind;
  Mesh mesh;
};
ToyMesh random_toy_mesh(std::mt19937& rng);

Mesh single_face_mesh();

// dim C^r_d by a different route than the library: the pieces are free
// and each interior edge imposes "remainder of (F_a - F_b) on division by
// G^{r+1} is zero", a linear condition. Ranks come from plain rational
// Gauss unless naive is false (large sweeps).
std::size_t oracle_spline_dim(const ValidatedMesh& mesh, int r, int d, bool naive = true);

std::string fixture(const std::string& name);

}  // namespace sas::testing
