#pragma once

#include <cstddef>
#include <vector>

#include "sas/elimination.hpp"
#include "sas/form.hpp"
#include "sas/matrix.hpp"
#include "sas/mesh.hpp"

namespace sas {

// The degree-d slice of the map whose kernel is C^r_d. Columns: one block of
// binom(d+2,2) per face (in mesh order), then one block per interior edge
// tau of binom(d-(r+1)n_tau+2,2) cofactor monomials. Rows: one block of
// binom(d+2,2) per interior edge. A face column carries the boundary sign;
// a cofactor column m of edge tau carries the coefficients of G_tau^{r+1} m
// (scaled to coprime integers).
IntegerSystem spline_system(const ValidatedMesh& mesh, int r, int d);

std::size_t spline_dim(const ValidatedMesh& mesh, int r, int d, RankMethod method = RankMethod::Auto);

// [spline_dim(mesh, r, d) for d = 0..d_max], degrees computed in parallel.
std::vector<std::size_t> hf_table(const ValidatedMesh& mesh, int r, int d_max, RankMethod method = RankMethod::Auto);

struct Spline {
  int r = 0;
  int d = 0;
  std::vector<Form> pieces;  // one per face, mesh order
};

// Kernel basis of spline_system in reduced echelon form, projected to the
// face coordinates.
std::vector<Spline> spline_basis(const ValidatedMesh& mesh, int r, int d);

// Exact check that G_tau^{r+1} divides the difference of the pieces across
// every interior edge tau.
bool is_spline(const ValidatedMesh& mesh, const Spline& s);

}  // namespace sas
