#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sas/form.hpp"
#include "sas/matrix.hpp"
#include "sas/mesh.hpp"

namespace sas {

// dim J(tau)_d = binom(d - (r+1)n + 2, 2), clamped at 0, for an edge form of
// degree n.
long dim_J_edge(int n, int r, int d);
// Same for a named interior edge; throws NotInteriorEdge.
long dim_J_edge(const ValidatedMesh& mesh, const std::string& edge_id, int r, int d);

// dim of the degree-d piece of the ideal generated by gens.
std::size_t ideal_dim(const std::vector<Form>& gens, int d, RankMethod method = RankMethod::Auto);
// dim (S/I)_d.
std::size_t quotient_dim(const std::vector<Form>& gens, int d, RankMethod method = RankMethod::Auto);

// Generators G_tau^{r+1} over the interior edges at an interior vertex.
std::vector<Form> vertex_ideal(const ValidatedMesh& mesh, std::size_t vertex_position, int r);
// dim J(v)_d; throws NotInteriorVertex.
std::size_t dim_J_vertex(const ValidatedMesh& mesh, const std::string& vertex_id, int r, int d,
                         RankMethod method = RankMethod::Auto);

struct JHomology {
  std::size_t h0 = 0;
  std::size_t h1 = 0;
};

// Degree-d homology of the complex J_1 -> J_0.
JHomology h0_h1_J(const ValidatedMesh& mesh, int r, int d, RankMethod method = RankMethod::Auto);

struct FormulaTerms {
  long faces = 0;     // (phi_2 - phi_1) binom(d+2, 2)
  long edges = 0;     // sum over tau of dim J(tau)_d
  long vertices = 0;  // sum over v of dim (S/J(v))_d
  long h0 = 0;        // dim H_0(J)_d
  long total() const { return faces + edges + vertices + h0; }
};

FormulaTerms dim_formula(const ValidatedMesh& mesh, int r, int d, RankMethod method = RankMethod::Auto);

// dim of {p in S_d : p h in I}.
std::size_t colon_dim(const std::vector<Form>& gens, const Form& h, int d);

// Stable value of dim (S/I)_d, read off at d_cap - 2, d_cap - 1, d_cap;
// throws NotStabilized if the three differ.
std::size_t multiplicity(const std::vector<Form>& gens, int d_cap);

}  // namespace sas
