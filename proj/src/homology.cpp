#include "sas/homology.hpp"


#include "sas/error.hpp"

namespace sas {

namespace {

// Rows g * m for every generator g and monomial m with deg(g m) = d.
void add_multiples(IntegerSystem& system, const Form& g, int d) {
  if (g.is_zero()) return;
  int k = d - g.degree();
  if (k < 0) return;
  auto terms = integer_terms(g);
  for (const Exponent& m : monomial_basis(k)) {
    std::vector<std::pair<std::uint32_t, Integer>> row;
    row.reserve(terms.size());
    for (const auto& [e, c] : terms)
      row.emplace_back(static_cast<std::uint32_t>(monomial_index({e[0] + m[0], e[1] + m[1], e[2] + m[2]})), c);
    system.add_row(std::move(row));
  }
}

void check_degrees(int r, int d) {
  if (r < 0 || d < 0) throw Error(ErrorCode::InvalidArgument, "r and d must be nonnegative");
}

}  // namespace

long dim_J_edge(int n, int r, int d) { return forms_dim(d - (r + 1) * n); }

long dim_J_edge(const ValidatedMesh& mesh, const std::string& edge_id, int r, int d) {
  std::size_t k = mesh.interior_edge_position(edge_id);
  return dim_J_edge(mesh.interior_edge(k).form.degree(), r, d);
}

std::size_t ideal_dim(const std::vector<Form>& gens, int d, RankMethod method) {
  if (d < 0) return 0;
  IntegerSystem system(static_cast<std::size_t>(forms_dim(d)));
  for (const Form& g : gens) add_multiples(system, g, d);
  return system_rank(std::move(system), method);
}

std::size_t quotient_dim(const std::vector<Form>& gens, int d, RankMethod method) {
  if (d < 0) return 0;
  return static_cast<std::size_t>(forms_dim(d)) - ideal_dim(gens, d, method);
}

std::vector<Form> vertex_ideal(const ValidatedMesh& mesh, std::size_t vertex_position, int r) {
  // Repeated edge forms contribute one generator.
  std::vector<Form> gens;
  for (std::size_t k : mesh.vertex_star(vertex_position)) {
    const Form& g = mesh.interior_edge(k).form;
    bool seen = false;
    for (const Form& h : gens) seen = seen || h.proportional_to(pow(g, static_cast<unsigned>(r + 1)));
    if (!seen) gens.push_back(pow(g, static_cast<unsigned>(r + 1)).primitive());
  }
  return gens;
}

std::size_t dim_J_vertex(const ValidatedMesh& mesh, const std::string& vertex_id, int r, int d, RankMethod method) {
  check_degrees(r, d);
  return ideal_dim(vertex_ideal(mesh, mesh.interior_vertex_position(vertex_id), r), d, method);
}

JHomology h0_h1_J(const ValidatedMesh& mesh, int r, int d, RankMethod method) {
  check_degrees(r, d);
  const std::size_t n_d = static_cast<std::size_t>(forms_dim(d));
  // Transposed boundary map: one row per (edge, cofactor monomial).
  IntegerSystem system(mesh.phi0() * n_d);
  long sum_edges = 0;
  for (std::size_t k = 0; k < mesh.phi1(); ++k) {
    const Form& g = mesh.interior_edge(k).form;
    int cofactor_degree = d - (r + 1) * g.degree();
    if (cofactor_degree < 0) continue;
    sum_edges += forms_dim(cofactor_degree);
    auto terms = integer_terms(pow(g, static_cast<unsigned>(r + 1)));
    for (const Exponent& m : monomial_basis(cofactor_degree)) {
      std::vector<std::pair<std::uint32_t, Integer>> row;
      for (auto [pos, sign] : {std::pair{mesh.head_position(k), 1}, std::pair{mesh.tail_position(k), -1}}) {
        if (pos < 0) continue;
        for (const auto& [e, c] : terms) {
          std::size_t i = monomial_index({e[0] + m[0], e[1] + m[1], e[2] + m[2]});
          row.emplace_back(static_cast<std::uint32_t>(static_cast<std::size_t>(pos) * n_d + i),
                           sign > 0 ? c : Integer(-c));
        }
      }
      system.add_row(std::move(row));
    }
  }
  std::size_t rank = system_rank(std::move(system), method);
  std::size_t sum_vertices = 0;
  for (std::size_t v = 0; v < mesh.phi0(); ++v) sum_vertices += ideal_dim(vertex_ideal(mesh, v, r), d, method);
  return JHomology{sum_vertices - rank, static_cast<std::size_t>(sum_edges) - rank};
}

FormulaTerms dim_formula(const ValidatedMesh& mesh, int r, int d, RankMethod method) {
  check_degrees(r, d);
  FormulaTerms t;
  t.faces = (static_cast<long>(mesh.phi2()) - static_cast<long>(mesh.phi1())) * forms_dim(d);
  for (std::size_t k = 0; k < mesh.phi1(); ++k) t.edges += dim_J_edge(mesh.interior_edge(k).form.degree(), r, d);
  for (std::size_t v = 0; v < mesh.phi0(); ++v)
    t.vertices += static_cast<long>(quotient_dim(vertex_ideal(mesh, v, r), d, method));
  t.h0 = static_cast<long>(h0_h1_J(mesh, r, d, method).h0);
  return t;
}

std::size_t colon_dim(const std::vector<Form>& gens, const Form& h, int d) {
  if (d < 0) return 0;
  if (h.is_zero()) return static_cast<std::size_t>(forms_dim(d));
  const int top = d + h.degree();
  IntegerSystem ideal(static_cast<std::size_t>(forms_dim(top)));
  for (const Form& g : gens) add_multiples(ideal, g, top);
  IntegerSystem stacked = ideal;
  add_multiples(stacked, h, top);
  std::size_t image = rank_exact(std::move(stacked)) - rank_exact(std::move(ideal));
  return static_cast<std::size_t>(forms_dim(d)) - image;
}

std::size_t multiplicity(const std::vector<Form>& gens, int d_cap) {
  if (d_cap < 2) throw Error(ErrorCode::InvalidArgument, "degree cap must be at least 2");
  std::size_t a = quotient_dim(gens, d_cap - 2), b = quotient_dim(gens, d_cap - 1), c = quotient_dim(gens, d_cap);
  if (a != b || b != c)
    throw Error(ErrorCode::NotStabilized, "dim (S/I)_d = " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                                              std::to_string(c) + " at d = " + std::to_string(d_cap - 2) + ".." +
                                              std::to_string(d_cap) + "; raise the degree cap");
  return c;
}

}  // namespace sas
