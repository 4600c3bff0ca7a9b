#include "sas/splinespace.hpp"

#include "sas/error.hpp"
#include "sas/parallel.hpp"

namespace sas {

namespace {

void check_degrees(int r, int d) {
  if (r < 0 || d < 0) throw Error(ErrorCode::InvalidArgument, "r and d must be nonnegative");
}

}  // namespace

IntegerSystem spline_system(const ValidatedMesh& mesh, int r, int d) {
  check_degrees(r, d);
  const std::size_t n_d = static_cast<std::size_t>(forms_dim(d));
  const std::size_t faces = mesh.phi2();
  const std::size_t edges = mesh.phi1();

  std::vector<std::size_t> edge_offset(edges + 1);
  edge_offset[0] = faces * n_d;
  for (std::size_t k = 0; k < edges; ++k)
    edge_offset[k + 1] = edge_offset[k] + static_cast<std::size_t>(forms_dim(d - (r + 1) * mesh.interior_edge(k).form.degree()));

  std::vector<std::vector<std::pair<std::uint32_t, Integer>>> rows(edges * n_d);
  for (std::size_t f = 0; f < faces; ++f)
    for (auto [k, sign] : mesh.face_interior_edges(f))
      for (std::size_t i = 0; i < n_d; ++i)
        rows[k * n_d + i].emplace_back(static_cast<std::uint32_t>(f * n_d + i), Integer(sign));

  for (std::size_t k = 0; k < edges; ++k) {
    const Form& g = mesh.interior_edge(k).form;
    int cofactor_degree = d - (r + 1) * g.degree();
    if (cofactor_degree < 0) continue;
    auto terms = integer_terms(pow(g, static_cast<unsigned>(r + 1)));
    auto cofactors = monomial_basis(cofactor_degree);
    for (std::size_t j = 0; j < cofactors.size(); ++j) {
      auto col = static_cast<std::uint32_t>(edge_offset[k] + j);
      const Exponent& m = cofactors[j];
      for (const auto& [e, c] : terms) {
        Exponent prod{e[0] + m[0], e[1] + m[1], e[2] + m[2]};
        rows[k * n_d + monomial_index(prod)].emplace_back(col, c);
      }
    }
  }
  IntegerSystem system(edge_offset[edges]);
  for (auto& row : rows) system.add_row(std::move(row));
  return system;
}

std::size_t spline_dim(const ValidatedMesh& mesh, int r, int d, RankMethod method) {
  IntegerSystem system = spline_system(mesh, r, d);
  std::size_t cols = system.cols();
  return cols - system_rank(std::move(system), method);
}

std::vector<std::size_t> hf_table(const ValidatedMesh& mesh, int r, int d_max, RankMethod method) {
  check_degrees(r, d_max);
  std::vector<std::size_t> values(static_cast<std::size_t>(d_max) + 1);
  // Largest degrees first so the slowest jobs start early.
  parallel_for(values.size(), [&](std::size_t i) {
    std::size_t d = values.size() - 1 - i;
    values[d] = spline_dim(mesh, r, static_cast<int>(d), method);
  });
  return values;
}

std::vector<Spline> spline_basis(const ValidatedMesh& mesh, int r, int d) {
  auto kernel = kernel_from_echelon(row_echelon(spline_system(mesh, r, d)));
  auto basis = monomial_basis(d);
  std::vector<Spline> out;
  out.reserve(kernel.size());
  for (const auto& v : kernel) {
    Spline s{r, d, {}};
    for (std::size_t f = 0; f < mesh.phi2(); ++f) {
      Polynomial p;
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (v[f * basis.size() + i] != 0) p.emplace(basis[i], v[f * basis.size() + i]);
      s.pieces.push_back(Form::from_polynomial(p));
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool is_spline(const ValidatedMesh& mesh, const Spline& s) {
  if (s.pieces.size() != mesh.phi2()) return false;
  // Faces on either side of each interior edge.
  std::vector<std::vector<std::size_t>> sides(mesh.phi1());
  for (std::size_t f = 0; f < mesh.phi2(); ++f)
    for (auto [k, sign] : mesh.face_interior_edges(f)) sides[k].push_back(f);
  for (std::size_t k = 0; k < mesh.phi1(); ++k) {
    if (sides[k].size() != 2) return false;
    Form diff = s.pieces[sides[k][0]] - s.pieces[sides[k][1]];
    if (diff.is_zero()) continue;
    Form g = pow(mesh.interior_edge(k).form, static_cast<unsigned>(s.r + 1));
    if (!divide(diff, g).remainder.is_zero()) return false;
  }
  return true;
}

}  // namespace sas
