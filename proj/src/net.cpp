#include "sas/net.hpp"

#include <json.hpp>

#include "sas/error.hpp"
#include "sas/homology.hpp"
#include "sas/matrix.hpp"
#include "sas/mesh_io.hpp"
#include "sas/parse.hpp"

namespace sas {

NetSpec net_check(const Form& f, const Form& g, const Form& h) {
  if (f.is_zero() || g.is_zero() || h.is_zero())
    throw Error(ErrorCode::SpanDeficient, "a net generator is the zero form");
  if (f.degree() != g.degree() || g.degree() != h.degree())
    throw Error(ErrorCode::DegreeMismatch, "net generators have degrees " + std::to_string(f.degree()) + ", " +
                                               std::to_string(g.degree()) + ", " + std::to_string(h.degree()));
  NetSpec net{{f, g, h}, f.degree(), false};
  if (net.n < 1) throw Error(ErrorCode::DegreeMismatch, "net generators must have positive degree");

  RatMatrix coefficients(3, static_cast<std::size_t>(forms_dim(net.n)));
  for (std::size_t i = 0; i < 3; ++i) {
    auto dense = net.forms[i].dense_coefficients();
    for (std::size_t j = 0; j < dense.size(); ++j) coefficients(i, j) = dense[j];
  }
  if (rank(coefficients) != 3) throw Error(ErrorCode::SpanDeficient, "net generators are linearly dependent");

  std::vector<Form> gens(net.forms.begin(), net.forms.end());
  std::size_t excess = quotient_dim(gens, 3 * net.n - 2, RankMethod::Exact);
  if (excess != 0)
    throw Error(ErrorCode::HasBasepoints, "dim (S/<f,g,h>)_" + std::to_string(3 * net.n - 2) + " = " +
                                              std::to_string(excess) + ", so the generators have common zeros");
  net.basepoint_free = true;
  return net;
}

NetSpec parse_net(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("forms") || !doc["forms"].is_array() || doc["forms"].size() != 3)
    throw Error(ErrorCode::SchemaError, "net document needs \"forms\": [three strings]");
  std::array<Form, 3> forms;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!doc["forms"][i].is_string()) throw Error(ErrorCode::SchemaError, "net forms must be strings");
    forms[i] = parse_form(doc["forms"][i].get<std::string>());
  }
  return net_check(forms[0], forms[1], forms[2]);
}

NetSpec load_net(const std::filesystem::path& path) { return parse_net(read_text_file(path)); }

std::optional<std::array<Rational, 3>> net_membership(const NetSpec& net, const Form& g) {
  if (g.is_zero()) return std::array<Rational, 3>{0, 0, 0};
  if (g.degree() != net.n)
    throw Error(ErrorCode::DegreeMismatch, "form of degree " + std::to_string(g.degree()) + " tested against a net of degree " +
                                               std::to_string(net.n));
  // Columns f, g, h, G; a kernel vector with nonzero last entry gives G.
  const std::size_t monomials = static_cast<std::size_t>(forms_dim(net.n));
  RatMatrix m(monomials, 4);
  for (std::size_t c = 0; c < 4; ++c) {
    auto dense = (c < 3 ? net.forms[c] : g).dense_coefficients();
    for (std::size_t i = 0; i < monomials; ++i) m(i, c) = dense[i];
  }
  for (const auto& v : kernel_basis(m)) {
    if (v[3] == 0) continue;
    return std::array<Rational, 3>{-v[0] / v[3], -v[1] / v[3], -v[2] / v[3]};
  }
  return std::nullopt;
}

std::vector<long> c_table(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "net degree must be positive");
  std::vector<long> base(static_cast<std::size_t>(n), 1);
  std::vector<long> out{1};
  for (int k = 0; k < 3; ++k) {
    std::vector<long> next(out.size() + base.size() - 1, 0);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = 0; j < base.size(); ++j) next[i + j] += out[i] * base[j];
    out = std::move(next);
  }
  return out;
}

bool cn_sum_check(int n) {
  auto c = c_table(n);
  auto at = [&](long j) { return j >= 0 && j < static_cast<long>(c.size()) ? c[static_cast<std::size_t>(j)] : 0L; };
  for (long i = 0; i < n; ++i)
    if (at(i) + at(i + n) + at(i + 2 * n) != static_cast<long>(n) * n) return false;
  return true;
}

ImageMesh image_mesh(const Mesh& mesh, const NetSpec& net) {
  ImageMesh out;
  std::vector<Vertex> vertices;
  for (const Vertex& v : mesh.vertices()) {
    Point3 p{net.forms[0].evaluate(v.point), net.forms[1].evaluate(v.point), net.forms[2].evaluate(v.point)};
    if (p[2] != 0) p = {p[0] / p[2], p[1] / p[2], 1};
    else if (p[1] != 0) p = {p[0] / p[1], 1, 0};
    else p = {1, 0, 0};
    vertices.push_back(Vertex{v.id, p, v.interior});
  }
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i].point == vertices[j].point)
        out.warnings.push_back("vertices '" + vertices[i].id + "' and '" + vertices[j].id + "' have the same image");
  std::vector<Edge> edges;
  for (const Edge& e : mesh.edges()) {
    auto coefficients = e.form.degree() == net.n ? net_membership(net, e.form) : std::nullopt;
    if (!coefficients) throw Error(ErrorCode::NotInNet, "form of edge '" + e.id + "' is not in the net");
    Form linear = Form::variable(0) * (*coefficients)[0] + Form::variable(1) * (*coefficients)[1] +
                  Form::variable(2) * (*coefficients)[2];
    edges.push_back(Edge{e.id, linear, e.tail, e.head, e.interior});
  }
  out.mesh = Mesh(std::move(vertices), std::move(edges), mesh.faces());
  return out;
}

long tensor_dim(const DegreeValues& image_values, const std::optional<Quadratic>& image_hp, int n, int d) {
  auto c = c_table(n);
  long total = 0;
  for (long i = 0; static_cast<long>(n) * i <= d; ++i) {
    long j = d - n * i;
    if (j >= static_cast<long>(c.size())) continue;
    long value;
    if (i < static_cast<long>(image_values.size())) {
      value = image_values[static_cast<std::size_t>(i)];
    } else if (image_hp) {
      Rational v = (*image_hp)(i);
      value = v.get_num().get_si() / v.get_den().get_si();
    } else {
      throw Error(ErrorCode::InsufficientImageData,
                  "image Hilbert function needed at degree " + std::to_string(i) + "; table has " +
                      std::to_string(image_values.size()) + " values");
    }
    total += value * c[static_cast<std::size_t>(j)];
  }
  return total;
}

HpTransform hp_transform(const Quadratic& image_hp, int n, std::optional<long> image_postulation) {
  auto c = c_table(n);
  const Rational c2n = 2 * n < static_cast<int>(c.size()) ? Rational(c[static_cast<std::size_t>(2 * n)]) : Rational(0);
  const Rational nn(static_cast<long>(n) * n);
  const auto& [a, b, cc] = image_hp;
  HpTransform out;
  out.hp.a = a;
  out.hp.b = b * n - 2 * ((nn - 1 + 2 * c2n) / n) * a;
  out.hp.c = (nn - 1 + 3 * c2n) * a - (nn - 1 + c2n) * b + nn * cc;
  if (image_postulation) out.postulation_bound = static_cast<long>(n) * (*image_postulation + 3) - 3;
  return out;
}

}  // namespace sas
