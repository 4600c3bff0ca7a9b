// Command-line front end: dimension tables, homology, Hilbert data,
// genericity reports and net transfers for curved meshes.
#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sas/error.hpp"
#include "sas/generic.hpp"
#include "sas/hilbert.hpp"
#include "sas/homology.hpp"
#include "sas/mesh_io.hpp"
#include "sas/net.hpp"
#include "sas/parallel.hpp"
#include "sas/splinespace.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace sas;

enum class Format { Table, Csv, Json };

struct Output {
  std::string command;
  std::string input;
  std::optional<int> r;
  std::vector<std::string> headers;
  std::vector<std::vector<Json>> rows;
  std::vector<std::pair<std::string, Json>> extras;  // summary values after the table
};

std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_array()) {
    std::string out;
    for (const auto& item : v) out += (out.empty() ? "" : "; ") + cell_text(item);
    return out;
  }
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void emit(const Output& out, Format format) {
  if (format == Format::Json) {
    Json doc;
    doc["command"] = out.command;
    doc["input"] = out.input;
    doc["r"] = out.r ? Json(*out.r) : Json(nullptr);
    Json rows = Json::array();
    for (const auto& row : out.rows) {
      Json obj = Json::object();
      for (std::size_t i = 0; i < out.headers.size(); ++i) obj[out.headers[i]] = row[i];
      rows.push_back(obj);
    }
    doc["rows"] = rows;
    for (const auto& [key, value] : out.extras) doc[key] = value;
    std::cout << doc.dump(2) << "\n";
    return;
  }
  if (format == Format::Csv) {
    for (std::size_t i = 0; i < out.headers.size(); ++i) std::cout << (i ? "," : "") << csv_escape(out.headers[i]);
    std::cout << "\n";
    for (const auto& row : out.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << csv_escape(cell_text(row[i]));
      std::cout << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(out.headers.size());
  for (std::size_t i = 0; i < out.headers.size(); ++i) width[i] = out.headers[i].size();
  for (const auto& row : out.rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], cell_text(row[i]).size());
  auto print_row = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::string c = cells[i];
      if (i + 1 < cells.size()) c.resize(width[i], ' ');
      line += (i ? "  " : "") + c;
    }
    std::cout << line << "\n";
  };
  print_row(out.headers);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  print_row(rule);
  for (const auto& row : out.rows) {
    std::vector<std::string> cells;
    for (const auto& c : row) cells.push_back(cell_text(c));
    print_row(cells);
  }
  for (const auto& [key, value] : out.extras) std::cout << key << ": " << cell_text(value) << "\n";
}

struct Common {
  std::string mesh_path;
  int r = 0;
  int dmax = 10;
  std::string format = "table";
  std::string rank = "auto";
  double tol = 1e-9;
};

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  return Format::Table;
}

RankMethod parse_rank(const std::string& s) {
  if (s == "exact") return RankMethod::Exact;
  if (s == "modular") return RankMethod::Modular;
  return RankMethod::Auto;
}

Json numerator_json(const std::vector<Integer>& p) {
  Json arr = Json::array();
  for (const auto& c : p) arr.push_back(c.get_si());
  return arr;
}

int cmd_validate(const Common& c) {
  Mesh mesh = load_mesh(c.mesh_path);
  ValidationReport report = validate(mesh);
  Output out{"validate", c.mesh_path, std::nullopt, {"check", "name", "passed", "failures"}, {}, {}};
  for (const auto& check : report.checks) {
    Json failures = Json::array();
    for (const auto& f : check.failures) failures.push_back(f);
    out.rows.push_back({std::string(1, check.label), check.name, check.passed, failures});
  }
  out.extras = {{"vertices", mesh.vertices().size()},
                {"interior_vertices", mesh.interior_vertex_count()},
                {"interior_edges", mesh.interior_edge_count()},
                {"faces", mesh.face_count()},
                {"valid", report.ok()}};
  emit(out, parse_format(c.format));
  return report.ok() ? 0 : 1;
}

int cmd_dim(const Common& c) {
  auto mesh = ValidatedMesh::from(load_mesh(c.mesh_path));
  auto values = hf_table(mesh, c.r, c.dmax, parse_rank(c.rank));
  Output out{"dim", c.mesh_path, c.r, {"d", "dim"}, {}, {}};
  for (std::size_t d = 0; d < values.size(); ++d) out.rows.push_back({d, values[d]});
  emit(out, parse_format(c.format));
  return 0;
}

DegreeValues to_values(const std::vector<std::size_t>& v) { return DegreeValues(v.begin(), v.end()); }

int cmd_hilbert(const Common& c, const std::string& dmax_text, std::size_t window) {
  auto mesh = ValidatedMesh::from(load_mesh(c.mesh_path));
  int dmax;
  std::string cap_source = "explicit";
  if (dmax_text == "auto") {
    auto report = check_generic(mesh, GenericOptions{c.tol, false, 12});
    if (!report.generic())
      throw Error(ErrorCode::NotGeneric, "mesh is not generic, so no degree cap is known; pass --dmax explicitly");
    long D = regularity_bound(mesh, c.r).D;
    dmax = static_cast<int>(std::max<long>(D + 1, static_cast<long>(window) + 2));
    cap_source = "regularity bound D = " + std::to_string(D) + ", cap D - 2 + 3";
  } else {
    dmax = std::stoi(dmax_text);
  }
  auto values = to_values(hf_table(mesh, c.r, dmax, parse_rank(c.rank)));
  HilbertData h = analyze(values, window);
  Output out{"hilbert", c.mesh_path, c.r, {"d", "dim", "hp"}, {}, {}};
  for (std::size_t d = 0; d < values.size(); ++d) {
    Rational hp = h.hp(static_cast<long>(d));
    out.rows.push_back({d, values[d], to_string(hp)});
  }
  out.extras = {{"hp", h.hp.to_string()},
                {"postulation", h.postulation},
                {"numerator", polynomial_text(h.numerator)},
                {"numerator_coefficients", numerator_json(h.numerator)},
                {"dmax", dmax},
                {"cap", cap_source}};
  emit(out, parse_format(c.format));
  return 0;
}

int cmd_formula(const Common& c) {
  auto mesh = ValidatedMesh::from(load_mesh(c.mesh_path));
  auto method = parse_rank(c.rank);
  auto direct = hf_table(mesh, c.r, c.dmax, method);
  std::vector<FormulaTerms> terms(direct.size());
  parallel_for(terms.size(), [&](std::size_t d) { terms[d] = dim_formula(mesh, c.r, static_cast<int>(d), method); });
  Output out{"formula", c.mesh_path, c.r, {"d", "term_faces", "term_edges", "term_vertices", "term_h0", "total", "direct"}, {}, {}};
  bool consistent = true;
  for (std::size_t d = 0; d < terms.size(); ++d) {
    const auto& t = terms[d];
    consistent = consistent && t.total() == static_cast<long>(direct[d]);
    out.rows.push_back({d, t.faces, t.edges, t.vertices, t.h0, t.total(), direct[d]});
  }
  out.extras = {{"consistent", consistent}};
  emit(out, parse_format(c.format));
  return consistent ? 0 : 1;
}

int cmd_homology(const Common& c) {
  auto mesh = ValidatedMesh::from(load_mesh(c.mesh_path));
  auto method = parse_rank(c.rank);
  std::vector<std::vector<Json>> rows(static_cast<std::size_t>(c.dmax) + 1);
  parallel_for(rows.size(), [&](std::size_t d) {
    auto h = h0_h1_J(mesh, c.r, static_cast<int>(d), method);
    std::size_t quotients = 0;
    for (std::size_t v = 0; v < mesh.phi0(); ++v) quotients += quotient_dim(vertex_ideal(mesh, v, c.r), static_cast<int>(d), method);
    rows[d] = {d, h.h0, h.h1, quotients};
  });
  Output out{"homology", c.mesh_path, c.r, {"d", "h0", "h1", "sum_quotient_vertex"}, std::move(rows), {}};
  emit(out, parse_format(c.format));
  return 0;
}

int cmd_generic(const Common& c, bool strict, std::optional<int> dim, int d_cap) {
  auto mesh = ValidatedMesh::from(load_mesh(c.mesh_path));
  GenericOptions options{c.tol, strict, d_cap};
  auto report = check_generic(mesh, options);
  Output out{"generic", c.mesh_path, c.r, {"condition", "passed", "witnesses"}, {}, {}};
  for (std::size_t i = 0; i < 4; ++i) {
    Json witnesses = Json::array();
    for (const auto& w : report.conditions[i].witnesses) witnesses.push_back(w);
    out.rows.push_back({i + 1, report.conditions[i].passed, witnesses});
  }
  Json caveats = Json::array();
  for (const auto& s : report.numeric_caveats) caveats.push_back(s);
  auto bound = regularity_bound(mesh, c.r);
  Json per_edge = Json::array();
  for (const auto& [id, value] : bound.per_edge) per_edge.push_back(id + "=" + std::to_string(value));
  out.extras = {{"generic", report.generic()}, {"numeric_caveats", caveats}, {"regularity_D", bound.D}, {"D_tau", per_edge}};
  if (dim) {
    long value = generic_dim(mesh, c.r, *dim, report);
    out.extras.emplace_back("generic_dim", value);
    out.extras.emplace_back("certified", *dim >= bound.D - 2);
  }
  emit(out, parse_format(c.format));
  return 0;
}

int cmd_net(const Common& c, const std::string& net_path) {
  Mesh source = load_mesh(c.mesh_path);
  auto mesh = ValidatedMesh::from(source);
  NetSpec net = load_net(net_path);
  ImageMesh image = image_mesh(source, net);
  auto image_mesh_v = ValidatedMesh::from(image.mesh);
  auto method = parse_rank(c.rank);
  // enough image degrees for the tensor column and for a stable fit
  int image_dmax = std::max((c.dmax + net.n - 1) / net.n, 10);
  auto direct = to_values(hf_table(mesh, c.r, c.dmax, method));
  auto image_values = to_values(hf_table(image_mesh_v, c.r, image_dmax, method));

  std::optional<Quadratic> image_hp;
  std::optional<long> image_post;
  Json image_hp_json = nullptr, transform_json = nullptr, bound_json = nullptr, mesh_hp_json = nullptr, mesh_post_json = nullptr;
  try {
    image_hp = fit_hp(image_values);
    image_post = postulation(image_values, *image_hp);
    image_hp_json = image_hp->to_string();
    auto t = hp_transform(*image_hp, net.n, image_post);
    transform_json = t.hp.to_string();
    bound_json = *t.postulation_bound;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotStabilized) throw;
  }
  try {
    auto hp = fit_hp(direct);
    mesh_hp_json = hp.to_string();
    mesh_post_json = postulation(direct, hp);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotStabilized) throw;
  }

  Output out{"net", c.mesh_path, c.r, {"d", "dim", "dim_image", "tensor"}, {}, {}};
  for (std::size_t d = 0; d < direct.size(); ++d) {
    Json image_cell = d < image_values.size() ? Json(image_values[d]) : Json("");
    out.rows.push_back({d, direct[d], image_cell, tensor_dim(image_values, image_hp, net.n, static_cast<int>(d))});
  }
  Json cn = Json::array();
  for (long v : c_table(net.n)) cn.push_back(v);
  Json warnings = Json::array();
  for (const auto& w : image.warnings) warnings.push_back(w);
  out.extras = {{"net_degree", net.n},         {"c_n", cn},
                {"image_hp", image_hp_json},   {"image_postulation", image_post ? Json(*image_post) : Json(nullptr)},
                {"transformed_hp", transform_json}, {"postulation_bound", bound_json},
                {"hp", mesh_hp_json},          {"postulation", mesh_post_json},
                {"warnings", warnings}};
  emit(out, parse_format(c.format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimensions of spline spaces on meshes with curved edges"};
  app.require_subcommand(1);
  Common c;
  std::string dmax_text = "auto";
  std::string net_path;
  bool strict = false;
  std::optional<int> dim;
  int d_cap = 12;
  std::size_t window = 4;

  auto add_common = [&](CLI::App* sub, bool with_r, bool with_dmax) {
    sub->add_option("mesh", c.mesh_path, "mesh JSON file")->required();
    sub->add_option("--format", c.format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--rank", c.rank, "rank method: auto, exact or modular")->check(CLI::IsMember({"auto", "exact", "modular"}));
    sub->add_option("--tol", c.tol, "tolerance for numeric intersection points");
    if (with_r) sub->add_option("--r", c.r, "smoothness order")->check(CLI::NonNegativeNumber);
    if (with_dmax) sub->add_option("--dmax", c.dmax, "largest degree")->check(CLI::NonNegativeNumber);
  };
  auto* validate_cmd = app.add_subcommand("validate", "run the mesh checks");
  add_common(validate_cmd, false, false);
  auto* dim_cmd = app.add_subcommand("dim", "dim C^r_d for d = 0..dmax");
  add_common(dim_cmd, true, true);
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert polynomial, postulation number, series numerator");
  add_common(hilbert_cmd, true, false);
  hilbert_cmd->add_option("--dmax", dmax_text, "largest degree, or 'auto' for generic meshes");
  hilbert_cmd->add_option("--window", window, "stabilization window")->check(CLI::Range(3, 100));
  auto* formula_cmd = app.add_subcommand("formula", "four-term dimension formula against the direct count");
  add_common(formula_cmd, true, true);
  auto* generic_cmd = app.add_subcommand("generic", "genericity conditions and regularity bound");
  add_common(generic_cmd, true, false);
  generic_cmd->add_flag("--strict", strict, "check tangents at boundary vertices too");
  generic_cmd->add_option("--dim", dim, "also evaluate the generic dimension formula at this degree");
  generic_cmd->add_option("--dcap", d_cap, "degree cap for the vertex ideal stabilization check");
  auto* net_cmd = app.add_subcommand("net", "pull back along a net of forms");
  add_common(net_cmd, true, true);
  net_cmd->add_option("--net", net_path, "net JSON file")->required();
  auto* homology_cmd = app.add_subcommand("homology", "dim H_0, H_1 of the ideal complex");
  add_common(homology_cmd, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(c);
    if (*dim_cmd) return cmd_dim(c);
    if (*hilbert_cmd) return cmd_hilbert(c, dmax_text, window);
    if (*formula_cmd) return cmd_formula(c);
    if (*generic_cmd) return cmd_generic(c, strict, dim, d_cap);
    if (*net_cmd) return cmd_net(c, net_path);
    if (*homology_cmd) return cmd_homology(c);
  } catch (const Error& e) {
    std::cerr << "sas: " << e.what() << "\n";
    return is_input_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "sas: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
