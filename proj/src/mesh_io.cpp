#include "sas/mesh_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "sas/error.hpp"
#include "sas/parse.hpp"

namespace sas {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::SchemaError, where + ": " + what);
}

void check_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (key == "comment") continue;
    bool known = false;
    for (const char* k : allowed) known = known || key == k;
    if (!known) schema_error(where, "unknown key '" + key + "'");
  }
}

const json& require(const json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing key '") + key + "'");
  return *it;
}

std::string require_string(const json& obj, const std::string& where, const char* key) {
  const json& v = require(obj, where, key);
  if (!v.is_string()) schema_error(where, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

bool require_bool(const json& obj, const std::string& where, const char* key) {
  const json& v = require(obj, where, key);
  if (!v.is_boolean()) schema_error(where, std::string("'") + key + "' must be a boolean");
  return v.get<bool>();
}

Rational read_number(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number()) {
      // dump() yields the shortest decimal text, which is then read exactly.
      std::string text = v.dump();
      auto e = text.find_first_of("eE");
      if (e == std::string::npos) return parse_rational(text);
      Rational mantissa = parse_rational(text.substr(0, e));
      long exponent = std::stol(text.substr(e + 1));
      Integer scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
      return exponent < 0 ? Rational(mantissa / scale) : Rational(mantissa * scale);
    }
  } catch (const Error& e) {
    schema_error(where, std::string("bad coordinate: ") + e.what());
  }
  schema_error(where, "coordinate must be a number or a rational string");
}

const json& require_array(const json& obj, const std::string& where, const char* key) {
  const json& v = require(obj, where, key);
  if (!v.is_array()) schema_error(where, std::string("'") + key + "' must be an array");
  return v;
}

json number_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

}  // namespace

Mesh parse_mesh(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, std::string("malformed JSON: ") + e.what());
  }
  check_keys(doc, "mesh", {"vertices", "edges", "faces"});

  std::vector<Vertex> vertices;
  for (const json& jv : require_array(doc, "mesh", "vertices")) {
    std::string where = "vertex";
    check_keys(jv, where, {"id", "point", "interior"});
    Vertex v;
    v.id = require_string(jv, where, "id");
    where += " '" + v.id + "'";
    const json& pt = require(jv, where, "point");
    if (!pt.is_array() || (pt.size() != 2 && pt.size() != 3)) schema_error(where, "point must have 2 or 3 entries");
    v.point = {read_number(pt[0], where), read_number(pt[1], where), pt.size() == 3 ? read_number(pt[2], where) : 1};
    if (v.point[0] == 0 && v.point[1] == 0 && v.point[2] == 0) schema_error(where, "point has all coordinates zero");
    v.interior = require_bool(jv, where, "interior");
    vertices.push_back(std::move(v));
  }

  std::vector<Edge> edges;
  for (const json& je : require_array(doc, "mesh", "edges")) {
    std::string where = "edge";
    check_keys(je, where, {"id", "form", "curve", "tail", "head", "interior"});
    Edge e;
    e.id = require_string(je, where, "id");
    where += " '" + e.id + "'";
    bool has_form = je.contains("form"), has_curve = je.contains("curve");
    if (has_form == has_curve) schema_error(where, "exactly one of 'form' and 'curve' is required");
    e.form = has_form ? parse_form(require_string(je, where, "form"))
                      : parse_affine_and_homogenize(require_string(je, where, "curve"));
    e.tail = require_string(je, where, "tail");
    e.head = require_string(je, where, "head");
    e.interior = require_bool(je, where, "interior");
    edges.push_back(std::move(e));
  }

  std::vector<Face> faces;
  for (const json& jf : require_array(doc, "mesh", "faces")) {
    std::string where = "face";
    check_keys(jf, where, {"id", "boundary"});
    Face f;
    f.id = require_string(jf, where, "id");
    where += " '" + f.id + "'";
    for (const json& jb : require_array(jf, where, "boundary")) {
      check_keys(jb, where, {"edge", "sign"});
      BoundaryEntry b;
      b.edge = require_string(jb, where, "edge");
      const json& s = require(jb, where, "sign");
      if (!s.is_number_integer() || (s.get<int>() != 1 && s.get<int>() != -1))
        schema_error(where, "sign must be +1 or -1");
      b.sign = s.get<int>();
      f.boundary.push_back(std::move(b));
    }
    faces.push_back(std::move(f));
  }
  return Mesh(std::move(vertices), std::move(edges), std::move(faces));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileNotFound, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Mesh load_mesh(const std::filesystem::path& path) { return parse_mesh(read_text_file(path)); }

std::string serialize_mesh(const Mesh& mesh) {
  json doc = json::object();
  json vertices = json::array();
  for (const Vertex& v : mesh.vertices()) {
    json point = json::array({number_json(v.point[0]), number_json(v.point[1])});
    if (v.point[2] != 1) point.push_back(number_json(v.point[2]));
    vertices.push_back(json{{"id", v.id}, {"point", point}, {"interior", v.interior}});
  }
  json edges = json::array();
  for (const Edge& e : mesh.edges())
    edges.push_back(
        json{{"id", e.id}, {"form", e.form.to_string()}, {"tail", e.tail}, {"head", e.head}, {"interior", e.interior}});
  json faces = json::array();
  for (const Face& f : mesh.faces()) {
    json boundary = json::array();
    for (const auto& b : f.boundary) boundary.push_back(json{{"edge", b.edge}, {"sign", b.sign}});
    faces.push_back(json{{"id", f.id}, {"boundary", boundary}});
  }
  doc["vertices"] = vertices;
  doc["edges"] = edges;
  doc["faces"] = faces;
  return doc.dump(2) + "\n";
}

}  // namespace sas
