#include <doctest.h>

#include <random>

#include "sas/error.hpp"
#include "sas/mesh.hpp"
#include "sas/mesh_io.hpp"
#include "sas/parse.hpp"
#include "toy_meshes.hpp"

using namespace sas;
using sas::testing::fixture;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an sas::Error");
  return ErrorCode::InvalidArgument;
}

const char* kTwoFaces = R"({
  "vertices": [{"id": "P", "point": [0, 0], "interior": false},
               {"id": "Q", "point": [1, 0], "interior": false}],
  "edges": [{"id": "e", "curve": "y", "tail": "P", "head": "Q", "interior": true},
            {"id": "b1", "curve": "y - x^2 + x", "tail": "Q", "head": "P", "interior": false},
            {"id": "b2", "curve": "y + x^2 - x", "tail": "P", "head": "Q", "interior": false}],
  "faces": [{"id": "F1", "boundary": [{"edge": "e", "sign": 1}, {"edge": "b1", "sign": 1}]},
            {"id": "F2", "boundary": [{"edge": "e", "sign": -1}, {"edge": "b2", "sign": 1}]}]
})";

}  // namespace

TEST_CASE("fixtures load and validate") {
  for (const char* name : {"fig1.json", "altered.json", "net_ms.json", "net_ms_perturbed.json"}) {
    CAPTURE(name);
    Mesh m = load_mesh(fixture(name));
    auto report = validate(m);
    CHECK(report.ok());
    CHECK(report.checks.size() == 7);
  }
  auto parab = ValidatedMesh::from(load_mesh(fixture("fig1.json")));
  CHECK(parab.phi2() == 8);
  CHECK(parab.phi1() == 9);
  CHECK(parab.phi0() == 2);
  auto ms = ValidatedMesh::from(load_mesh(fixture("net_ms.json")));
  CHECK(ms.phi2() == 7);
  CHECK(ms.phi1() == 9);
  CHECK(ms.phi0() == 3);
}

TEST_CASE("boundary matrices compose to zero on interior cells") {
  for (const char* name : {"fig1.json", "altered.json", "net_ms.json"}) {
    auto m = ValidatedMesh::from(load_mesh(fixture(name)));
    auto d2 = m.boundary_matrix_2();
    auto d1 = m.boundary_matrix_1();
    REQUIRE(d2.size() == m.phi1());
    REQUIRE(d1.size() == m.phi0());
    for (std::size_t v = 0; v < m.phi0(); ++v)
      for (std::size_t f = 0; f < m.phi2(); ++f) {
        long s = 0;
        for (std::size_t e = 0; e < m.phi1(); ++e) s += d1[v][e] * d2[e][f];
        CHECK(s == 0);
      }
    // every interior edge column of d2 has one +1 and one -1
    for (std::size_t e = 0; e < m.phi1(); ++e) {
      int plus = 0, minus = 0;
      for (int x : d2[e]) {
        plus += x == 1;
        minus += x == -1;
      }
      CHECK(plus == 1);
      CHECK(minus == 1);
    }
  }
}

TEST_CASE("parse, serialize, parse round trip") {
  Mesh a = parse_mesh(kTwoFaces);
  Mesh b = parse_mesh(serialize_mesh(a));
  CHECK(a == b);
  Mesh parab = load_mesh(fixture("fig1.json"));
  CHECK(parse_mesh(serialize_mesh(parab)) == parab);
  std::mt19937 rng(17);
  for (int i = 0; i < 10; ++i) {
    Mesh toy = sas::testing::random_toy_mesh(rng).mesh;
    CHECK(parse_mesh(serialize_mesh(toy)) == toy);
  }
}

TEST_CASE("malformed meshes raise typed errors") {
  CHECK(code_of([] { parse_mesh("{"); }) == ErrorCode::SchemaError);
  CHECK(code_of([] { parse_mesh(R"({"vertices": [], "edges": [], "faces": [], "extra": 1})"); }) ==
        ErrorCode::SchemaError);
  CHECK(code_of([] {
          parse_mesh(R"({"vertices": [], "edges": [{"id": "e", "form": "x", "tail": "A", "head": "B",
                         "interior": false}], "faces": []})");
        }) == ErrorCode::DanglingReference);
  CHECK(code_of([] {
          parse_mesh(R"({"vertices": [{"id": "A", "point": [0, 0], "interior": false}], "edges":
                         [{"id": "e", "form": "x + y^2", "tail": "A", "head": "A", "interior": false}], "faces": []})");
        }) == ErrorCode::NotHomogeneous);
  CHECK(code_of([] { load_mesh(fixture("does_not_exist.json")); }) == ErrorCode::FileNotFound);
  CHECK(code_of([] { ValidatedMesh::from(Mesh{}); }) == ErrorCode::MeshNotValidated);
}

TEST_CASE("validation pinpoints each broken condition") {
  Mesh good = parse_mesh(kTwoFaces);
  CHECK(validate(good).ok());

  auto with_edges = [&](std::vector<Edge> edges) { return Mesh(good.vertices(), std::move(edges), good.faces()); };
  auto edges = good.edges();

  SUBCASE("vertex off its curve (f)") {
    auto e2 = edges;
    for (auto& e : e2)
      if (e.id == "e") e.form = parse_form("y - z");
    auto report = validate(with_edges(e2));
    CHECK(!report.check('f').passed);
    CHECK(report.check('a').passed);
  }
  SUBCASE("singular curve at a vertex (g)") {
    auto e2 = edges;
    // nodal cubic with its node at P
    for (auto& e : e2)
      if (e.id == "b1") e.form = parse_form("y^2*z - x^3 + x^2*z");
    auto report = validate(with_edges(e2));
    CHECK(!report.check('g').passed);
  }
  SUBCASE("interior edge with equal orientations (a)") {
    auto faces = good.faces();
    faces[1].boundary[0].sign = 1;
    auto report = validate(Mesh(good.vertices(), edges, faces));
    CHECK(!report.check('a').passed);
  }
  SUBCASE("interior flag inconsistent (a)") {
    auto vs = good.vertices();
    vs[0].interior = true;
    auto report = validate(Mesh(vs, edges, good.faces()));
    CHECK(!report.check('a').passed);
    CHECK(!report.check('e').passed);
    CHECK(!report.ok());
  }
}

TEST_CASE("disconnected and non-hereditary meshes") {
  // two triangles meeting only at a vertex: adjacency fails, and the vertex star is split
  Point3 o{0, 0, 1}, a{1, 0, 1}, b{0, 1, 1}, c{-1, 0, 1}, d{0, -1, 1};
  using sas::testing::line_through;
  Mesh m({Vertex{"O", o, false}, Vertex{"A", a, false}, Vertex{"B", b, false}, Vertex{"C", c, false},
          Vertex{"D", d, false}},
         {Edge{"OA", line_through(o, a), "O", "A", false}, Edge{"AB", line_through(a, b), "A", "B", false},
          Edge{"BO", line_through(b, o), "B", "O", false}, Edge{"OC", line_through(o, c), "O", "C", false},
          Edge{"CD", line_through(c, d), "C", "D", false}, Edge{"DO", line_through(d, o), "D", "O", false}},
         {Face{"T1", {{"OA", 1}, {"AB", 1}, {"BO", 1}}}, Face{"T2", {{"OC", 1}, {"CD", 1}, {"DO", 1}}}});
  auto report = validate(m);
  CHECK(!report.check('b').passed);
  CHECK(!report.check('c').passed);
  CHECK(!report.check('e').passed);
}

TEST_CASE("stars and positions") {
  auto m = ValidatedMesh::from(load_mesh(fixture("fig1.json")));
  Star s = m.star("e0");
  CHECK(s.faces.size() == 2);
  CHECK(s.vertices.size() >= 2);
  CHECK(m.interior_edge(m.interior_edge_position("e0")).id == "e0");
  CHECK(m.interior_vertex(m.interior_vertex_position("vL")).id == "vL");
  ErrorCode c1 = ErrorCode::InvalidArgument, c2 = ErrorCode::InvalidArgument;
  try {
    m.interior_edge_position("bl");
  } catch (const Error& e) {
    c1 = e.code();
  }
  try {
    m.interior_vertex_position("T");
  } catch (const Error& e) {
    c2 = e.code();
  }
  CHECK(c1 == ErrorCode::NotInteriorEdge);
  CHECK(c2 == ErrorCode::NotInteriorVertex);
}
