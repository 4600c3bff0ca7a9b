#include <doctest.h>

#include <random>

#include "sas/error.hpp"
#include "sas/homology.hpp"
#include "sas/mesh_io.hpp"
#include "sas/parse.hpp"
#include "sas/splinespace.hpp"
#include "toy_meshes.hpp"

using namespace sas;
using sas::testing::fixture;

TEST_CASE("edge ideal dimensions") {
  CHECK(dim_J_edge(1, 0, 0) == 0);
  CHECK(dim_J_edge(1, 0, 3) == forms_dim(2));
  CHECK(dim_J_edge(2, 1, 3) == 0);
  CHECK(dim_J_edge(2, 1, 6) == forms_dim(2));
  auto m = ValidatedMesh::from(load_mesh(fixture("fig1.json")));
  CHECK(dim_J_edge(m, "e0", 2, 5) == forms_dim(2));
  CHECK(dim_J_edge(m, "u1", 2, 7) == forms_dim(1));
}

TEST_CASE("ideal dimensions of complete intersections") {
  // S/(f, g) with deg f = a, deg g = b has series (1-t^a)(1-t^b)/(1-t)^3
  Form f = parse_form("x^2 - y*z"), g = parse_form("y^3 + x*z^2");
  for (int d = 0; d <= 9; ++d) {
    long expected = forms_dim(d) - forms_dim(d - 2) - forms_dim(d - 3) + forms_dim(d - 5);
    CHECK(quotient_dim({f, g}, d) == static_cast<std::size_t>(expected));
    CHECK(ideal_dim({f, g}, d) + quotient_dim({f, g}, d) == static_cast<std::size_t>(forms_dim(d)));
  }
  CHECK(ideal_dim({}, 3) == 0);
}

TEST_CASE("multiplicity of zero-dimensional ideals") {
  Form x = Form::variable(0), y = Form::variable(1);
  CHECK(multiplicity({pow(x, 2), pow(y, 2)}, 6) == 4);
  CHECK(multiplicity({pow(x, 3), pow(y, 2), x * y}, 6) == 4);
  // three distinct lines through a point, squared: (x^2, y^2, (x+y)^2) has colength 3
  CHECK(multiplicity({pow(x, 2), pow(y, 2), pow(x + y, 2)}, 6) == 3);
  CHECK_THROWS_AS(multiplicity({pow(x, 4), pow(y, 4)}, 5), Error);
}

TEST_CASE("colon ideals") {
  Form x = Form::variable(0), y = Form::variable(1);
  // (x^2, y) : x = (x, y)
  for (int d = 0; d <= 4; ++d) CHECK(colon_dim({pow(x, 2), y}, x, d) == ideal_dim({x, y}, d));
  // I : 1 = I
  CHECK(colon_dim({pow(x, 2), y}, Form::constant(1), 3) == ideal_dim({pow(x, 2), y}, 3));
}

TEST_CASE("vertex ideals merge proportional edge forms") {
  auto m = ValidatedMesh::from(load_mesh(fixture("fig1.json")));
  std::size_t vl = m.interior_vertex_position("vL");
  // at vL: the line y, and the two parabolas each contributing one form
  auto gens = vertex_ideal(m, vl, 0);
  CHECK(gens.size() == 3);
  for (const auto& g : vertex_ideal(m, vl, 2)) CHECK(g.degree() % 3 == 0);
}

TEST_CASE("homology identities on fixtures") {
  for (const char* name : {"fig1.json", "altered.json", "net_ms.json"}) {
    auto m = ValidatedMesh::from(load_mesh(fixture(name)));
    for (int r = 0; r <= 2; ++r)
      for (int d = 0; d <= 7; ++d) {
        CAPTURE(name);
        CAPTURE(r);
        CAPTURE(d);
        std::size_t dim = spline_dim(m, r, d);
        auto hom = h0_h1_J(m, r, d);
        CHECK(dim == static_cast<std::size_t>(forms_dim(d)) + hom.h1);
        auto terms = dim_formula(m, r, d);
        CHECK(terms.total() == static_cast<long>(dim));
        CHECK(terms.h0 == static_cast<long>(hom.h0));
      }
  }
}

TEST_CASE("toy meshes: formula and oracle agree") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    auto toy = sas::testing::random_toy_mesh(rng);
    auto m = ValidatedMesh::from(toy.mesh);
    for (int d = 0; d <= 4; ++d) {
      auto terms = dim_formula(m, 1, d);
      CHECK(terms.total() == static_cast<long>(sas::testing::oracle_spline_dim(m, 1, d)));
      if (m.phi0() == 0) CHECK(terms.h0 == 0);
    }
  }
}

TEST_CASE("dim_J_vertex rejects boundary vertices") {
  auto m = ValidatedMesh::from(load_mesh(fixture("fig1.json")));
  CHECK_THROWS_AS(dim_J_vertex(m, "T", 0, 3), Error);
  CHECK(dim_J_vertex(m, "vL", 0, 3) == ideal_dim(vertex_ideal(m, m.interior_vertex_position("vL"), 0), 3));
}
