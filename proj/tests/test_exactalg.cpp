#include <doctest.h>

#include <random>

#include "sas/elimination.hpp"
#include "sas/error.hpp"
#include "sas/form.hpp"
#include "sas/matrix.hpp"
#include "sas/parse.hpp"

using namespace sas;

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

RatMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int rank_cap) {
  // product of random rows x rank_cap and rank_cap x cols factors
  std::uniform_int_distribution<int> small(-4, 4);
  RatMatrix a(rows, static_cast<std::size_t>(rank_cap)), b(static_cast<std::size_t>(rank_cap), cols), m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (int k = 0; k < rank_cap; ++k) {
      a(i, static_cast<std::size_t>(k)) = Rational(small(rng), 1 + (small(rng) + 4) % 3);
      a(i, static_cast<std::size_t>(k)).canonicalize();
    }
  for (int k = 0; k < rank_cap; ++k)
    for (std::size_t j = 0; j < cols; ++j) b(static_cast<std::size_t>(k), j) = small(rng);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (int k = 0; k < rank_cap; ++k) m(i, j) += a(i, static_cast<std::size_t>(k)) * b(static_cast<std::size_t>(k), j);
  return m;
}

}  // namespace

TEST_CASE("rational parsing and binomials") {
  CHECK(parse_rational("-7/14") == Rational(-1, 2));
  CHECK(parse_rational("2.5") == Rational(5, 2));
  CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::SyntaxError);
  CHECK(binomial(7, 2) == 21);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 2) == 0);
  CHECK(forms_dim(0) == 1);
  CHECK(forms_dim(4) == 15);
  CHECK(forms_dim(-1) == 0);
}

TEST_CASE("monomial basis order matches monomial_index") {
  for (int d = 0; d <= 6; ++d) {
    auto basis = monomial_basis(d);
    REQUIRE(basis.size() == static_cast<std::size_t>(forms_dim(d)));
    for (std::size_t i = 0; i < basis.size(); ++i) CHECK(monomial_index(basis[i]) == i);
    CHECK(basis.front() == Exponent{d, 0, 0});
    CHECK(basis.back() == Exponent{0, 0, d});
  }
}

TEST_CASE("form parsing") {
  Form f = parse_form("x^2 - y*z + 3/2*z^2");
  CHECK(f.degree() == 2);
  CHECK(f.term_count() == 3);
  CHECK(f.coefficient({0, 0, 2}) == Rational(3, 2));
  CHECK(parse_form("(x - y)^2") == parse_form("x^2 - 2*x*y + y^2"));
  CHECK(code_of([] { parse_form("x^2 + y"); }) == ErrorCode::NotHomogeneous);
  CHECK(code_of([] { parse_form("x +* y"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_form("x + w"); }) == ErrorCode::SyntaxError);
  Form h = parse_affine_and_homogenize("y - x^2 + 1");
  CHECK(h == parse_form("y*z - x^2 + z^2"));
  CHECK(parse_form(f.to_string()) == f);
}

TEST_CASE("form arithmetic, evaluation and division") {
  Form x = Form::variable(0), y = Form::variable(1), z = Form::variable(2);
  Form g = x * x - y * z;
  Form q = x + y * Rational(2) - z;
  Form p = g * q + pow(x, 3) * Rational(0);
  auto res = divide(p, g);
  CHECK(res.remainder.is_zero());
  CHECK(res.quotient == q);
  Point3 pt{1, 1, 1};
  CHECK(g.evaluate(pt) == 0);
  CHECK(g.gradient_at(pt) == std::array<Rational, 3>{2, -1, -1});
  CHECK(g.partial(0) == x * Rational(2));
  CHECK((g * Rational(6)).primitive() == g);
  CHECK((g * Rational(-3, 7)).proportional_to(g));
  CHECK(!g.proportional_to(q * q));
  CHECK(pow(x + y, 3).term_count() == 4);
  auto terms = integer_terms(g * Rational(1, 6));
  REQUIRE(terms.size() == 2);
  CHECK(abs(terms[0].second) == 1);
  // remainder plus quotient times divisor reconstructs the dividend
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> small(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    Form a;
    for (const auto& e : monomial_basis(4)) a += Form::monomial(e, small(rng));
    auto dr = divide(a, g);
    CHECK(dr.quotient * g + dr.remainder == a);
  }
}

TEST_CASE("dehomogenize and homogenize are inverse on forms") {
  Form f = parse_form("x^3 - 2*x*y*z + z^3");
  CHECK(homogenize(dehomogenize(f)) == f);
}

TEST_CASE("exact, modular and naive ranks agree on random products") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t rows = 3 + rng() % 9, cols = 3 + rng() % 9;
    int k = 1 + static_cast<int>(rng() % 6);
    RatMatrix m = random_matrix(rng, rows, cols, k);
    std::size_t expected = rank_naive(m);
    CHECK(expected <= static_cast<std::size_t>(k));
    CHECK(rank(m) == expected);
    CHECK(rank_exact(m.to_system()) == expected);
    CHECK(rank_multi_modular(m.to_system(), default_primes()) == expected);
    CHECK(system_rank(m.to_system(), RankMethod::Auto) == expected);
  }
}

TEST_CASE("kernel basis spans the null space") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    RatMatrix m = random_matrix(rng, 6, 9, 1 + static_cast<int>(rng() % 5));
    auto kernel = kernel_basis(m);
    CHECK(kernel.size() == m.cols() - rank_naive(m));
    for (const auto& v : kernel)
      for (const auto& entry : m.apply(v)) CHECK(entry == 0);
    if (!kernel.empty()) CHECK(rank_naive(RatMatrix::from_rows(kernel)) == kernel.size());
  }
}

TEST_CASE("empty and zero systems") {
  IntegerSystem s(4);
  CHECK(rank_exact(s) == 0);
  s.add_row(std::vector<std::pair<std::uint32_t, Integer>>{{1, Integer(0)}});
  CHECK(rank_exact(s) == 0);
  IntegerSystem t(3);
  t.add_row(std::vector<std::pair<std::uint32_t, Rational>>{{0, Rational(1, 2)}, {2, Rational(1, 3)}});
  t.add_row(std::vector<std::pair<std::uint32_t, Rational>>{{0, Rational(3)}, {2, Rational(2)}});
  CHECK(rank_exact(t) == 1);
  CHECK(kernel_from_echelon(row_echelon(t)).size() == 2);
}

TEST_CASE("error codes classify input errors") {
  CHECK(is_input_error(ErrorCode::SyntaxError));
  CHECK(is_input_error(ErrorCode::FileNotFound));
  CHECK(!is_input_error(ErrorCode::NotStabilized));
  CHECK(error_code_name(ErrorCode::NotGeneric) == "NotGeneric");
}
