#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sas/rational.hpp"

namespace sas {

// Exponent triple (a, b, c) of the monomial x^a y^b z^c.
using Exponent = std::array<int, 3>;

// Homogeneous coordinates of a point of the projective plane.
using Point3 = std::array<Rational, 3>;
using ComplexPoint3 = std::array<std::complex<double>, 3>;

inline int total_degree(const Exponent& e) { return e[0] + e[1] + e[2]; }

// Graded lexicographic order with x > y > z. The comparator sorts the larger
// monomial first, so map iteration starts at the leading term.
struct GrlexDescending {
  bool operator()(const Exponent& lhs, const Exponent& rhs) const {
    int dl = total_degree(lhs), dr = total_degree(rhs);
    if (dl != dr) return dl > dr;
    if (lhs[0] != rhs[0]) return lhs[0] > rhs[0];
    return lhs[1] > rhs[1];
  }
};

// Sparse polynomial in x, y, z; not necessarily homogeneous. Zero
// coefficients are never stored.
using Polynomial = std::map<Exponent, Rational, GrlexDescending>;

// Monomials of degree d in graded lexicographic order:
// x^d, x^{d-1}y, x^{d-1}z, x^{d-2}y^2, ... , z^d.
std::vector<Exponent> monomial_basis(int d);

// Position of e inside monomial_basis(total_degree(e)).
inline std::size_t monomial_index(const Exponent& e) {
  std::size_t s = static_cast<std::size_t>(e[1] + e[2]);
  return s * (s + 1) / 2 + static_cast<std::size_t>(e[2]);
}

class Form {
public:
  // The zero form. Its degree is 0 by convention and must not be relied on.
  Form() = default;

  // Throws NotHomogeneous if the terms have mixed degrees.
  static Form from_polynomial(const Polynomial& p);
  static Form monomial(const Exponent& e, const Rational& coefficient = 1);
  static Form constant(const Rational& c);
  static Form variable(int index);  // 0 -> x, 1 -> y, 2 -> z

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Polynomial& terms() const { return terms_; }
  Rational coefficient(const Exponent& e) const;

  // Coefficient vector indexed by monomial_basis(degree()).
  std::vector<Rational> dense_coefficients() const;

  Form operator-() const;
  Form& operator+=(const Form& rhs);
  Form& operator-=(const Form& rhs);
  Form& operator*=(const Rational& s);

  friend Form operator+(Form lhs, const Form& rhs) { return lhs += rhs; }
  friend Form operator-(Form lhs, const Form& rhs) { return lhs -= rhs; }
  friend Form operator*(const Form& lhs, const Form& rhs);
  friend Form operator*(Form lhs, const Rational& s) { return lhs *= s; }
  friend Form operator*(const Rational& s, Form rhs) { return rhs *= s; }
  friend bool operator==(const Form& lhs, const Form& rhs) {
    return lhs.terms_ == rhs.terms_ && (lhs.is_zero() || lhs.degree_ == rhs.degree_);
  }

  Rational evaluate(const Point3& p) const;
  std::complex<double> evaluate(const ComplexPoint3& p) const;
  Form partial(int var) const;
  std::array<Rational, 3> gradient_at(const Point3& p) const;

  // Scalar multiple with coprime integer coefficients and positive leading
  // coefficient; two forms are proportional iff their primitive parts agree.
  Form primitive() const;
  bool proportional_to(const Form& other) const;

  // Sum of absolute values of the coefficients, as a double.
  double coefficient_l1() const;

  std::string to_string() const;

private:
  int degree_ = 0;
  Polynomial terms_;
};

Form pow(const Form& base, unsigned k);

// a + b over differing degrees is only meaningful on Polynomial.
Polynomial to_polynomial(const Form& f);

// Replace z by 1.
Polynomial dehomogenize(const Form& f);

// Multiply each term by the power of z raising it to the total degree.
// Requires p not to involve z.
Form homogenize(const Polynomial& p);

struct DivisionResult {
  Form quotient;
  Form remainder;
};

// Multivariate division by a single form with respect to the graded
// lexicographic order. The remainder is zero iff divisor divides dividend.
DivisionResult divide(const Form& dividend, const Form& divisor);

std::string polynomial_to_string(const Polynomial& p);

// Terms of f.primitive() with integer coefficients, leading term first.
std::vector<std::pair<Exponent, Integer>> integer_terms(const Form& f);

}  // namespace sas
