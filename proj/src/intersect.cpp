#include "sas/intersect.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <Eigen/Dense>

#include "sas/error.hpp"

namespace sas {

namespace {

using Complex = std::complex<double>;
using ComplexL = std::complex<long double>;

// Affine part F(x, y, 1) as a polynomial in `var` whose coefficients are
// polynomials in the other variable.
std::vector<UniPoly> split_by(const Form& f, int var) {
  const int other = 1 - var;
  std::vector<UniPoly> out;
  for (const auto& [e, c] : f.terms()) {
    auto k = static_cast<std::size_t>(e[var]);
    auto j = static_cast<std::size_t>(e[other]);
    if (out.size() <= k) out.resize(k + 1);
    if (out[k].size() <= j) out[k].resize(j + 1);
    out[k][j] += c;
  }
  for (auto& p : out) p = poly_trim(std::move(p));
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

Rational poly_eval(const UniPoly& p, const Rational& t) {
  Rational acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * t + p[k];
  return acc;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational factor = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= factor * m[c][j];
    }
  }
  return det;
}

// Sylvester determinant of a(t) and b(t) with the given formal degrees.
Rational sylvester(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  const std::size_t m = a.size() - 1, n = b.size() - 1, size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = a[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = b[n - k];
  return determinant(std::move(s));
}

// Newton interpolation through (t_i, v_i), t_i = 0, 1, 2, ...
UniPoly interpolate(const std::vector<Rational>& values) {
  const std::size_t n = values.size();
  std::vector<Rational> coef = values;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / Rational(static_cast<long>(j));
  // Expand sum coef[j] prod_{i<j} (t - i).
  UniPoly result;
  UniPoly basis{1};
  for (std::size_t j = 0; j < n; ++j) {
    if (result.size() < basis.size()) result.resize(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) result[k] += coef[j] * basis[k];
    UniPoly next(basis.size() + 1);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      next[k + 1] += basis[k];
      next[k] -= basis[k] * Rational(static_cast<long>(j));
    }
    basis = std::move(next);
  }
  return poly_trim(std::move(result));
}

ComplexL eval_l(const UniPoly& p, ComplexL t) {
  ComplexL acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * t + static_cast<long double>(p[k].get_d());
  return acc;
}

// Roots common to two univariate polynomials, or all roots of one of them
// when the other vanishes identically.
std::vector<Complex> common_roots(const UniPoly& a, const UniPoly& b) {
  UniPoly g = poly_gcd(a, b);
  if (g.size() <= 1) return {};
  return simple_roots(squarefree_part(g));
}

bool is_conjugate(const ComplexPoint3& a, const ComplexPoint3& b, double tol) {
  ComplexPoint3 c{std::conj(b[0]), std::conj(b[1]), std::conj(b[2])};
  return same_point(a, c, tol);
}

void add_point(std::vector<ComplexPoint3>& points, const ComplexPoint3& p, double tol) {
  for (const auto& q : points)
    if (same_point(p, q, tol) || is_conjugate(p, q, tol)) return;
  points.push_back(p);
}

}  // namespace

UniPoly poly_trim(UniPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

UniPoly poly_derivative(const UniPoly& p) {
  UniPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(static_cast<long>(k)));
  return poly_trim(std::move(d));
}

UniPoly poly_remainder(const UniPoly& a, const UniPoly& b) {
  if (b.empty()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  UniPoly r = poly_trim(a);
  while (r.size() >= b.size()) {
    Rational factor = r.back() / b.back();
    std::size_t shift = r.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) r[shift + k] -= factor * b[k];
    r = poly_trim(std::move(r));
  }
  return r;
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    UniPoly r = poly_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

UniPoly squarefree_part(const UniPoly& p) {
  UniPoly q = poly_trim(p);
  if (q.size() <= 1) return q;
  UniPoly g = poly_gcd(q, poly_derivative(q));
  if (g.size() <= 1) return q;
  // Exact division q / g.
  UniPoly quotient(q.size() - g.size() + 1);
  UniPoly r = q;
  while (r.size() >= g.size()) {
    Rational factor = r.back() / g.back();
    std::size_t shift = r.size() - g.size();
    quotient[shift] = factor;
    for (std::size_t k = 0; k < g.size(); ++k) r[shift + k] -= factor * g[k];
    r = poly_trim(std::move(r));
  }
  return poly_trim(std::move(quotient));
}

std::vector<Complex> simple_roots(const UniPoly& p) {
  UniPoly q = poly_trim(p);
  if (q.empty()) throw Error(ErrorCode::InvalidArgument, "roots of the zero polynomial");
  const std::size_t deg = q.size() - 1;
  if (deg == 0) return {};
  std::vector<Complex> roots;
  if (deg == 1) {
    roots.emplace_back(Rational(-q[0] / q[1]).get_d(), 0.0);
    return roots;
  }
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(deg), static_cast<Eigen::Index>(deg));
  for (std::size_t i = 1; i < deg; ++i) companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < deg; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(deg - 1)) = -Rational(q[i] / q[deg]).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  UniPoly dq = poly_derivative(q);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    ComplexL t(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    for (int step = 0; step < 8; ++step) {
      ComplexL d = eval_l(dq, t);
      if (d == ComplexL(0)) break;
      t -= eval_l(q, t) / d;
    }
    roots.emplace_back(static_cast<double>(t.real()), static_cast<double>(t.imag()));
  }
  return roots;
}

UniPoly affine_resultant(const Form& f, const Form& g, int var) {
  if (var != 0 && var != 1) throw Error(ErrorCode::InvalidArgument, "resultant variable must be x or y");
  auto a = split_by(f, var), b = split_by(g, var);
  if (a.empty() || b.empty()) return {};
  if (a.size() == 1 && b.size() == 1) return poly_gcd(a[0], b[0]);
  // deg of the resultant is at most deg f * deg g.
  const long samples = static_cast<long>(f.degree()) * g.degree() + 2;
  std::vector<Rational> values;
  for (long t = 0; t < samples; ++t) {
    std::vector<Rational> av, bv;
    for (const auto& c : a) av.push_back(poly_eval(c, Rational(t)));
    for (const auto& c : b) bv.push_back(poly_eval(c, Rational(t)));
    values.push_back(sylvester(av, bv));
  }
  return interpolate(values);
}

double relative_residual(const Form& f, const ComplexPoint3& p) {
  double size = std::max({std::abs(p[0]), std::abs(p[1]), std::abs(p[2])});
  double scale = f.coefficient_l1() * std::pow(size, f.degree());
  if (scale == 0) return 0;
  return std::abs(f.evaluate(p)) / scale;
}

ComplexPoint3 normalize_point(const ComplexPoint3& p) {
  for (int k : {2, 1, 0}) {
    if (std::abs(p[static_cast<std::size_t>(k)]) > 0) {
      Complex s = p[static_cast<std::size_t>(k)];
      ComplexPoint3 q{p[0] / s, p[1] / s, p[2] / s};
      q[static_cast<std::size_t>(k)] = 1.0;
      return q;
    }
  }
  return p;
}

bool same_point(const ComplexPoint3& a, const ComplexPoint3& b, double tol) {
  // Cross products of homogeneous coordinates vanish for equal points.
  double na = std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2])});
  double nb = std::max({std::abs(b[0]), std::abs(b[1]), std::abs(b[2])});
  if (na == 0 || nb == 0) return na == nb;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (std::abs(a[i] * b[j] - a[j] * b[i]) > tol * na * nb * 4) return false;
  return true;
}

ComplexPoint3 to_complex(const Point3& p) { return {p[0].get_d(), p[1].get_d(), p[2].get_d()}; }

CurveIntersection intersect_curves(const Form& f, const Form& g, double tol) {
  CurveIntersection out;
  if (f.is_zero() || g.is_zero() || f.proportional_to(g)) {
    out.shared_component = true;
    return out;
  }
  // Finite points: x from Res_y, y from Res_x, pairs filtered by residual.
  UniPoly rx = affine_resultant(f, g, 1);
  UniPoly ry = affine_resultant(f, g, 0);
  if (rx.empty() || ry.empty()) {
    out.shared_component = true;
  } else {
    auto xs = simple_roots(squarefree_part(rx));
    auto ys = simple_roots(squarefree_part(ry));
    for (Complex x : xs)
      for (Complex y : ys) {
        ComplexPoint3 p{x, y, 1.0};
        if (relative_residual(f, p) <= tol && relative_residual(g, p) <= tol) add_point(out.points, p, tol);
      }
  }

  // Points at infinity: common roots of F(x, 1, 0) and G(x, 1, 0), and [1:0:0].
  auto at_infinity = [](const Form& h) {
    UniPoly p;
    for (const auto& [e, c] : h.terms()) {
      if (e[2] != 0) continue;
      if (p.size() <= static_cast<std::size_t>(e[0])) p.resize(static_cast<std::size_t>(e[0]) + 1);
      p[static_cast<std::size_t>(e[0])] += c;
    }
    return poly_trim(std::move(p));
  };
  auto x_power_coefficient = [](const Form& h) { return h.coefficient({h.degree(), 0, 0}); };
  UniPoly fi = at_infinity(f), gi = at_infinity(g);
  if (fi.empty() && gi.empty()) {
    out.shared_component = true;  // both contain the line z = 0
  } else {
    for (Complex x : common_roots(fi, gi)) add_point(out.points, {x, 1.0, 0.0}, tol);
    if (x_power_coefficient(f) == 0 && x_power_coefficient(g) == 0) add_point(out.points, {1.0, 0.0, 0.0}, tol);
  }
  return out;
}

}  // namespace sas
