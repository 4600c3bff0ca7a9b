#include "sas/hilbert.hpp"

#include <algorithm>

#include "sas/error.hpp"

namespace sas {

namespace {

void append_term(std::string& out, const Rational& coeff, const std::string& monomial) {
  if (coeff == 0) return;
  Rational mag = abs(coeff);
  if (out.empty()) out += coeff < 0 ? "-" : "";
  else out += coeff < 0 ? " - " : " + ";
  if (monomial.empty()) out += sas::to_string(mag);
  else if (mag == 1) out += monomial;
  else out += sas::to_string(mag) + "*" + monomial;
}

}  // namespace

std::string Quadratic::to_string() const {
  std::string out;
  append_term(out, a, "d^2");
  append_term(out, b, "d");
  append_term(out, c, "");
  return out.empty() ? "0" : out;
}

Quadratic fit_hp(const DegreeValues& values, std::size_t window) {
  if (window < 3) throw Error(ErrorCode::InvalidArgument, "stabilization window must be at least 3");
  const std::size_t n = values.size();
  if (n < window + 3)
    throw Error(ErrorCode::NotStabilized, "need at least " + std::to_string(window + 3) + " values, have " +
                                              std::to_string(n) + "; raise the degree cap");
  for (std::size_t i = n - window - 1; i + 3 < n; ++i) {
    long third = values[i + 3] - 3 * values[i + 2] + 3 * values[i + 1] - values[i];
    if (third != 0)
      throw Error(ErrorCode::NotStabilized, "third difference " + std::to_string(third) + " at degree " +
                                                std::to_string(i + 3) + "; raise the degree cap");
  }
  // Newton form through (d0, y0), (d0+1, y1), (d0+2, y2).
  const long d0 = static_cast<long>(n) - 3;
  Rational y0 = values[n - 3], y1 = values[n - 2], y2 = values[n - 1];
  Rational delta1 = y1 - y0;
  Rational delta2 = (y2 - 2 * y1 + y0) / 2;
  // y0 + delta1 (d - d0) + delta2 (d - d0)(d - d0 - 1)
  Quadratic q;
  q.a = delta2;
  q.b = delta1 - delta2 * (2 * d0 + 1);
  q.c = y0 - delta1 * d0 + delta2 * d0 * (d0 + 1);
  return q;
}

long postulation(const DegreeValues& values, const Quadratic& hp) {
  for (long d = static_cast<long>(values.size()) - 1; d >= 0; --d)
    if (hp(d) != values[static_cast<std::size_t>(d)]) return d;
  return -1;
}

std::vector<Integer> series_numerator(const DegreeValues& values, const Quadratic& hp) {
  const long post = postulation(values, hp);
  const long last = std::max(static_cast<long>(values.size()) - 1, post + 3) + 3;
  std::vector<Integer> extended;
  for (long d = 0; d <= last; ++d) {
    if (d < static_cast<long>(values.size())) {
      extended.emplace_back(values[static_cast<std::size_t>(d)]);
    } else {
      Rational v = hp(d);
      if (v.get_den() != 1) throw Error(ErrorCode::NotStabilized, "Hilbert polynomial is not integer valued");
      extended.push_back(v.get_num());
    }
  }
  auto at = [&](long d) { return d < 0 ? Integer(0) : extended[static_cast<std::size_t>(d)]; };
  std::vector<Integer> p;
  for (long k = 0; k <= last; ++k) p.push_back(at(k) - 3 * at(k - 1) + 3 * at(k - 2) - at(k - 3));
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (static_cast<long>(p.size()) - 1 > post + 3)
    throw Error(ErrorCode::NotStabilized, "series numerator does not terminate by degree " + std::to_string(post + 3));
  return p;
}

DegreeValues expand_series(const std::vector<Integer>& numerator, std::size_t count) {
  // 1 / (1 - t)^3 = sum binom(k + 2, 2) t^k
  DegreeValues out(count, 0);
  for (std::size_t d = 0; d < count; ++d) {
    Integer sum = 0;
    for (std::size_t k = 0; k < numerator.size() && k <= d; ++k) sum += numerator[k] * forms_dim(static_cast<long>(d - k));
    out[d] = sum.get_si();
  }
  return out;
}

HilbertData analyze(const DegreeValues& values, std::size_t window) {
  HilbertData h;
  h.values = values;
  h.hp = fit_hp(values, window);
  h.postulation = postulation(values, h.hp);
  h.numerator = series_numerator(values, h.hp);
  return h;
}

std::string polynomial_text(const std::vector<Integer>& coefficients, const std::string& var) {
  std::string out;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    std::string mono = k == 0 ? "" : k == 1 ? var : var + "^" + std::to_string(k);
    append_term(out, Rational(coefficients[k]), mono);
  }
  return out.empty() ? "0" : out;
}

}  // namespace sas
