#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sas/rational.hpp"

namespace sas {

// a d^2 + b d + c
struct Quadratic {
  Rational a, b, c;

  Rational operator()(long d) const { return a * d * d + b * d + c; }
  friend bool operator==(const Quadratic&, const Quadratic&) = default;
  std::string to_string() const;  // e.g. "7/2*d^2 - 15/2*d + 7"
};

using DegreeValues = std::vector<long>;

// Quadratic through the last three values. The third finite differences of
// the last window + 1 values must vanish (NotStabilized otherwise), and the
// table needs at least window + 3 entries.
Quadratic fit_hp(const DegreeValues& values, std::size_t window = 4);

// Largest d with values[d] != hp(d); -1 if there is none.
long postulation(const DegreeValues& values, const Quadratic& hp);

// Numerator p(t) of sum_d values[d] t^d = p(t) / (1 - t)^3, with the table
// continued by hp past its end. Throws NotStabilized if the coefficients do
// not vanish beyond postulation + 3.
std::vector<Integer> series_numerator(const DegreeValues& values, const Quadratic& hp);

// First `count` values of p(t) / (1 - t)^3.
DegreeValues expand_series(const std::vector<Integer>& numerator, std::size_t count);

struct HilbertData {
  DegreeValues values;
  Quadratic hp;
  long postulation = -1;
  std::vector<Integer> numerator;
};

HilbertData analyze(const DegreeValues& values, std::size_t window = 4);

std::string polynomial_text(const std::vector<Integer>& coefficients, const std::string& var = "t");

}  // namespace sas
