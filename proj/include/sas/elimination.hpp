#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sas/rational.hpp"

namespace sas {

// Row of an integer matrix: strictly increasing column indices, nonzero values.
struct SparseRow {
  std::vector<std::uint32_t> cols;
  std::vector<Integer> vals;

  bool empty() const { return cols.empty(); }
  std::size_t size() const { return cols.size(); }
};

// Integer matrix assembled row by row. Rational rows are scaled by the lcm of
// their denominators, which changes neither rank nor kernel.
class IntegerSystem {
public:
  explicit IntegerSystem(std::size_t cols) : cols_(cols) {}

  // Entries may be unsorted and repeat a column (values are summed).
  void add_row(std::vector<std::pair<std::uint32_t, Rational>> entries);
  void add_row(std::vector<std::pair<std::uint32_t, Integer>> entries);

  std::size_t cols() const { return cols_; }
  std::size_t rows() const { return rows_.size(); }
  const std::vector<SparseRow>& row_data() const { return rows_; }
  std::vector<SparseRow> take_rows() && { return std::move(rows_); }

private:
  std::size_t cols_;
  std::vector<SparseRow> rows_;
};

// Row echelon form whose pivots are the leftmost possible columns, i.e. the
// pivot columns of the reduced row echelon form over Q.
struct Echelon {
  std::size_t cols = 0;
  std::vector<SparseRow> rows;         // rows[k] has leading column pivots[k]
  std::vector<std::uint32_t> pivots;   // strictly increasing

  std::size_t rank() const { return pivots.size(); }
};

// Fraction-free elimination over Z with integer pivots: a row r is reduced by
// the pivot row p as r <- (p_lead/g) r - (r_lead/g) p, g = gcd of the leads,
// and every row is kept primitive (content divided out). Exact.
Echelon row_echelon(IntegerSystem system);

// Back-substitutes to reduced form and returns one kernel vector per free
// column f: v[f] = 1, v[f'] = 0 for the other free columns. Vectors are
// ordered by increasing free column.
std::vector<std::vector<Rational>> kernel_from_echelon(Echelon echelon);

std::size_t rank_exact(IntegerSystem system);

// Rank over Z/pZ for a prime p < 2^31. Never exceeds the rank over Q.
std::size_t rank_mod_p(const IntegerSystem& system, std::uint32_t prime);

// Largest rank over the given primes (a lower bound on the rank over Q that
// coincides with it unless every prime divides the same nonzero minor).
std::size_t rank_multi_modular(const IntegerSystem& system, std::span<const std::uint32_t> primes);

// Fixed primes used by rank_multi_modular's callers.
std::span<const std::uint32_t> default_primes();

}  // namespace sas
