#pragma once

#include <cstddef>
#include <vector>

#include "sas/elimination.hpp"
#include "sas/rational.hpp"

namespace sas {

// Dense matrix over Q, row-major.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  // All rows must have the same length.
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntegerSystem to_system() const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(const RatMatrix& m);
// Basis of the right kernel: one vector per non-pivot column, with a 1 in
// that column and zeros in the other non-pivot columns.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

// Textbook Gaussian elimination with rational pivots. Slow; kept as a
// reference implementation for testing the integer engine.
std::size_t rank_naive(const RatMatrix& m);

enum class RankMethod {
  Exact,    // fraction-free elimination over Z
  Modular,  // rank modulo several word-size primes
  Auto,     // Exact below a size threshold, Modular above it
};

// Systems with at most this many columns are ranked exactly under Auto.
inline constexpr std::size_t kAutoExactColumnLimit = 40000;

std::size_t system_rank(IntegerSystem system, RankMethod method);

}  // namespace sas
