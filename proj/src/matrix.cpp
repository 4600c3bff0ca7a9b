#include "sas/matrix.hpp"

#include <utility>

#include "sas/error.hpp"

namespace sas {

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntegerSystem RatMatrix::to_system() const {
  IntegerSystem system(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::vector<std::pair<std::uint32_t, Rational>> entries;
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) entries.emplace_back(static_cast<std::uint32_t>(j), (*this)(i, j));
    system.add_row(std::move(entries));
  }
  return system;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::InvalidArgument, "vector length does not match matrix");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

std::size_t rank(const RatMatrix& m) { return rank_exact(m.to_system()); }

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
  return kernel_from_echelon(row_echelon(m.to_system()));
}

std::size_t rank_naive(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(rank, j));
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational factor = a(i, c) / a(rank, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= factor * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::size_t system_rank(IntegerSystem system, RankMethod method) {
  if (method == RankMethod::Auto)
    method = system.cols() <= kAutoExactColumnLimit ? RankMethod::Exact : RankMethod::Modular;
  if (method == RankMethod::Exact) return rank_exact(std::move(system));
  return rank_multi_modular(system, default_primes());
}

}  // namespace sas
