#include "sas/elimination.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace sas {

namespace {

SparseRow normalize_entries(std::vector<std::pair<std::uint32_t, Integer>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow row;
  for (std::size_t i = 0; i < entries.size();) {
    std::uint32_t col = entries[i].first;
    Integer sum = entries[i].second;
    std::size_t j = i + 1;
    for (; j < entries.size() && entries[j].first == col; ++j) sum += entries[j].second;
    if (sum != 0) {
      row.cols.push_back(col);
      row.vals.push_back(std::move(sum));
    }
    i = j;
  }
  return row;
}

// Divide out the content and make the leading coefficient positive.
void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  Integer g = abs(row.vals.front());
  for (std::size_t i = 1; i < row.vals.size() && g != 1; ++i)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row.vals[i].get_mpz_t());
  if (row.vals.front() < 0) g = -g;
  if (g == 1) return;
  for (auto& v : row.vals) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// target <- alpha * target - beta * pivot, where both rows share the leading
// column and alpha * target_lead == beta * pivot_lead.
void reduce_row(SparseRow& target, const SparseRow& pivot, const Integer& alpha, const Integer& beta) {
  SparseRow out;
  out.cols.reserve(target.size() + pivot.size());
  out.vals.reserve(target.size() + pivot.size());
  const bool unit_alpha = alpha == 1;
  std::size_t i = 0, j = 0;
  Integer tmp;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < target.size() && target.cols[i] < pivot.cols[j])) {
      out.cols.push_back(target.cols[i]);
      if (unit_alpha) out.vals.push_back(std::move(target.vals[i]));
      else out.vals.emplace_back(alpha * target.vals[i]);
      ++i;
    } else if (i == target.size() || pivot.cols[j] < target.cols[i]) {
      out.cols.push_back(pivot.cols[j]);
      out.vals.emplace_back(-beta * pivot.vals[j]);
      ++j;
    } else {
      if (unit_alpha) tmp = target.vals[i];
      else mpz_mul(tmp.get_mpz_t(), alpha.get_mpz_t(), target.vals[i].get_mpz_t());
      mpz_submul(tmp.get_mpz_t(), beta.get_mpz_t(), pivot.vals[j].get_mpz_t());
      if (tmp != 0) {
        out.cols.push_back(target.cols[i]);
        out.vals.push_back(tmp);
      }
      ++i;
      ++j;
    }
  }
  target = std::move(out);
}

// Reduce `target` at column `col` (where pivot has its leading entry).
void eliminate_with(SparseRow& target, std::size_t pos, const SparseRow& pivot) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), pivot.vals.front().get_mpz_t(), target.vals[pos].get_mpz_t());
  Integer alpha, beta;
  mpz_divexact(alpha.get_mpz_t(), pivot.vals.front().get_mpz_t(), g.get_mpz_t());
  mpz_divexact(beta.get_mpz_t(), target.vals[pos].get_mpz_t(), g.get_mpz_t());
  if (pos == 0) {
    reduce_row(target, pivot, alpha, beta);
    return;
  }
  // General position: combine without assuming a shared leading column.
  SparseRow out;
  std::size_t i = 0, j = 0;
  Integer tmp;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < target.size() && target.cols[i] < pivot.cols[j])) {
      out.cols.push_back(target.cols[i]);
      out.vals.emplace_back(alpha * target.vals[i]);
      ++i;
    } else if (i == target.size() || pivot.cols[j] < target.cols[i]) {
      out.cols.push_back(pivot.cols[j]);
      out.vals.emplace_back(-beta * pivot.vals[j]);
      ++j;
    } else {
      mpz_mul(tmp.get_mpz_t(), alpha.get_mpz_t(), target.vals[i].get_mpz_t());
      mpz_submul(tmp.get_mpz_t(), beta.get_mpz_t(), pivot.vals[j].get_mpz_t());
      if (tmp != 0) {
        out.cols.push_back(target.cols[i]);
        out.vals.push_back(tmp);
      }
      ++i;
      ++j;
    }
  }
  target = std::move(out);
}

std::size_t bit_size(const Integer& z) { return mpz_sizeinbase(z.get_mpz_t(), 2); }

}  // namespace

void IntegerSystem::add_row(std::vector<std::pair<std::uint32_t, Rational>> entries) {
  Integer den = 1;
  for (const auto& [c, q] : entries) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<std::pair<std::uint32_t, Integer>> ints;
  ints.reserve(entries.size());
  for (const auto& [c, q] : entries) {
    Integer v;
    mpz_divexact(v.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    v *= q.get_num();
    ints.emplace_back(c, std::move(v));
  }
  add_row(std::move(ints));
}

void IntegerSystem::add_row(std::vector<std::pair<std::uint32_t, Integer>> entries) {
  rows_.push_back(normalize_entries(std::move(entries)));
}

Echelon row_echelon(IntegerSystem system) {
  Echelon out;
  out.cols = system.cols();
  std::vector<SparseRow> rows = std::move(system).take_rows();
  // Rows waiting to be processed, bucketed by leading column.
  std::map<std::uint32_t, std::vector<SparseRow>> buckets;
  for (auto& row : rows) {
    if (row.empty()) continue;
    make_primitive(row);
    buckets[row.cols.front()].push_back(std::move(row));
  }
  while (!buckets.empty()) {
    auto node = buckets.extract(buckets.begin());
    std::uint32_t col = node.key();
    std::vector<SparseRow>& candidates = node.mapped();
    auto best = std::min_element(candidates.begin(), candidates.end(), [](const SparseRow& a, const SparseRow& b) {
      auto ka = std::make_pair(bit_size(a.vals.front()), a.size());
      auto kb = std::make_pair(bit_size(b.vals.front()), b.size());
      return ka < kb;
    });
    std::iter_swap(candidates.begin(), best);
    SparseRow pivot = std::move(candidates.front());
    for (std::size_t k = 1; k < candidates.size(); ++k) {
      SparseRow& row = candidates[k];
      eliminate_with(row, 0, pivot);
      if (row.empty()) continue;
      make_primitive(row);
      buckets[row.cols.front()].push_back(std::move(row));
    }
    out.pivots.push_back(col);
    out.rows.push_back(std::move(pivot));
  }
  return out;
}

std::vector<std::vector<Rational>> kernel_from_echelon(Echelon echelon) {
  const std::size_t n = echelon.cols;
  const std::size_t rank = echelon.rank();
  std::vector<long> pivot_row(n, -1);
  for (std::size_t k = 0; k < rank; ++k) pivot_row[echelon.pivots[k]] = static_cast<long>(k);

  // Back substitution: clear every non-leading pivot-column entry.
  for (std::size_t k = rank; k-- > 0;) {
    SparseRow& row = echelon.rows[k];
    std::vector<std::uint32_t> hits;
    for (std::size_t i = 1; i < row.size(); ++i)
      if (pivot_row[row.cols[i]] >= 0) hits.push_back(row.cols[i]);
    for (std::uint32_t c : hits) {
      auto pos = static_cast<std::size_t>(
          std::lower_bound(row.cols.begin(), row.cols.end(), c) - row.cols.begin());
      eliminate_with(row, pos, echelon.rows[static_cast<std::size_t>(pivot_row[c])]);
    }
    make_primitive(row);
  }

  std::vector<std::uint32_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (pivot_row[c] < 0) free_cols.push_back(static_cast<std::uint32_t>(c));
  std::vector<long> free_index(n, -1);
  for (std::size_t i = 0; i < free_cols.size(); ++i) free_index[free_cols[i]] = static_cast<long>(i);

  std::vector<std::vector<Rational>> kernel(free_cols.size(), std::vector<Rational>(n));
  for (std::size_t i = 0; i < free_cols.size(); ++i) kernel[i][free_cols[i]] = 1;
  for (std::size_t k = 0; k < rank; ++k) {
    const SparseRow& row = echelon.rows[k];
    const Integer& lead = row.vals.front();
    for (std::size_t i = 1; i < row.size(); ++i) {
      long f = free_index[row.cols[i]];
      Rational v(-row.vals[i], lead);
      v.canonicalize();
      kernel[static_cast<std::size_t>(f)][echelon.pivots[k]] = v;
    }
  }
  return kernel;
}

std::size_t rank_exact(IntegerSystem system) { return row_echelon(std::move(system)).rank(); }

namespace {

struct ModRow {
  std::vector<std::uint32_t> cols;
  std::vector<std::uint32_t> vals;
};

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

std::size_t rank_mod_p(const IntegerSystem& system, std::uint32_t prime) {
  const std::uint64_t p = prime;
  std::map<std::uint32_t, std::vector<ModRow>> buckets;
  for (const auto& row : system.row_data()) {
    ModRow m;
    for (std::size_t i = 0; i < row.size(); ++i) {
      auto v = static_cast<std::uint32_t>(mpz_fdiv_ui(row.vals[i].get_mpz_t(), prime));
      if (v == 0) continue;
      m.cols.push_back(row.cols[i]);
      m.vals.push_back(v);
    }
    if (!m.cols.empty()) buckets[m.cols.front()].push_back(std::move(m));
  }
  std::size_t rank = 0;
  ModRow out;
  while (!buckets.empty()) {
    auto node = buckets.extract(buckets.begin());
    std::vector<ModRow>& candidates = node.mapped();
    auto best = std::min_element(candidates.begin(), candidates.end(),
                                 [](const ModRow& a, const ModRow& b) { return a.cols.size() < b.cols.size(); });
    std::iter_swap(candidates.begin(), best);
    ModRow& pivot = candidates.front();
    std::uint64_t inv = mod_pow(pivot.vals.front(), p - 2, prime);
    for (auto& v : pivot.vals) v = static_cast<std::uint32_t>(v * inv % p);
    for (std::size_t k = 1; k < candidates.size(); ++k) {
      ModRow& row = candidates[k];
      std::uint64_t factor = p - row.vals.front();  // row - lead * pivot
      out.cols.clear();
      out.vals.clear();
      std::size_t i = 1, j = 1;
      while (i < row.cols.size() || j < pivot.cols.size()) {
        if (j == pivot.cols.size() || (i < row.cols.size() && row.cols[i] < pivot.cols[j])) {
          out.cols.push_back(row.cols[i]);
          out.vals.push_back(row.vals[i]);
          ++i;
        } else if (i == row.cols.size() || pivot.cols[j] < row.cols[i]) {
          out.cols.push_back(pivot.cols[j]);
          out.vals.push_back(static_cast<std::uint32_t>(factor * pivot.vals[j] % p));
          ++j;
        } else {
          auto v = static_cast<std::uint32_t>((row.vals[i] + factor * pivot.vals[j]) % p);
          if (v != 0) {
            out.cols.push_back(row.cols[i]);
            out.vals.push_back(v);
          }
          ++i;
          ++j;
        }
      }
      if (out.cols.empty()) continue;
      std::swap(row, out);
      buckets[row.cols.front()].push_back(std::move(row));
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_multi_modular(const IntegerSystem& system, std::span<const std::uint32_t> primes) {
  std::size_t best = 0;
  for (std::uint32_t p : primes) best = std::max(best, rank_mod_p(system, p));
  return best;
}

std::span<const std::uint32_t> default_primes() {
  static constexpr std::array<std::uint32_t, 3> kPrimes{2147483629U, 2147483587U, 2147483579U};
  return kPrimes;
}

}  // namespace sas
