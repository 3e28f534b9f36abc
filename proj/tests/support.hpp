#pragma once

#include "nilvar/exactla.hpp"
#include "nilvar/modmatrix.hpp"
#include "nilvar/partitions.hpp"
#include "nilvar/words.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace nilvar;

// Draws in [lo, hi] from raw engine output.
inline int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Textbook Gaussian elimination over Q, no fraction-free tricks.
inline int naive_rank(RationalMatrix m) {
  int r = 0;
  for (std::size_t c = 0; c < m.cols() && r < static_cast<int>(m.rows()); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(piv, k), m(r, k));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == static_cast<std::size_t>(r) || m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    ++r;
  }
  return r;
}

inline RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                    int spread = 3, int zero_bias = 2) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (draw(rng, 0, zero_bias) == 0)
        m(i, j) = Rational(draw(rng, -spread, spread), draw(rng, 1, spread));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j).canonicalize();
  return m;
}

// Low-rank matrices come from products of thin factors.
inline RationalMatrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  const std::size_t inner = static_cast<std::size_t>(draw(rng, 1, 3));
  return random_matrix(rng, rows, inner, 3, 1) * random_matrix(rng, inner, cols, 3, 1);
}

// p(n) by the standard recurrence on the largest part.
inline long partition_count(int n, int max_part) {
  if (n == 0) return 1;
  if (max_part == 0) return 0;
  long total = 0;
  for (int k = std::min(n, max_part); k >= 1; --k) total += partition_count(n - k, k);
  return total;
}

inline Partition random_partition(std::mt19937_64& rng, int n, int max_part) {
  std::vector<int> parts;
  while (n > 0) {
    const int k = draw(rng, 1, std::min(n, max_part));
    parts.push_back(k);
    n -= k;
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

// Dual partition by counting boxes column by column.
inline Partition column_lengths(const Partition& p) {
  std::vector<int> cols;
  for (int c = 1; p.length() > 0 && c <= p[0]; ++c) {
    int len = 0;
    for (int part : p.parts()) len += part >= c ? 1 : 0;
    cols.push_back(len);
  }
  return Partition(cols);
}

inline Word random_string(std::mt19937_64& rng, AlgebraParams params, int max_len) {
  for (;;) {
    const int len = draw(rng, 0, max_len);
    std::string s;
    for (int i = 0; i < len; ++i) s.push_back(draw(rng, 0, 1) ? 'x' : 'y');
    if (is_valid_string(s, params)) return Word(s, params);
  }
}

// Jordan type of a nilpotent matrix by its kernel filtration, computed with
// the naive rank: the number of blocks of size >= k is rk N^{k-1} - rk N^k.
inline Partition jordan_by_kernels(const RationalMatrix& n) {
  std::vector<int> ranks{static_cast<int>(n.rows())};
  RationalMatrix p = RationalMatrix::identity(n.rows());
  while (ranks.back() > 0) {
    p = p * n;
    ranks.push_back(naive_rank(p));
  }
  std::vector<int> parts;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    const int at_least_k = ranks[k - 1] - ranks[k];
    const int at_least_next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (int c = 0; c < at_least_k - at_least_next; ++c) parts.push_back(static_cast<int>(k));
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

} // namespace testing
