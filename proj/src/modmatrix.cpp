#include "nilvar/modmatrix.hpp"

#include <stdexcept>

namespace nilvar {

MatrixPairModule string_module(const Word& c) {
  const std::size_t n = c.size() + 1;
  MatrixPairModule m{c.params(), RationalMatrix(n, n), RationalMatrix(n, n)};
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 'x') m.A(i, i + 1) = 1;
    else m.B(i + 1, i) = 1;
  }
  return m;
}

MatrixPairModule band_module(const Word& band, const std::vector<Rational>& lambdas) {
  if (band.empty() || band_class(band).kind == BandKind::not_band)
    throw std::invalid_argument("'" + band.letters() + "' is not a band");
  if (lambdas.empty()) throw std::invalid_argument("band_module: no lambda given");
  for (const auto& l : lambdas)
    if (sgn(l) == 0) throw std::invalid_argument("band_module: lambda must be nonzero");

  const std::size_t m = band.size(), k = lambdas.size();
  const std::size_t n = m * k;
  MatrixPairModule out{band.params(), RationalMatrix(n, n), RationalMatrix(n, n)};
  auto idx = [m](std::size_t i, std::size_t j) { return j * m + i; };
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i + 1 < m; ++i) {
      if (band[i] == 'x') out.A(idx(i, j), idx(i + 1, j)) = 1;
      else out.B(idx(i + 1, j), idx(i, j)) = 1;
    }
    if (band[m - 1] == 'x') {
      out.A(idx(m - 1, j), idx(0, j)) = lambdas[j];
      if (j > 0) out.A(idx(m - 1, j - 1), idx(0, j)) = 1;
    } else {
      out.B(idx(0, j), idx(m - 1, j)) = lambdas[j];
      if (j > 0) out.B(idx(0, j - 1), idx(m - 1, j)) = 1;
    }
  }
  return out;
}

MatrixPairModule direct_sum(AlgebraParams params, const std::vector<MatrixPairModule>& mods) {
  std::vector<RationalMatrix> as, bs;
  for (const auto& m : mods) {
    if (!(m.params == params)) throw std::invalid_argument("direct_sum: params mismatch");
    as.push_back(m.A);
    bs.push_back(m.B);
  }
  return {params, block_diag(as), block_diag(bs)};
}

bool verify_relations(const MatrixPairModule& m) {
  const std::size_t n = m.A.rows();
  if (m.A.cols() != n || m.B.rows() != n || m.B.cols() != n) return false;
  return (m.A * m.B).is_zero() && (m.B * m.A).is_zero() && power(m.A, m.params.a).is_zero() &&
         power(m.B, m.params.b).is_zero();
}

Partition jordan_type(const RationalMatrix& nilpotent) {
  const std::size_t n = nilpotent.rows();
  if (nilpotent.cols() != n) throw std::invalid_argument("jordan_type: matrix is not square");
  // blocks of size >= k number rank(N^{k-1}) - rank(N^k)
  std::vector<int> at_least;
  int prev = static_cast<int>(n);
  RationalMatrix pw = RationalMatrix::identity(n);
  while (prev > 0) {
    pw = pw * nilpotent;
    const int r = rank(pw);
    if (r == prev) throw std::invalid_argument("jordan_type: matrix is not nilpotent");
    at_least.push_back(prev - r);
    prev = r;
  }
  return dual(Partition(std::move(at_least)));
}

std::pair<Partition, Partition> jordan_pair(const MatrixPairModule& m) {
  if (!verify_relations(m)) throw std::invalid_argument("jordan_pair: relations fail");
  return {jordan_type(m.A), jordan_type(m.B)};
}

ModuleStats stats(const MatrixPairModule& m) {
  if (!verify_relations(m)) throw std::invalid_argument("stats: relations fail");
  const int n = m.dim();
  ModuleStats s;
  s.rank_a = rank(m.A);
  s.rank_b = rank(m.B);
  s.top_dim = n - rank(hstack(m.A, m.B));
  s.soc_dim = n - rank(vstack(m.A, m.B));
  s.regular = s.rank_a + s.rank_b == n;
  return s;
}

MatrixPairModule dual_point(const MatrixPairModule& m) {
  return {m.params, m.A.transpose(), m.B.transpose()};
}

} // namespace nilvar
