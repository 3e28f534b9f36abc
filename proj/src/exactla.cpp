#include "nilvar/exactla.hpp"

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace nilvar {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& v : data_)
    if (sgn(v) != 0) return false;
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  RationalMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Rational& v = lhs(i, k);
      if (sgn(v) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (sgn(rhs(k, j)) != 0) out(i, j) += v * rhs(k, j);
    }
  return out;
}

RationalMatrix operator+(const RationalMatrix& lhs, const RationalMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_)
    throw std::invalid_argument("matrix sum: shape mismatch");
  RationalMatrix out(lhs.rows_, lhs.cols_);
  for (std::size_t i = 0; i < lhs.data_.size(); ++i) out.data_[i] = lhs.data_[i] + rhs.data_[i];
  return out;
}

RationalMatrix operator-(const RationalMatrix& lhs, const RationalMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_)
    throw std::invalid_argument("matrix difference: shape mismatch");
  RationalMatrix out(lhs.rows_, lhs.cols_);
  for (std::size_t i = 0; i < lhs.data_.size(); ++i) out.data_[i] = lhs.data_[i] - rhs.data_[i];
  return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& m) {
  RationalMatrix out(m.rows_, m.cols_);
  for (std::size_t i = 0; i < m.data_.size(); ++i) out.data_[i] = s * m.data_[i];
  return out;
}

bool RationalMatrix::operator==(const RationalMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string RationalMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) out += ' ';
      out += to_fraction_string((*this)(r, c));
    }
    out += '\n';
  }
  return out;
}

RationalMatrix hstack(const RationalMatrix& lhs, const RationalMatrix& rhs) {
  if (lhs.rows() != rhs.rows()) throw std::invalid_argument("hstack: row count mismatch");
  RationalMatrix out(lhs.rows(), lhs.cols() + rhs.cols());
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t c = 0; c < lhs.cols(); ++c) out(r, c) = lhs(r, c);
    for (std::size_t c = 0; c < rhs.cols(); ++c) out(r, lhs.cols() + c) = rhs(r, c);
  }
  return out;
}

RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack: column count mismatch");
  RationalMatrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
  return out;
}

RationalMatrix block_diag(const std::vector<RationalMatrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) rows += b.rows(), cols += b.cols();
  RationalMatrix out(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

RationalMatrix power(const RationalMatrix& m, int k) {
  if (m.rows() != m.cols()) throw std::invalid_argument("power: matrix is not square");
  if (k < 0) throw std::invalid_argument("power: negative exponent");
  RationalMatrix out = RationalMatrix::identity(m.rows());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

namespace {

// Elimination runs on integer rows. The int64 version throws Overflow on any
// wrapped operation and the caller restarts with mpz_class.
struct Overflow {};

std::int64_t combine(std::int64_t u, std::int64_t p, std::int64_t v, std::int64_t q) {
  std::int64_t up, vq, out;
  if (__builtin_mul_overflow(u, p, &up) || __builtin_mul_overflow(v, q, &vq) ||
      __builtin_sub_overflow(up, vq, &out))
    throw Overflow{};
  return out;
}

mpz_class combine(const mpz_class& u, const mpz_class& p, const mpz_class& v,
                  const mpz_class& q) {
  mpz_class out;
  mpz_mul(out.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t());
  mpz_submul(out.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
  return out;
}

std::int64_t gcd_of(std::int64_t g, std::int64_t v) {
  if (v == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return std::gcd(g, v);
}
mpz_class gcd_of(const mpz_class& g, const mpz_class& v) { return gcd(g, v); }

bool is_zero_int(std::int64_t v) { return v == 0; }
bool is_zero_int(const mpz_class& v) { return sgn(v) == 0; }

std::int64_t to_int(const mpz_class& v, std::int64_t*) {
  if (!v.fits_slong_p()) throw Overflow{};
  return v.get_si();
}
mpz_class to_int(const mpz_class& v, mpz_class*) { return v; }

Rational to_rational(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), v);
  return Rational(z);
}
Rational to_rational(const mpz_class& v) { return Rational(v); }

/// Integer rows scaled from a rational matrix, one row per matrix row.
std::vector<std::vector<mpz_class>> integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) l = lcm(l, m(r, c).get_den());
    for (std::size_t c = 0; c < m.cols(); ++c)
      rows[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  return rows;
}

template <class T>
struct Reduced {
  std::vector<std::vector<T>> rows;
  std::vector<std::size_t> pivots; // pivot column of row i
};

/// Gauss-Jordan elimination restricted to the first pivot_cols columns. Rows
/// are kept primitive by dividing out their content after each update.
template <class T>
Reduced<T> reduce(const std::vector<std::vector<mpz_class>>& input, std::size_t pivot_cols) {
  Reduced<T> out;
  auto& rows = out.rows;
  rows.reserve(input.size());
  for (const auto& src : input) {
    std::vector<T> row;
    row.reserve(src.size());
    for (const auto& v : src) row.push_back(to_int(v, static_cast<T*>(nullptr)));
    rows.push_back(std::move(row));
  }
  std::size_t next = 0;
  for (std::size_t c = 0; c < pivot_cols && next < rows.size(); ++c) {
    std::size_t piv = next;
    while (piv < rows.size() && is_zero_int(rows[piv][c])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[next]);
    const auto& prow = rows[next];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == next || is_zero_int(rows[i][c])) continue;
      auto& row = rows[i];
      const T pq = gcd_of(gcd_of(T(0), prow[c]), row[c]);
      const T p = prow[c] / pq, q = row[c] / pq;
      T g = 0;
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (!is_zero_int(prow[k]) || !is_zero_int(row[k])) row[k] = combine(row[k], p, prow[k], q);
        if (!is_zero_int(row[k])) g = gcd_of(g, row[k]);
      }
      if (!is_zero_int(g) && g != T(1))
        for (auto& v : row)
          if (!is_zero_int(v)) v /= g;
    }
    out.pivots.push_back(c);
    ++next;
  }
  return out;
}

struct RationalReduced {
  std::vector<RationalVector> rows;
  std::vector<std::size_t> pivots;
};

template <class T>
RationalReduced to_rational(const Reduced<T>& red) {
  RationalReduced out;
  out.pivots = red.pivots;
  for (const auto& row : red.rows) {
    RationalVector r;
    r.reserve(row.size());
    for (const auto& v : row) r.push_back(to_rational(v));
    out.rows.push_back(std::move(r));
  }
  return out;
}

RationalReduced reduce_matrix(const RationalMatrix& m, std::size_t pivot_cols) {
  const auto ints = integer_rows(m);
  try {
    return to_rational(reduce<std::int64_t>(ints, pivot_cols));
  } catch (const Overflow&) {
    return to_rational(reduce<mpz_class>(ints, pivot_cols));
  }
}

} // namespace

int rank(const RationalMatrix& m) {
  return static_cast<int>(reduce_matrix(m, m.cols()).pivots.size());
}

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  const auto red = reduce_matrix(m, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < red.pivots.size(); ++k) {
      const auto pc = red.pivots[k];
      if (sgn(red.rows[k][f]) != 0) v[pc] = -red.rows[k][f] / red.rows[k][pc];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool solve_consistent(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_consistent: row count mismatch");
  const auto red = reduce_matrix(hstack(a, b), a.cols());
  for (std::size_t r = red.pivots.size(); r < red.rows.size(); ++r)
    for (std::size_t c = a.cols(); c < a.cols() + b.cols(); ++c)
      if (sgn(red.rows[r][c]) != 0) return false;
  return true;
}

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: row count mismatch");
  RationalMatrix col(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) col(i, 0) = b[i];
  const auto red = reduce_matrix(hstack(a, col), a.cols());
  for (std::size_t r = red.pivots.size(); r < red.rows.size(); ++r)
    if (sgn(red.rows[r][a.cols()]) != 0) return std::nullopt;
  RationalVector x(a.cols());
  for (std::size_t k = 0; k < red.pivots.size(); ++k) {
    const auto pc = red.pivots[k];
    x[pc] = red.rows[k][a.cols()] / red.rows[k][pc];
  }
  return x;
}

std::string to_fraction_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& part) {
    mpz_class z;
    const bool digits_ok = !part.empty() &&
                           part.find_first_not_of("0123456789", part[0] == '-' ? 1 : 0) ==
                               std::string::npos &&
                           part != "-";
    if (!digits_ok || z.set_str(part, 10) != 0)
      throw std::invalid_argument("not a rational: '" + text + "'");
    return z;
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  const mpz_class num = parse_int(text.substr(0, slash));
  const mpz_class den = parse_int(text.substr(slash + 1));
  if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

} // namespace nilvar
