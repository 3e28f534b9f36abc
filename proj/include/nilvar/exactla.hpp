#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace nilvar {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  RationalMatrix transpose() const;

  friend RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs);
  friend RationalMatrix operator+(const RationalMatrix& lhs, const RationalMatrix& rhs);
  friend RationalMatrix operator-(const RationalMatrix& lhs, const RationalMatrix& rhs);
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& m);
  bool operator==(const RationalMatrix& other) const;

  /// Rows joined by newlines, entries in p/q form; for diagnostics.
  std::string to_string() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix hstack(const RationalMatrix& lhs, const RationalMatrix& rhs);
RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom);
RationalMatrix block_diag(const std::vector<RationalMatrix>& blocks);
/// m^k for square m, with m^0 the identity.
RationalMatrix power(const RationalMatrix& m, int k);

int rank(const RationalMatrix& m);

/// Basis of {v : m v = 0}. Each free column f contributes the vector with
/// v_f = 1 and zeros on the other free columns.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Whether a X = b has a solution for every column of b at once.
bool solve_consistent(const RationalMatrix& a, const RationalMatrix& b);

/// One solution of a x = b, or nullopt.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);

/// Canonical "p/q" spelling used in serialized matrices, e.g. "0/1", "-3/2".
std::string to_fraction_string(const Rational& q);
/// Accepts "p/q" or "p"; throws std::invalid_argument otherwise or if q = 0.
Rational parse_rational(const std::string& text);

} // namespace nilvar
