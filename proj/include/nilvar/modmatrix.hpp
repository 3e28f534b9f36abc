#pragma once

#include "nilvar/exactla.hpp"
#include "nilvar/partitions.hpp"
#include "nilvar/words.hpp"

#include <utility>
#include <vector>

namespace nilvar {

/// A point (A,B) of V(n,a,b). Matrices act on coordinate columns.
struct MatrixPairModule {
  AlgebraParams params;
  RationalMatrix A, B;

  int dim() const { return static_cast<int>(A.rows()); }
  bool operator==(const MatrixPairModule&) const = default;
};

/// M(C) on the basis z_1..z_{|C|+1}: A z_{i+1} = z_i when c_i = x and
/// B z_i = z_{i+1} when c_i = y.
MatrixPairModule string_module(const Word& c);

/// M(B, lambda_1, ..., lambda_k) on the basis z_{ij}, i = 1..|B|, j = 1..k,
/// stored layer by layer (index (j-1)|B| + i-1). Inside a layer the letters
/// b_1..b_{m-1} act as for strings; the closing letter b_m sends z_{1j} to
/// lambda_j z_{mj} + z_{m,j-1} (for x) or z_{mj} to lambda_j z_{1j} + z_{1,j-1}
/// (for y). Equal lambdas give the indecomposable M(B, lambda, k).
MatrixPairModule band_module(const Word& band, const std::vector<Rational>& lambdas);

/// Block-diagonal sum; every module must carry the given params.
MatrixPairModule direct_sum(AlgebraParams params, const std::vector<MatrixPairModule>& mods);

/// AB = BA = 0, A^a = 0, B^b = 0 (and square matrices of equal size).
bool verify_relations(const MatrixPairModule& m);

/// Jordan type of a nilpotent matrix from the ranks of its powers.
Partition jordan_type(const RationalMatrix& nilpotent);

/// (p(A), p(B)); throws std::invalid_argument when the relations fail.
std::pair<Partition, Partition> jordan_pair(const MatrixPairModule& m);

struct ModuleStats {
  int rank_a = 0;
  int rank_b = 0;
  int top_dim = 0;
  int soc_dim = 0;
  bool regular = false;
  bool operator==(const ModuleStats&) const = default;
};

/// Throws std::invalid_argument when the relations fail.
ModuleStats stats(const MatrixPairModule& m);

/// (A^t, B^t).
MatrixPairModule dual_point(const MatrixPairModule& m);

} // namespace nilvar
