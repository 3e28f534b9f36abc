#pragma once

#include "nilvar/modmatrix.hpp"
#include "nilvar/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nilvar {

/// The basis homomorphism M(source) -> M(target) attached to an admissible
/// pair: z_{|D1|+i} maps to z_{|D2|+i} for 1 <= i <= |E|+1.
struct GraphMap {
  Word source;
  Word target;
  AdmissiblePair pair;
};

std::vector<GraphMap> graph_maps(const Word& source, const Word& target);

/// 0/1 matrix of size (|target|+1) x (|source|+1).
RationalMatrix graph_map_matrix(const GraphMap& g);

int hom_dim_graph(const Word& c1, const Word& c2);

/// Basis of {F : F A1 = A2 F, F B1 = B2 F}; each F is dim(m2) x dim(m1).
std::vector<RationalMatrix> hom_basis(const MatrixPairModule& m1, const MatrixPairModule& m2);

int hom_dim_oracle(const MatrixPairModule& m1, const MatrixPairModule& m2);

int end_dim(const MatrixPairModule& m);

/// End dimension of the sum of summands[k] taken mults[k] times, by
/// biadditivity of Hom.
int end_dim_sum(const std::vector<MatrixPairModule>& summands, const std::vector<int>& mults);

/// n^2 - dim End(M).
int orbit_dim(const MatrixPairModule& m);

struct ProjectiveCover {
  MatrixPairModule cover;     // Lambda^copies as a sum of string modules
  RationalMatrix surjection;  // dim(M) x dim(cover)
  int copies = 0;
};

/// Throws std::invalid_argument when the relations fail.
ProjectiveCover projective_cover(const MatrixPairModule& m);

/// Ext^1(M(c), M(d)) = 0 for semi-projective c, d, decided by comparing
/// dim Hom(M(tau^-1 d), M(c)) with the rank of the maps factoring through the
/// projective cover of M(c). Throws std::invalid_argument otherwise.
bool ext1_vanishes(const Word& c, const Word& d);

/// The same predicate read off graph maps: every graph map
/// M(tau^-1 d) -> M(c) must equal a composite of graph maps through
/// M(x^{a-1}y^{b-1}).
struct GraphExtCheck {
  bool vanishes = false;
  /// Graph maps M(tau^-1 d) -> M(c), and how many of them factor.
  int maps = 0;
  int factoring = 0;
  /// Composites of graph maps that were neither zero nor a graph map.
  int irregular_composites = 0;
};

GraphExtCheck ext1_vanishes_graph(const Word& c, const Word& d);

/// Index of a test module T with dim Hom(y, T) > dim Hom(x, T), if any.
std::optional<std::size_t> hom_order_witness(const MatrixPairModule& y, const MatrixPairModule& x,
                                             const std::vector<MatrixPairModule>& tests);

/// Necessary condition for y <=_deg x: no witness among tests. Throws if the
/// dimensions differ.
bool hom_order_consistent(const MatrixPairModule& y, const MatrixPairModule& x,
                          const std::vector<MatrixPairModule>& tests);

struct OracleMismatch {
  Word c1, c2;
  int graph = 0;
  int oracle = 0;
};

struct OracleSweep {
  std::size_t pairs = 0;
  std::vector<OracleMismatch> mismatches;
};

/// Compares hom_dim_graph with hom_dim_oracle on all pairs of strings of
/// length at most max_length. Runs on worker_count() threads; mismatches are
/// reported in enumeration order.
OracleSweep oracle_sweep(AlgebraParams params, int max_length);

} // namespace nilvar
