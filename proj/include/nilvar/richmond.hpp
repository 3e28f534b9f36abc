#pragma once

#include "nilvar/modmatrix.hpp"
#include "nilvar/partitions.hpp"
#include "nilvar/words.hpp"

#include <map>
#include <utility>
#include <vector>

namespace nilvar {

/// Exponents (i,j) of the summand M(x^i y^j). (0,0) is the simple module,
/// (a-1,b-1) the indecomposable projective.
struct Summand {
  int i = 0;
  int j = 0;
  auto operator<=>(const Summand&) const = default;
};

Word summand_word(AlgebraParams params, Summand s);

/// A direct sum of modules M(x^i y^j), stored as multiplicities.
class BiserialIndexModule {
public:
  explicit BiserialIndexModule(AlgebraParams params) : params_(params) {}

  AlgebraParams params() const { return params_; }
  const std::map<Summand, int>& multiplicities() const { return mult_; }

  /// Adds count copies; throws if the exponents leave 0..a-1, 0..b-1.
  void add(Summand s, int count = 1);
  /// Removes one copy; throws if absent.
  void remove(Summand s);
  int count(Summand s) const;

  int m_s() const { return count({0, 0}); }
  int m_x(int i) const { return count({i, 0}); }
  int m_y(int j) const { return count({0, j}); }
  int m_xy(int i, int j) const { return count({i, j}); }

  int dim() const;
  int summands() const;
  int projective_summands() const;

  /// Realization as a direct sum of string modules, summands in key order.
  MatrixPairModule realize() const;

  bool operator==(const BiserialIndexModule&) const = default;

private:
  AlgebraParams params_;
  std::map<Summand, int> mult_;
};

/// The seven multiplicity conditions for a submodule of Lambda^n together
/// with dim L = n(d-1).
bool is_index_module(const BiserialIndexModule& l, int n);

/// dim Hom(L, Lambda) = n(d-1) + m - p with m summands, p of them
/// projective. Throws if L is not an index module for n.
int hom_to_proj_dim(const BiserialIndexModule& l, int n);

/// dim Hom(L, Lambda) as a sum of graph-map counts over the summands.
int hom_to_proj_dim_graph(const BiserialIndexModule& l);

/// n dim Hom(L, Lambda) - dim End(L), the dimension of the stratum of L.
int stratum_dim(const BiserialIndexModule& l, int n);

/// Replaces M(x^i y^j) + M(x^p y^q) by M(x^i y^q) + M(x^p y^j); requires
/// p <= i and q <= j.
BiserialIndexModule flip(const BiserialIndexModule& l, Summand big, Summand small);

/// Replaces M(x^i y^j) + M(x^p y^q) by M(x^{i+1} y^j) + M(x^{p-1} y^q)
/// (letter 'x', needs 1 <= p <= i <= a-2) or the y-version
/// M(x^i y^{j+1}) + M(x^p y^{q-1}) (letter 'y', needs 1 <= q <= j <= b-2).
BiserialIndexModule box_move(const BiserialIndexModule& l, Summand first, Summand second,
                             char letter = 'x');

/// Lambda^p plus M(x^{c_i} y^{d_{t-i+1}}) with c, d weakly decreasing and
/// bounded by a-2, b-2.
bool is_flip_minimal(const BiserialIndexModule& l);

/// L(a,b) = Lambda^{n-t} + sum_i M(x^{a-c_{t-i+1}-1} y^{b-d_i-1}) for a regular
/// pair with c = a-1, d = b-1 of length t.
BiserialIndexModule index_of_regular_stratum(const Partition& a, const Partition& b,
                                             AlgebraParams params);

struct SemiprojIndex {
  BiserialIndexModule index;
  Word string;
};

/// (L(a,b), P(a,b)) for pairs with an entry a in a, an entry b in b,
/// l(a) + l(b) = n + 1 and l(a-1) = l(b-1).
SemiprojIndex semiproj_index(const Partition& a, const Partition& b, AlgebraParams params);

/// True when the pair satisfies the conditions of semiproj_index.
bool is_semiproj_pair(const Partition& a, const Partition& b, AlgebraParams params);

} // namespace nilvar
