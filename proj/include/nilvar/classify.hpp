#pragma once

#include "nilvar/partitions.hpp"
#include "nilvar/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nilvar {

/// Jordan types (p(A), p(B)) of the same n with parts bounded by (a, b).
struct PartitionPair {
  Partition a, b;
  AlgebraParams params;

  /// Throws std::invalid_argument on size mismatch or oversized parts.
  PartitionPair(Partition a_, Partition b_, AlgebraParams params_);

  int n() const { return a.size(); }
  bool operator==(const PartitionPair&) const = default;
};

/// l(a) + l(b) = n and l(a-1) = l(b-1).
bool is_regular_pair(const PartitionPair& ab);

struct BandMult {
  Word band;
  int mult = 0;
  bool operator==(const BandMult&) const = default;
};

/// Bands x^{c_i} y^{d_{t-i+1}} for c = a-1, d = b-1, equal bands merged.
/// Ordered by multiplicity, then length (both descending), then letters.
std::vector<BandMult> diamond_family(const PartitionPair& ab);

/// n^2 - sum (a-1)*_i^2 - sum (b-1)*_i^2 + l(a-1)^2 for regular pairs.
int delta_dim(const PartitionPair& ab);

/// The dominance-maximal regular pair with l(a) = i, l(b) = n-i and
/// l(a-1) = p, if that cell is nonempty.
std::optional<PartitionPair> ip_maximal(int n, AlgebraParams params, int i, int p);

/// At most one entry of a outside {1,2,a}, the same for b, and
/// l(a-1) <= |a in a| + |b in b| + 1. Throws for non-regular pairs.
bool is_regular_component(const PartitionPair& ab);

enum class ComponentKind { regular, orbit };
enum class ComponentSide { none, semi_projective, semi_injective };

const char* to_string(ComponentSide side);

struct ComponentDescriptor {
  ComponentKind kind = ComponentKind::regular;
  int dim = 0;
  // regular
  std::optional<PartitionPair> pair;
  std::vector<BandMult> family;
  // orbit
  ComponentSide side = ComponentSide::none;
  std::vector<Word> strings;
  /// Set only for the n = 1 point, which lies outside n >= 2.
  bool out_of_scope = false;

  /// "(xxy,2),xyy" for families, "xxyy + xxyxyy" for orbits.
  std::string label() const;
  bool operator==(const ComponentDescriptor&) const = default;
};

/// Descending dimension, then label.
void sort_components(std::vector<ComponentDescriptor>& comps);

std::vector<ComponentDescriptor> regular_components(int n, AlgebraParams params);

/// Open-orbit components: semi-projective multisets with pairwise vanishing
/// Ext^1 and their semi-injective mirrors.
std::vector<ComponentDescriptor> nonregular_components(int n, AlgebraParams params);

/// Bounds replaced by min(bound, max(n, 2)); A^a = 0 and A^n = 0 agree on
/// nilpotent n x n matrices.
AlgebraParams normalize_params(int n, int a, int b);

/// Regular and open-orbit components; params must already be normalized.
std::vector<ComponentDescriptor> components(int n, AlgebraParams params);

struct Classification {
  int n = 0;
  AlgebraParams requested;
  AlgebraParams params;  // normalized
  std::vector<ComponentDescriptor> components;
};

/// Normalizes (a,b) and classifies; n = 1 yields the single zero point.
Classification classify(int n, int a, int b);

struct NnnComponent {
  int i = 0;
  int rank_a_max = 0;  // rk A <= n - i
  int rank_b_max = 0;  // rk B <= i
  ComponentDescriptor descriptor;
};

/// The n-1 components of V(n,n,n), each of dimension n^2 - n + 1.
std::vector<NnnComponent> nnn_components(int n);

/// n <= a+b-2 or n = a+b.
bool regular_dense(int n, AlgebraParams params);

/// Componentwise dominance within one (i,p) cell; throws across cells.
bool stratum_closure_leq(const PartitionPair& ab, const PartitionPair& cd);

/// Closure order of the strata Delta(a) in V(n,n,n).
bool delta_closure_leq_nnn(const Partition& a, const Partition& c, int n);

/// The dominance-maximal a° with (a, a°) regular when a = b = n; a must not
/// be (1,...,1).
Partition nnn_partner(const Partition& a);

/// n^2 - p^2 - p - 1 - (a-v-2)(p-r)^2 - (b-w-2)(p-s)^2 - v(p-r-1)^2 - w(p-s-1)^2,
/// after checking the parameter ranges and that the encoded pair is a
/// semi-projective pair of size n.
int open_orbit_dim_formula(int n, AlgebraParams params, int p, int r, int s, int v, int w);

/// The pair with a-1 = ((a-1)^{p-r-1}, a-v-1, 1^r), b-1 likewise, padded
/// with ones to size n. Throws when the parameters are out of range.
PartitionPair open_orbit_pair(int n, AlgebraParams params, int p, int r, int s, int v, int w);

} // namespace nilvar
