#pragma once

#include "nilvar/modmatrix.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace nilvar {

/// A random direct sum of string and band modules.
struct RandomModule {
  MatrixPairModule module;
  int string_summands = 0;
  std::string description;  // e.g. "a=3 b=4: M(xxy) + M(xy;2/3,2/3)"
};

/// Bounds a, b in [2, max_bound], total dimension in [1, max_dim]. Draws use
/// raw mt19937_64 output reduced modulo the range, so sequences are the same
/// on every platform.
RandomModule random_module(std::mt19937_64& rng, int max_bound = 5, int max_dim = 20);

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  bool ok = true;
  std::string counterexample{};  // serialized, set on failure
  std::string info{};            // extra counts worth reporting
};

/// Relations, n - rk A - rk B = #string summands, rk = n - l(p) on random sums.
SuiteResult suite_relations(std::size_t count, std::uint64_t seed, int max_bound = 5,
                            int max_dim = 20);
/// Graph-map count against the intertwiner oracle on all string pairs.
SuiteResult suite_oracle(const std::vector<AlgebraParams>& params, int max_length);
/// delta_dim against stratum_dim(L(a,b)) on all regular pairs.
SuiteResult suite_triangle(int max_n, int max_bound);
/// orbit_dim(M(P(a,b))) against stratum_dim(L(a,b)), the open-orbit formula
/// and the published values, for semi-projective pairs.
SuiteResult suite_open_orbits(int max_n, AlgebraParams params);
/// Classification against the published tables for a = b = 3.
SuiteResult suite_golden(int max_n);
/// V(n,n,n): n-1 components of dimension n^2-n+1, matching nnn_components.
SuiteResult suite_nnn(int max_n);
/// Ext^1 vanishing by linear algebra against the graph-map reading, over all
/// semi-projective strings up to max_length for a = b = 3.
SuiteResult suite_ext(int max_length);
/// regular_dense against emptiness of the non-regular component list.
SuiteResult suite_density(int max_n, int max_bound);

enum class VerifyLevel { quick, full };

std::vector<SuiteResult> run_verify(VerifyLevel level, std::uint64_t seed);

} // namespace nilvar
