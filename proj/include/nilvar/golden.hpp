#pragma once

#include "nilvar/classify.hpp"

#include <string>
#include <utility>
#include <vector>

namespace nilvar::golden {

// Published component tables for a = b = 3, n = 2..12.

struct RegularEntry {
  std::vector<std::pair<std::string, int>> family;  // band letters, multiplicity
  int dim = 0;
};

struct OrbitEntry {
  std::vector<std::string> strings;  // semi-projective side
  int dim = 0;
};

/// Regular components for a = b = 3 at dimension n (2 <= n <= 12).
const std::vector<RegularEntry>& regular_table(int n);
/// Semi-projective open-orbit components for a = b = 3 (empty when none).
const std::vector<OrbitEntry>& orbit_table(int n);

enum class Tables { regular, orbit, both };

/// Compares a computed component list with the tables, including the
/// semi-injective mirror of each orbit entry. Components of a kind not
/// selected are ignored. Returns an empty string on agreement, otherwise a
/// description of the first difference.
std::string compare_with_tables(int n, const std::vector<ComponentDescriptor>& comps,
                                Tables which = Tables::both);

} // namespace nilvar::golden
