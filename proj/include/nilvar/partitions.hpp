#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace nilvar {

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the partition of 0.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  bool is_all_ones() const;
  int operator[](std::size_t i) const { return parts_[i]; }

  /// "[3,2,2,1]"; the empty partition prints as "[]".
  std::string to_string() const;
  static Partition parse(std::string_view text);

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

private:
  std::vector<int> parts_;
};

/// All partitions of n with parts bounded by amax, lexicographically
/// decreasing.
std::vector<Partition> enumerate_partitions(int n, int amax);

/// Transpose of the Young diagram.
Partition dual(const Partition& p);

/// True when p is below q in the dominance order (prefix sums of p never
/// exceed those of q). Throws std::invalid_argument if |p| != |q|.
bool dominates(const Partition& p, const Partition& q);

/// Subtract one from every part and drop the parts that vanish. Undefined
/// (throws) for the empty partition and for (1,...,1).
Partition minus_one(const Partition& p);

/// Length of minus_one(p), read as 0 when p consists of ones only.
int reduced_length(const Partition& p);

/// Number of parts equal to i.
int multiplicity(const Partition& p, int i);

} // namespace nilvar
