#include "nilvar/richmond.hpp"

#include "nilvar/classify.hpp"
#include "nilvar/homalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilvar {

Word summand_word(AlgebraParams params, Summand s) {
  return Word(letter_power('x', s.i) + letter_power('y', s.j), params);
}

void BiserialIndexModule::add(Summand s, int count) {
  if (s.i < 0 || s.i > params_.a - 1 || s.j < 0 || s.j > params_.b - 1)
    throw std::invalid_argument("summand M(x^" + std::to_string(s.i) + "y^" + std::to_string(s.j) +
                                ") is not a string module");
  if (count < 0) throw std::invalid_argument("negative multiplicity");
  if (count > 0) mult_[s] += count;
}

void BiserialIndexModule::remove(Summand s) {
  auto it = mult_.find(s);
  if (it == mult_.end())
    throw std::invalid_argument("summand M(x^" + std::to_string(s.i) + "y^" + std::to_string(s.j) +
                                ") is not present");
  if (--it->second == 0) mult_.erase(it);
}

int BiserialIndexModule::count(Summand s) const {
  auto it = mult_.find(s);
  return it == mult_.end() ? 0 : it->second;
}

int BiserialIndexModule::dim() const {
  int total = 0;
  for (const auto& [s, m] : mult_) total += m * (s.i + s.j + 1);
  return total;
}

int BiserialIndexModule::summands() const {
  int total = 0;
  for (const auto& [s, m] : mult_) total += m;
  return total;
}

int BiserialIndexModule::projective_summands() const {
  return count({params_.a - 1, params_.b - 1});
}

MatrixPairModule BiserialIndexModule::realize() const {
  std::vector<MatrixPairModule> parts;
  for (const auto& [s, m] : mult_) {
    const auto mod = string_module(summand_word(params_, s));
    for (int k = 0; k < m; ++k) parts.push_back(mod);
  }
  return direct_sum(params_, parts);
}

bool is_index_module(const BiserialIndexModule& l, int n) {
  const auto [a, b] = l.params();
  int sum_x = 0, sum_y = 0, sum_xy = 0;
  for (const auto& [s, m] : l.multiplicities()) {
    if (s.i >= 1 && s.j == 0) {
      if (s.i > a - 2) return false;
      sum_x += m;
    } else if (s.i == 0 && s.j >= 1) {
      if (s.j > b - 2) return false;
      sum_y += m;
    } else if (s.i >= 1 && s.j >= 1) {
      if (s.j == b - 1 && s.i != a - 1) return false;
      if (s.i == a - 1 && s.j != b - 1) return false;
      sum_xy += m;
    }
  }
  if (sum_x + sum_xy > n || sum_y + sum_xy > n) return false;
  if (l.m_s() + sum_x + sum_y + 2 * sum_xy > 2 * n) return false;
  return l.dim() == n * (l.params().d() - 1);
}

int hom_to_proj_dim(const BiserialIndexModule& l, int n) {
  if (!is_index_module(l, n)) throw std::invalid_argument("hom_to_proj_dim: not an index module");
  return n * (l.params().d() - 1) + l.summands() - l.projective_summands();
}

int hom_to_proj_dim_graph(const BiserialIndexModule& l) {
  const Word p = projective_word(l.params());
  int total = 0;
  for (const auto& [s, m] : l.multiplicities())
    total += m * hom_dim_graph(summand_word(l.params(), s), p);
  return total;
}

int stratum_dim(const BiserialIndexModule& l, int n) {
  const int hom = hom_to_proj_dim(l, n);
  std::vector<MatrixPairModule> mods;
  std::vector<int> mults;
  for (const auto& [s, m] : l.multiplicities()) {
    mods.push_back(string_module(summand_word(l.params(), s)));
    mults.push_back(m);
  }
  return n * hom - end_dim_sum(mods, mults);
}

namespace {

/// Copy of l without the two selected summands (one copy each).
BiserialIndexModule without_pair(const BiserialIndexModule& l, Summand first, Summand second) {
  BiserialIndexModule out = l;
  out.remove(first);
  out.remove(second);
  return out;
}

} // namespace

BiserialIndexModule flip(const BiserialIndexModule& l, Summand big, Summand small) {
  if (small.i > big.i || small.j > big.j)
    throw std::invalid_argument("flip: needs p <= i and q <= j");
  BiserialIndexModule out = without_pair(l, big, small);
  out.add({big.i, small.j});
  out.add({small.i, big.j});
  return out;
}

BiserialIndexModule box_move(const BiserialIndexModule& l, Summand first, Summand second,
                             char letter) {
  const auto [a, b] = l.params();
  BiserialIndexModule out = without_pair(l, first, second);
  if (letter == 'x') {
    if (!(1 <= second.i && second.i <= first.i && first.i <= a - 2))
      throw std::invalid_argument("box_move: needs 1 <= p <= i <= a-2");
    out.add({first.i + 1, first.j});
    out.add({second.i - 1, second.j});
  } else if (letter == 'y') {
    if (!(1 <= second.j && second.j <= first.j && first.j <= b - 2))
      throw std::invalid_argument("box_move: needs 1 <= q <= j <= b-2");
    out.add({first.i, first.j + 1});
    out.add({second.i, second.j - 1});
  } else {
    throw std::invalid_argument("box_move: letter must be x or y");
  }
  return out;
}

bool is_flip_minimal(const BiserialIndexModule& l) {
  const auto [a, b] = l.params();
  std::vector<Summand> rest;
  for (const auto& [s, m] : l.multiplicities()) {
    if (s.i == a - 1 && s.j == b - 1) continue;
    if (s.i > a - 2 || s.j > b - 2) return false;
    for (int k = 0; k < m; ++k) rest.push_back(s);
  }
  std::sort(rest.begin(), rest.end(), [](Summand u, Summand v) {
    return u.i != v.i ? u.i > v.i : u.j < v.j;
  });
  for (std::size_t k = 1; k < rest.size(); ++k)
    if (rest[k].j < rest[k - 1].j) return false;
  return true;
}

namespace {

std::vector<int> reduced_parts(const Partition& p) {
  std::vector<int> out;
  for (int v : p.parts())
    if (v >= 2) out.push_back(v - 1);
  return out;
}

} // namespace

BiserialIndexModule index_of_regular_stratum(const Partition& a, const Partition& b,
                                             AlgebraParams params) {
  const PartitionPair ab(a, b, params);
  if (!is_regular_pair(ab)) throw std::invalid_argument("index_of_regular_stratum: pair is not regular");
  const auto c = reduced_parts(a), d = reduced_parts(b);
  const int t = static_cast<int>(c.size());
  const int n = ab.n();
  BiserialIndexModule out(params);
  out.add({params.a - 1, params.b - 1}, n - t);
  for (int i = 1; i <= t; ++i) out.add({params.a - c[t - i] - 1, params.b - d[i - 1] - 1});
  return out;
}

bool is_semiproj_pair(const Partition& a, const Partition& b, AlgebraParams params) {
  if (a.size() != b.size() || a.empty()) return false;
  if (!a.empty() && a[0] > params.a) return false;
  if (!b.empty() && b[0] > params.b) return false;
  return multiplicity(a, params.a) >= 1 && multiplicity(b, params.b) >= 1 &&
         a.length() + b.length() == a.size() + 1 && reduced_length(a) == reduced_length(b);
}

SemiprojIndex semiproj_index(const Partition& a, const Partition& b, AlgebraParams params) {
  if (!is_semiproj_pair(a, b, params))
    throw std::invalid_argument("semiproj_index: " + a.to_string() + ", " + b.to_string() +
                                " violates the semi-projective conditions");
  const auto c = reduced_parts(a), d = reduced_parts(b);
  const int t = static_cast<int>(c.size());
  const int n = a.size();
  std::string letters;
  for (int i = 1; i <= t; ++i) letters += letter_power('x', c[i - 1]) + letter_power('y', d[t - i]);
  BiserialIndexModule l(params);
  l.add({params.a - 1, params.b - 1}, n - t);
  for (int i = 2; i <= t; ++i) l.add({params.a - c[i - 1] - 1, params.b - d[t - i + 1] - 1});
  return {std::move(l), Word(std::move(letters), params)};
}

} // namespace nilvar
