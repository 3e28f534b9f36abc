#include "nilvar/classify.hpp"

#include "nilvar/homalg.hpp"
#include "nilvar/richmond.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace nilvar {

PartitionPair::PartitionPair(Partition a_, Partition b_, AlgebraParams params_)
    : a(std::move(a_)), b(std::move(b_)), params(params_) {
  if (a.size() != b.size())
    throw std::invalid_argument("partition pair of different sizes: " + a.to_string() + ", " +
                                b.to_string());
  if ((!a.empty() && a[0] > params.a) || (!b.empty() && b[0] > params.b))
    throw std::invalid_argument("partition pair " + a.to_string() + ", " + b.to_string() +
                                " exceeds the bounds a=" + std::to_string(params.a) +
                                ", b=" + std::to_string(params.b));
}

bool is_regular_pair(const PartitionPair& ab) {
  return ab.a.length() + ab.b.length() == ab.n() && reduced_length(ab.a) == reduced_length(ab.b);
}

namespace {

std::vector<int> reduced_parts(const Partition& p) {
  std::vector<int> out;
  for (int v : p.parts())
    if (v >= 2) out.push_back(v - 1);
  return out;
}

int sum_of_squares(const Partition& p) {
  int total = 0;
  for (int v : p.parts()) total += v * v;
  return total;
}

void require_regular(const PartitionPair& ab, const char* what) {
  if (!is_regular_pair(ab))
    throw std::invalid_argument(std::string(what) + ": " + ab.a.to_string() + ", " +
                                ab.b.to_string() + " is not a regular pair");
}

bool family_before(const BandMult& u, const BandMult& v) {
  if (u.mult != v.mult) return u.mult > v.mult;
  if (u.band.size() != v.band.size()) return u.band.size() > v.band.size();
  return u.band.letters() < v.band.letters();
}

} // namespace

std::vector<BandMult> diamond_family(const PartitionPair& ab) {
  require_regular(ab, "diamond_family");
  const auto c = reduced_parts(ab.a), d = reduced_parts(ab.b);
  const std::size_t t = c.size();
  std::map<std::string, int> counts;
  for (std::size_t i = 0; i < t; ++i)
    ++counts[letter_power('x', c[i]) + letter_power('y', d[t - 1 - i])];
  std::vector<BandMult> out;
  for (const auto& [letters, m] : counts) out.push_back({Word(letters, ab.params), m});
  std::sort(out.begin(), out.end(), family_before);
  return out;
}

int delta_dim(const PartitionPair& ab) {
  require_regular(ab, "delta_dim");
  const Partition c(reduced_parts(ab.a)), d(reduced_parts(ab.b));
  const int n = ab.n();
  const int t = c.length();
  return n * n - sum_of_squares(dual(c)) - sum_of_squares(dual(d)) + t * t;
}

namespace {

/// Dominance-maximal partition of n with len parts, exactly p of them >= 2,
/// parts bounded by cap.
std::optional<Partition> maximal_with_profile(int n, int len, int p, int cap) {
  const int ones = len - p;
  if (ones < 0 || p < 0) return std::nullopt;
  int rest = n - ones;
  if (rest < 2 * p || rest > p * cap) return std::nullopt;
  std::vector<int> parts;
  for (int k = 1; k <= p; ++k) {
    const int part = std::min(cap, rest - 2 * (p - k));
    parts.push_back(part);
    rest -= part;
  }
  parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
  return Partition(std::move(parts));
}

} // namespace

std::optional<PartitionPair> ip_maximal(int n, AlgebraParams params, int i, int p) {
  if (i < 1 || i > n - 1 || p < 1 || p > std::min(i, n - i)) return std::nullopt;
  auto a = maximal_with_profile(n, i, p, params.a);
  auto b = maximal_with_profile(n, n - i, p, params.b);
  if (!a || !b) return std::nullopt;
  return PartitionPair(std::move(*a), std::move(*b), params);
}

bool is_regular_component(const PartitionPair& ab) {
  require_regular(ab, "is_regular_component");
  auto odd_entries = [](const Partition& p, int bound) {
    return std::count_if(p.parts().begin(), p.parts().end(),
                         [&](int v) { return v != 1 && v != 2 && v != bound; });
  };
  const auto [a, b] = ab.params;
  return odd_entries(ab.a, a) <= 1 && odd_entries(ab.b, b) <= 1 &&
         reduced_length(ab.a) <= multiplicity(ab.a, a) + multiplicity(ab.b, b) + 1;
}

const char* to_string(ComponentSide side) {
  switch (side) {
  case ComponentSide::none: return "none";
  case ComponentSide::semi_projective: return "semi-projective";
  case ComponentSide::semi_injective: return "semi-injective";
  }
  return "none";
}

std::string ComponentDescriptor::label() const {
  std::string out;
  if (kind == ComponentKind::regular) {
    for (std::size_t k = 0; k < family.size(); ++k) {
      if (k > 0) out += ',';
      if (family[k].mult == 1) out += family[k].band.letters();
      else out += "(" + family[k].band.letters() + "," + std::to_string(family[k].mult) + ")";
    }
    return out;
  }
  for (std::size_t k = 0; k < strings.size(); ++k) {
    if (k > 0) out += " ⊕ ";
    out += strings[k].empty() ? "1" : strings[k].letters();
  }
  return out;
}

void sort_components(std::vector<ComponentDescriptor>& comps) {
  std::stable_sort(comps.begin(), comps.end(), [](const auto& u, const auto& v) {
    if (u.dim != v.dim) return u.dim > v.dim;
    if (u.kind != v.kind) return u.kind == ComponentKind::regular;
    if (u.side != v.side) return static_cast<int>(u.side) < static_cast<int>(v.side);
    return u.label() < v.label();
  });
}

std::vector<ComponentDescriptor> regular_components(int n, AlgebraParams params) {
  if (n < 1) throw std::invalid_argument("regular_components: n < 1");
  std::vector<ComponentDescriptor> out;
  for (int i = 1; i <= n - 1; ++i)
    for (int p = 1; p <= std::min(i, n - i); ++p) {
      auto ab = ip_maximal(n, params, i, p);
      if (!ab || !is_regular_component(*ab)) continue;
      ComponentDescriptor c;
      c.kind = ComponentKind::regular;
      c.family = diamond_family(*ab);
      c.dim = delta_dim(*ab);
      c.pair = std::move(ab);
      out.push_back(std::move(c));
    }
  sort_components(out);
  return out;
}

std::vector<ComponentDescriptor> nonregular_components(int n, AlgebraParams params) {
  if (n < 1) throw std::invalid_argument("nonregular_components: n < 1");
  std::vector<Word> candidates;
  for (int k = 1; k <= n; ++k) {
    auto level = enumerate_open_strings(k, params);
    candidates.insert(candidates.end(), level.begin(), level.end());
  }
  const std::size_t count = candidates.size();
  std::map<std::pair<std::size_t, std::size_t>, bool> ext_memo;
  auto ext_zero = [&](std::size_t i, std::size_t j) {
    auto [it, fresh] = ext_memo.try_emplace({i, j}, false);
    if (fresh) it->second = ext1_vanishes(candidates[i], candidates[j]);
    return it->second;
  };

  std::vector<std::vector<std::size_t>> multisets;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, int)> extend = [&](std::size_t from, int remaining) {
    if (remaining == 0) {
      multisets.push_back(chosen);
      return;
    }
    for (std::size_t k = from; k < count; ++k) {
      const int dk = static_cast<int>(candidates[k].size()) + 1;
      if (dk > remaining) continue;
      bool ok = true;
      for (std::size_t prev : chosen)
        if (!ext_zero(prev, k) || !ext_zero(k, prev)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(k);
      extend(k, remaining - dk);
      chosen.pop_back();
    }
  };
  extend(0, n);

  std::vector<ComponentDescriptor> out;
  for (const auto& ms : multisets) {
    std::vector<MatrixPairModule> mods;
    std::vector<int> mults;
    ComponentDescriptor proj;
    proj.kind = ComponentKind::orbit;
    proj.side = ComponentSide::semi_projective;
    for (std::size_t k = 0; k < ms.size(); ++k) {
      proj.strings.push_back(candidates[ms[k]]);
      if (k > 0 && ms[k] == ms[k - 1]) {
        ++mults.back();
      } else {
        mods.push_back(string_module(candidates[ms[k]]));
        mults.push_back(1);
      }
    }
    proj.dim = n * n - end_dim_sum(mods, mults);
    ComponentDescriptor inj = proj;
    inj.side = ComponentSide::semi_injective;
    for (auto& w : inj.strings) w = reverse(w);
    out.push_back(std::move(proj));
    out.push_back(std::move(inj));
  }
  sort_components(out);
  return out;
}

AlgebraParams normalize_params(int n, int a, int b) {
  const int cap = std::max(n, 2);
  return AlgebraParams(std::min(a, cap), std::min(b, cap));
}

std::vector<ComponentDescriptor> components(int n, AlgebraParams params) {
  if (n < 1) throw std::invalid_argument("components: n < 1");
  if (!(normalize_params(n, params.a, params.b) == params))
    throw std::invalid_argument("components: bounds must be normalized to at most max(n,2)");
  auto out = regular_components(n, params);
  auto rest = nonregular_components(n, params);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

Classification classify(int n, int a, int b) {
  if (n < 1) throw std::invalid_argument("classify: n must be at least 1");
  Classification out;
  out.n = n;
  out.requested = AlgebraParams(a, b);
  out.params = normalize_params(n, a, b);
  if (n == 1) {
    ComponentDescriptor point;
    point.kind = ComponentKind::orbit;
    point.side = ComponentSide::none;
    point.strings = {Word(out.params)};
    point.dim = 0;
    point.out_of_scope = true;
    out.components.push_back(std::move(point));
    return out;
  }
  out.components = components(n, out.params);
  return out;
}

std::vector<NnnComponent> nnn_components(int n) {
  if (n < 2) throw std::invalid_argument("nnn_components: n must be at least 2");
  const AlgebraParams params(n, n);
  std::vector<NnnComponent> out;
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<int> a{n - i + 1}, b{i + 1};
    a.insert(a.end(), static_cast<std::size_t>(i - 1), 1);
    b.insert(b.end(), static_cast<std::size_t>(n - i - 1), 1);
    PartitionPair ab(Partition(std::move(a)), Partition(std::move(b)), params);
    NnnComponent c;
    c.i = i;
    c.rank_a_max = n - i;
    c.rank_b_max = i;
    c.descriptor.kind = ComponentKind::regular;
    c.descriptor.family = diamond_family(ab);
    c.descriptor.dim = delta_dim(ab);
    c.descriptor.pair = std::move(ab);
    out.push_back(std::move(c));
  }
  return out;
}

bool regular_dense(int n, AlgebraParams params) {
  return n <= params.a + params.b - 2 || n == params.a + params.b;
}

bool stratum_closure_leq(const PartitionPair& ab, const PartitionPair& cd) {
  require_regular(ab, "stratum_closure_leq");
  require_regular(cd, "stratum_closure_leq");
  if (!(ab.params == cd.params) || ab.n() != cd.n() || ab.a.length() != cd.a.length() ||
      ab.b.length() != cd.b.length() || reduced_length(ab.a) != reduced_length(cd.a))
    throw std::invalid_argument("stratum_closure_leq: pairs lie in different (i,p) cells");
  return dominates(ab.a, cd.a) && dominates(ab.b, cd.b);
}

bool delta_closure_leq_nnn(const Partition& a, const Partition& c, int n) {
  if (a.size() != n || c.size() != n)
    throw std::invalid_argument("delta_closure_leq_nnn: partitions must have size n");
  if (a == c) return true;
  if (a.is_all_ones()) {
    std::vector<int> two_ones{2};
    two_ones.insert(two_ones.end(), static_cast<std::size_t>(std::max(n - 2, 0)), 1);
    return n >= 2 && c == Partition(std::move(two_ones));
  }
  return dominates(a, c) && a.length() == c.length();
}

Partition nnn_partner(const Partition& a) {
  if (a.empty() || a.is_all_ones())
    throw std::invalid_argument("nnn_partner: undefined for " + a.to_string());
  const int n = a.size(), i = a.length(), t = reduced_length(a);
  std::vector<int> parts{i - t + 2};
  parts.insert(parts.end(), static_cast<std::size_t>(t - 1), 2);
  parts.insert(parts.end(), static_cast<std::size_t>(n - i - t), 1);
  return Partition(std::move(parts));
}

PartitionPair open_orbit_pair(int n, AlgebraParams params, int p, int r, int s, int v, int w) {
  const auto [a, b] = params;
  if (p < 1 || v < 0 || v > a - 2 || w < 0 || w > b - 2 || r < 0 || r > p - 1 || s < 0 ||
      s > p - 1 || (v == 0 && r != 0) || (w == 0 && s != 0))
    throw std::invalid_argument("open orbit parameters out of range");
  auto build = [&](int bound, int shift, int ones_tail) {
    std::vector<int> c(static_cast<std::size_t>(p - ones_tail - 1), bound - 1);
    c.push_back(bound - shift - 1);
    c.insert(c.end(), static_cast<std::size_t>(ones_tail), 1);
    std::vector<int> parts;
    int sum = 0;
    for (int v_ : c) parts.push_back(v_ + 1), sum += v_ + 1;
    if (sum > n) throw std::invalid_argument("open orbit parameters exceed n");
    parts.insert(parts.end(), static_cast<std::size_t>(n - sum), 1);
    return Partition(std::move(parts));
  };
  PartitionPair out(build(a, v, r), build(b, w, s), params);
  if (!is_semiproj_pair(out.a, out.b, params))
    throw std::invalid_argument("open orbit parameters do not encode a semi-projective pair of size " +
                                std::to_string(n));
  return out;
}

int open_orbit_dim_formula(int n, AlgebraParams params, int p, int r, int s, int v, int w) {
  open_orbit_pair(n, params, p, r, s, v, w);
  const auto [a, b] = params;
  auto sq = [](int x) { return x * x; };
  return n * n - p * p - p - 1 - (a - v - 2) * sq(p - r) - (b - w - 2) * sq(p - s) -
         v * sq(p - r - 1) - w * sq(p - s - 1);
}

} // namespace nilvar
