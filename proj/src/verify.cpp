#include "nilvar/verify.hpp"

#include "nilvar/classify.hpp"
#include "nilvar/golden.hpp"
#include "nilvar/homalg.hpp"
#include "nilvar/io.hpp"
#include "nilvar/richmond.hpp"

#include <algorithm>
#include <map>

namespace nilvar {

namespace {

int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::string random_letters(std::mt19937_64& rng, int length, AlgebraParams params) {
  std::string s;
  int run = 0;
  for (int k = 0; k < length; ++k) {
    char c = draw(rng, 0, 1) == 0 ? 'x' : 'y';
    const int limit = c == 'x' ? params.a : params.b;
    if (!s.empty() && s.back() == c && run + 1 >= limit) c = c == 'x' ? 'y' : 'x';
    run = (!s.empty() && s.back() == c) ? run + 1 : 1;
    s.push_back(c);
  }
  return s;
}

Word random_band(std::mt19937_64& rng, AlgebraParams params, int max_length) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    Word w(random_letters(rng, draw(rng, 2, std::max(2, max_length)), params), params);
    if (band_class(w).kind == BandKind::primitive) return w;
  }
  return Word("xy", params);
}

Rational random_lambda(std::mt19937_64& rng) {
  int num = draw(rng, 1, 5);
  if (draw(rng, 0, 1) == 1) num = -num;
  Rational q(num, draw(rng, 1, 4));
  q.canonicalize();
  return q;
}

SuiteResult fail(SuiteResult r, std::string counterexample) {
  r.ok = false;
  r.counterexample = std::move(counterexample);
  return r;
}

std::string pair_text(const Partition& a, const Partition& b) {
  return "{\"a\":" + a.to_string() + ",\"b\":" + b.to_string() + "}";
}

} // namespace

RandomModule random_module(std::mt19937_64& rng, int max_bound, int max_dim) {
  const AlgebraParams params(draw(rng, 2, max_bound), draw(rng, 2, max_bound));
  const int target = draw(rng, 1, max_dim);
  RandomModule out;
  std::vector<MatrixPairModule> parts;
  int dim = 0;
  std::string desc;
  while (dim < target) {
    const int room = target - dim;
    MatrixPairModule part;
    std::string label;
    if (room >= 2 && draw(rng, 0, 2) == 0) {
      const Word band = random_band(rng, params, std::min(room, 6));
      const int copies = std::min(draw(rng, 1, 3), room / static_cast<int>(band.size()));
      if (copies == 0) continue;
      std::vector<Rational> lambdas;
      const bool equal = draw(rng, 0, 1) == 0;
      for (int k = 0; k < copies; ++k)
        lambdas.push_back(equal && k > 0 ? lambdas.front() : random_lambda(rng));
      part = band_module(band, lambdas);
      label = "M(" + band.letters() + ";";
      for (std::size_t k = 0; k < lambdas.size(); ++k)
        label += (k ? "," : "") + to_fraction_string(lambdas[k]);
      label += ")";
    } else {
      const Word w(random_letters(rng, draw(rng, 0, std::min(room - 1, 6)), params), params);
      part = string_module(w);
      label = "M(" + (w.empty() ? std::string("1") : w.letters()) + ")";
      ++out.string_summands;
    }
    dim += part.dim();
    parts.push_back(std::move(part));
    desc += (desc.empty() ? "" : " + ") + label;
  }
  out.module = direct_sum(params, parts);
  out.description =
      "a=" + std::to_string(params.a) + " b=" + std::to_string(params.b) + ": " + desc;
  return out;
}

SuiteResult suite_relations(std::size_t count, std::uint64_t seed, int max_bound, int max_dim) {
  SuiteResult r{.name = "relations"};
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    const RandomModule rm = random_module(rng, max_bound, max_dim);
    const auto& m = rm.module;
    auto counterexample = [&](const std::string& what) {
      return what + " for " + rm.description + "\n" + module_to_json(m).dump();
    };
    if (!verify_relations(m)) return fail(r, counterexample("relations fail"));
    const ModuleStats s = stats(m);
    const int n = m.dim();
    if (n - s.rank_a - s.rank_b != rm.string_summands)
      return fail(r, counterexample("n - rkA - rkB != number of string summands"));
    const auto [pa, pb] = jordan_pair(m);
    if (s.rank_a != n - pa.length() || s.rank_b != n - pb.length())
      return fail(r, counterexample("rank differs from n - l(p)"));
    r.checks += 3;
  }
  return r;
}

SuiteResult suite_oracle(const std::vector<AlgebraParams>& params, int max_length) {
  SuiteResult r{.name = "oracle"};
  for (const auto& p : params) {
    const OracleSweep sweep = oracle_sweep(p, max_length);
    r.checks += sweep.pairs;
    if (!sweep.mismatches.empty()) {
      const auto& mm = sweep.mismatches.front();
      return fail(r, "{\"a\":" + std::to_string(p.a) + ",\"b\":" + std::to_string(p.b) +
                         ",\"c1\":\"" + mm.c1.letters() + "\",\"c2\":\"" + mm.c2.letters() +
                         "\",\"graph\":" + std::to_string(mm.graph) +
                         ",\"oracle\":" + std::to_string(mm.oracle) + "}");
    }
  }
  return r;
}

SuiteResult suite_triangle(int max_n, int max_bound) {
  SuiteResult r{.name = "triangle"};
  for (int a = 2; a <= max_bound; ++a)
    for (int b = 2; b <= max_bound; ++b) {
      const AlgebraParams params(a, b);
      for (int n = 1; n <= max_n; ++n)
        for (const auto& pa : enumerate_partitions(n, a))
          for (const auto& pb : enumerate_partitions(n, b)) {
            const PartitionPair ab(pa, pb, params);
            if (!is_regular_pair(ab)) continue;
            const auto l = index_of_regular_stratum(pa, pb, params);
            const int formula = delta_dim(ab);
            const int stratum = is_index_module(l, n) ? stratum_dim(l, n) : -1;
            if (formula != stratum)
              return fail(r, "{\"a\":" + std::to_string(a) + ",\"b\":" + std::to_string(b) +
                                 ",\"pair\":" + pair_text(pa, pb) + ",\"delta_dim\":" +
                                 std::to_string(formula) + ",\"stratum_dim\":" +
                                 std::to_string(stratum) +
                                 ",\"index\":" + index_module_to_json(l).dump() + "}");
            ++r.checks;
          }
    }
  return r;
}

SuiteResult suite_open_orbits(int max_n, AlgebraParams params) {
  SuiteResult r{.name = "open-orbits"};
  const auto [a, b] = params;
  std::map<std::string, int> published;
  if (a == 3 && b == 3)
    for (int n = 2; n <= 12; ++n)
      for (const auto& e : golden::orbit_table(n))
        if (e.strings.size() == 1) published[e.strings.front()] = e.dim;

  std::size_t formula_checks = 0, published_checks = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& pa : enumerate_partitions(n, a))
      for (const auto& pb : enumerate_partitions(n, b)) {
        if (!is_semiproj_pair(pa, pb, params)) continue;
        const auto [l, p] = semiproj_index(pa, pb, params);
        const int orbit = orbit_dim(string_module(p));
        const int stratum = is_index_module(l, n) ? stratum_dim(l, n) : -1;
        if (orbit != stratum || static_cast<int>(p.size()) + 1 != n ||
            semi_kind(p) != SemiKind::semi_projective)
          return fail(r, "{\"pair\":" + pair_text(pa, pb) + ",\"P\":\"" + p.letters() +
                             "\",\"orbit_dim\":" + std::to_string(orbit) +
                             ",\"stratum_dim\":" + std::to_string(stratum) + "}");
        ++r.checks;
      }
    for (int p = 1; p <= n; ++p)
      for (int v = 0; v <= a - 2; ++v)
        for (int w = 0; w <= b - 2; ++w)
          for (int rr = 0; rr <= (v == 0 ? 0 : p - 1); ++rr)
            for (int s = 0; s <= (w == 0 ? 0 : p - 1); ++s) {
              std::optional<PartitionPair> ab;
              try {
                ab = open_orbit_pair(n, params, p, rr, s, v, w);
              } catch (const std::invalid_argument&) {
                continue;
              }
              const Word pw = semiproj_index(ab->a, ab->b, params).string;
              const int orbit = orbit_dim(string_module(pw));
              const int formula = open_orbit_dim_formula(n, params, p, rr, s, v, w);
              auto it = published.find(pw.letters());
              const bool published_ok = it == published.end() || it->second == orbit;
              if (orbit != formula || !published_ok)
                return fail(r, "{\"n\":" + std::to_string(n) + ",\"p\":" + std::to_string(p) +
                                   ",\"r\":" + std::to_string(rr) + ",\"s\":" + std::to_string(s) +
                                   ",\"v\":" + std::to_string(v) + ",\"w\":" + std::to_string(w) +
                                   ",\"P\":\"" + pw.letters() + "\",\"orbit_dim\":" +
                                   std::to_string(orbit) + ",\"formula\":" +
                                   std::to_string(formula) + "}");
              ++formula_checks;
              if (it != published.end()) ++published_checks;
            }
  }
  r.checks += formula_checks + published_checks;
  r.info = std::to_string(formula_checks) + " formula, " + std::to_string(published_checks) +
           " published";
  return r;
}

SuiteResult suite_golden(int max_n) {
  SuiteResult r{.name = "golden"};
  for (int n = 2; n <= std::min(max_n, 12); ++n) {
    const auto diff = golden::compare_with_tables(n, classify(n, 3, 3).components);
    if (!diff.empty()) return fail(r, diff);
    ++r.checks;
  }
  return r;
}

SuiteResult suite_nnn(int max_n) {
  SuiteResult r{.name = "nnn"};
  for (int n = 2; n <= max_n; ++n) {
    const auto comps = classify(n, n, n).components;
    const auto expected = nnn_components(n);
    bool ok = comps.size() == static_cast<std::size_t>(n - 1);
    for (const auto& c : comps) ok = ok && c.kind == ComponentKind::regular && c.dim == n * n - n + 1;
    for (const auto& e : expected)
      ok = ok && std::count(comps.begin(), comps.end(), e.descriptor) == 1;
    if (!ok) return fail(r, classification_to_json(classify(n, n, n)).dump());
    ++r.checks;
  }
  return r;
}

SuiteResult suite_ext(int max_length) {
  SuiteResult r{.name = "ext"};
  const AlgebraParams params(3, 3);
  std::vector<Word> semi;
  for (const auto& w : enumerate_strings_up_to(max_length, params))
    if (semi_kind(w) == SemiKind::semi_projective) semi.push_back(w);
  std::size_t irregular = 0;
  for (const auto& c : semi)
    for (const auto& d : semi) {
      const bool linear = ext1_vanishes(c, d);
      const GraphExtCheck graph = ext1_vanishes_graph(c, d);
      irregular += static_cast<std::size_t>(graph.irregular_composites);
      if (linear != graph.vanishes)
        return fail(r, "{\"c\":\"" + c.letters() + "\",\"d\":\"" + d.letters() +
                           "\",\"linear\":" + (linear ? "true" : "false") +
                           ",\"graph\":" + (graph.vanishes ? "true" : "false") +
                           ",\"graph_maps\":" + std::to_string(graph.maps) +
                           ",\"factoring\":" + std::to_string(graph.factoring) + "}");
      ++r.checks;
    }
  r.info = std::to_string(semi.size()) + " strings, " + std::to_string(irregular) +
           " composites neither zero nor a graph map";
  return r;
}

SuiteResult suite_density(int max_n, int max_bound) {
  SuiteResult r{.name = "density"};
  for (int a = 2; a <= max_bound; ++a)
    for (int b = 2; b <= max_bound; ++b)
      for (int n = 2; n <= max_n; ++n) {
        const AlgebraParams params(a, b);
        const bool dense = regular_dense(n, params);
        const bool empty = nonregular_components(n, params).empty();
        if (dense != empty)
          return fail(r, "{\"n\":" + std::to_string(n) + ",\"a\":" + std::to_string(a) +
                             ",\"b\":" + std::to_string(b) + ",\"regular_dense\":" +
                             (dense ? "true" : "false") + ",\"nonregular_empty\":" +
                             (empty ? "true" : "false") + "}");
        ++r.checks;
      }
  return r;
}

std::vector<SuiteResult> run_verify(VerifyLevel level, std::uint64_t seed) {
  const bool full = level == VerifyLevel::full;
  std::vector<SuiteResult> out;
  out.push_back(suite_relations(full ? 10000 : 500, seed));
  out.push_back(full ? suite_oracle({{3, 3}, {2, 3}, {4, 3}}, 6) : suite_oracle({{3, 3}}, 4));
  out.push_back(full ? suite_triangle(10, 4) : suite_triangle(6, 3));
  out.push_back(suite_open_orbits(full ? 12 : 8, AlgebraParams(3, 3)));
  out.push_back(suite_golden(full ? 12 : 8));
  out.push_back(suite_nnn(full ? 7 : 5));
  out.push_back(suite_ext(full ? 10 : 6));
  out.push_back(full ? suite_density(12, 4) : suite_density(8, 3));
  return out;
}

} // namespace nilvar
