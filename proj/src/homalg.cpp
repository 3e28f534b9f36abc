#include "nilvar/homalg.hpp"

#include "nilvar/parallel.hpp"

#include <stdexcept>

namespace nilvar {

std::vector<GraphMap> graph_maps(const Word& source, const Word& target) {
  std::vector<GraphMap> out;
  for (auto& pair : admissible_pairs(source, target)) out.push_back({source, target, std::move(pair)});
  return out;
}

RationalMatrix graph_map_matrix(const GraphMap& g) {
  RationalMatrix f(g.target.size() + 1, g.source.size() + 1);
  const auto& [t1, t2] = g.pair;
  for (std::size_t i = 0; i <= t1.e.size(); ++i) f(t2.d.size() + i, t1.d.size() + i) = 1;
  return f;
}

int hom_dim_graph(const Word& c1, const Word& c2) {
  return static_cast<int>(admissible_pairs(c1, c2).size());
}

namespace {

/// Coefficient matrix of F |-> (F A1 - A2 F, F B1 - B2 F) on the row-major
/// vectorization of F (index r*n1 + c). All-zero equations are dropped.
RationalMatrix intertwiner_system(const MatrixPairModule& m1, const MatrixPairModule& m2) {
  if (!(m1.params == m2.params)) throw std::invalid_argument("hom: params mismatch");
  const std::size_t n1 = m1.dim(), n2 = m2.dim();
  std::vector<std::vector<std::pair<std::size_t, Rational>>> eqs;
  for (const auto* pair : {&m1.A, &m1.B}) {
    const RationalMatrix& x1 = *pair;
    const RationalMatrix& x2 = (pair == &m1.A) ? m2.A : m2.B;
    for (std::size_t r = 0; r < n2; ++r)
      for (std::size_t c = 0; c < n1; ++c) {
        std::vector<std::pair<std::size_t, Rational>> eq;
        for (std::size_t k = 0; k < n1; ++k)
          if (sgn(x1(k, c)) != 0) eq.emplace_back(r * n1 + k, x1(k, c));
        for (std::size_t k = 0; k < n2; ++k)
          if (sgn(x2(r, k)) != 0) eq.emplace_back(k * n1 + c, -x2(r, k));
        if (!eq.empty()) eqs.push_back(std::move(eq));
      }
  }
  RationalMatrix sys(eqs.size(), n1 * n2);
  for (std::size_t i = 0; i < eqs.size(); ++i)
    for (const auto& [col, v] : eqs[i]) sys(i, col) += v;
  return sys;
}

RationalMatrix unvectorize(const RationalVector& v, std::size_t rows, std::size_t cols) {
  RationalMatrix f(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) f(r, c) = v[r * cols + c];
  return f;
}

/// Rank of a family of equally sized matrices viewed as vectors.
int span_rank(const std::vector<RationalMatrix>& mats) {
  if (mats.empty()) return 0;
  const std::size_t len = mats[0].rows() * mats[0].cols();
  RationalMatrix stacked(mats.size(), len);
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t r = 0; r < mats[i].rows(); ++r)
      for (std::size_t c = 0; c < mats[i].cols(); ++c)
        stacked(i, r * mats[i].cols() + c) = mats[i](r, c);
  return rank(stacked);
}

} // namespace

std::vector<RationalMatrix> hom_basis(const MatrixPairModule& m1, const MatrixPairModule& m2) {
  const auto sys = intertwiner_system(m1, m2);
  std::vector<RationalMatrix> out;
  for (const auto& v : nullspace(sys)) out.push_back(unvectorize(v, m2.dim(), m1.dim()));
  return out;
}

int hom_dim_oracle(const MatrixPairModule& m1, const MatrixPairModule& m2) {
  const auto sys = intertwiner_system(m1, m2);
  return static_cast<int>(sys.cols()) - rank(sys);
}

int end_dim(const MatrixPairModule& m) { return hom_dim_oracle(m, m); }

int end_dim_sum(const std::vector<MatrixPairModule>& summands, const std::vector<int>& mults) {
  if (summands.size() != mults.size()) throw std::invalid_argument("end_dim_sum: size mismatch");
  int total = 0;
  for (std::size_t k = 0; k < summands.size(); ++k)
    for (std::size_t l = 0; l < summands.size(); ++l) {
      if (mults[k] == 0 || mults[l] == 0) continue;
      total += mults[k] * mults[l] * hom_dim_oracle(summands[k], summands[l]);
    }
  return total;
}

int orbit_dim(const MatrixPairModule& m) { return m.dim() * m.dim() - end_dim(m); }

ProjectiveCover projective_cover(const MatrixPairModule& m) {
  const ModuleStats s = stats(m);
  const auto [a, b] = m.params;
  const std::size_t n = m.dim();
  const MatrixPairModule lambda = string_module(projective_word(m.params));
  const std::size_t d = lambda.dim();

  // Standard basis vectors completing rad M = im A + im B to the whole space.
  RationalMatrix span = hstack(m.A, m.B);
  int current = rank(span);
  std::vector<std::size_t> lifts;
  for (std::size_t k = 0; k < n && static_cast<int>(lifts.size()) < s.top_dim; ++k) {
    RationalMatrix e(n, 1);
    e(k, 0) = 1;
    RationalMatrix candidate = hstack(span, e);
    const int r = rank(candidate);
    if (r > current) {
      span = std::move(candidate);
      current = r;
      lifts.push_back(k);
    }
  }

  ProjectiveCover out;
  out.copies = s.top_dim;
  out.cover = direct_sum(m.params, std::vector<MatrixPairModule>(lifts.size(), lambda));
  out.surjection = RationalMatrix(n, d * lifts.size());
  // The generator z_a of Lambda maps to the lift g; z_{a-k} to A^k g and
  // z_{a+k} to B^k g.
  for (std::size_t copy = 0; copy < lifts.size(); ++copy) {
    RationalMatrix g(n, 1);
    g(lifts[copy], 0) = 1;
    RationalMatrix ax = g, by = g;
    for (int k = 0; k < a; ++k) {
      for (std::size_t r = 0; r < n; ++r) out.surjection(r, copy * d + (a - 1 - k)) = ax(r, 0);
      ax = m.A * ax;
    }
    for (int k = 1; k < b; ++k) {
      by = m.B * by;
      for (std::size_t r = 0; r < n; ++r) out.surjection(r, copy * d + (a - 1 + k)) = by(r, 0);
    }
  }
  return out;
}

namespace {

void require_semi_projective(const Word& w, const char* what) {
  if (semi_kind(w) != SemiKind::semi_projective)
    throw std::invalid_argument(std::string(what) + ": M(" + w.letters() +
                                ") is not semi-projective");
}

} // namespace

bool ext1_vanishes(const Word& c, const Word& d) {
  require_semi_projective(c, "ext1_vanishes");
  require_semi_projective(d, "ext1_vanishes");
  if (c == projective_word(c.params())) return true;

  const MatrixPairModule t = string_module(tau_inverse(d));
  const MatrixPairModule mc = string_module(c);
  const MatrixPairModule lambda = string_module(projective_word(c.params()));
  const int hom_dim = hom_dim_oracle(t, mc);
  if (hom_dim == 0) return true;

  const ProjectiveCover pc = projective_cover(mc);
  const std::size_t dl = lambda.dim();
  const auto to_lambda = hom_basis(t, lambda);
  std::vector<RationalMatrix> composites;
  for (int copy = 0; copy < pc.copies; ++copy) {
    RationalMatrix pi(mc.dim(), dl);
    for (std::size_t r = 0; r < static_cast<std::size_t>(mc.dim()); ++r)
      for (std::size_t k = 0; k < dl; ++k) pi(r, k) = pc.surjection(r, copy * dl + k);
    for (const auto& g : to_lambda) composites.push_back(pi * g);
  }
  return span_rank(composites) == hom_dim;
}

GraphExtCheck ext1_vanishes_graph(const Word& c, const Word& d) {
  require_semi_projective(c, "ext1_vanishes_graph");
  require_semi_projective(d, "ext1_vanishes_graph");
  const Word t = tau_inverse(d);
  const Word p = projective_word(c.params());

  std::vector<RationalMatrix> targets;
  for (const auto& g : graph_maps(t, c)) targets.push_back(graph_map_matrix(g));
  std::vector<bool> factors(targets.size(), false);

  GraphExtCheck out;
  out.maps = static_cast<int>(targets.size());
  const auto into_p = graph_maps(t, p);
  const auto out_of_p = graph_maps(p, c);
  for (const auto& h : out_of_p) {
    const RationalMatrix hm = graph_map_matrix(h);
    for (const auto& g : into_p) {
      const RationalMatrix comp = hm * graph_map_matrix(g);
      if (comp.is_zero()) continue;
      bool matched = false;
      for (std::size_t k = 0; k < targets.size(); ++k)
        if (comp == targets[k]) {
          factors[k] = true;
          matched = true;
        }
      if (!matched) ++out.irregular_composites;
    }
  }
  for (bool f : factors) out.factoring += f ? 1 : 0;
  out.vanishes = out.factoring == out.maps;
  return out;
}

std::optional<std::size_t> hom_order_witness(const MatrixPairModule& y, const MatrixPairModule& x,
                                             const std::vector<MatrixPairModule>& tests) {
  if (y.dim() != x.dim()) throw std::invalid_argument("hom_order: dimension mismatch");
  for (std::size_t k = 0; k < tests.size(); ++k)
    if (hom_dim_oracle(y, tests[k]) > hom_dim_oracle(x, tests[k])) return k;
  return std::nullopt;
}

bool hom_order_consistent(const MatrixPairModule& y, const MatrixPairModule& x,
                          const std::vector<MatrixPairModule>& tests) {
  return !hom_order_witness(y, x, tests).has_value();
}

OracleSweep oracle_sweep(AlgebraParams params, int max_length) {
  const auto strings = enumerate_strings_up_to(max_length, params);
  std::vector<MatrixPairModule> mods;
  for (const auto& s : strings) mods.push_back(string_module(s));
  const std::size_t count = strings.size();

  std::vector<int> graph(count * count), oracle(count * count);
  parallel_for(count * count, [&](std::size_t idx) {
    const std::size_t i = idx / count, j = idx % count;
    graph[idx] = hom_dim_graph(strings[i], strings[j]);
    oracle[idx] = hom_dim_oracle(mods[i], mods[j]);
  });

  OracleSweep out;
  out.pairs = count * count;
  for (std::size_t idx = 0; idx < count * count; ++idx)
    if (graph[idx] != oracle[idx])
      out.mismatches.push_back(
          {strings[idx / count], strings[idx % count], graph[idx], oracle[idx]});
  return out;
}

} // namespace nilvar
