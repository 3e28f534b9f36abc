#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilvar/classify.hpp"
#include "nilvar/homalg.hpp"
#include "nilvar/richmond.hpp"
#include "support.hpp"

using namespace nilvar;

namespace {

const AlgebraParams p33{3, 3};

BiserialIndexModule make(AlgebraParams params, std::vector<std::pair<Summand, int>> parts) {
  BiserialIndexModule l(params);
  for (const auto& [s, m] : parts) l.add(s, m);
  return l;
}

std::vector<PartitionPair> regular_pairs(int n, AlgebraParams params) {
  std::vector<PartitionPair> out;
  for (const auto& a : enumerate_partitions(n, params.a))
    for (const auto& b : enumerate_partitions(n, params.b)) {
      PartitionPair ab(a, b, params);
      if (is_regular_pair(ab)) out.push_back(ab);
    }
  return out;
}

MatrixPairModule family_member(const PartitionPair& ab) {
  std::vector<MatrixPairModule> parts;
  for (const auto& [band, mult] : diamond_family(ab)) {
    std::vector<Rational> ls;
    for (int j = 0; j < mult; ++j) ls.emplace_back(static_cast<long>(parts.size()) + j + 2);
    for (int j = 0; j < mult; ++j) parts.push_back(band_module(band, {ls[j]}));
  }
  return direct_sum(ab.params, parts);
}

std::vector<MatrixPairModule> short_strings(AlgebraParams params) {
  std::vector<MatrixPairModule> out;
  for (const auto& c : enumerate_strings_up_to(4, params)) out.push_back(string_module(c));
  return out;
}

} // namespace

TEST_CASE("index module conditions") {
  const Summand lam{2, 2};
  const auto l = make(p33, {{lam, 1}, {{1, 1}, 1}});
  CHECK(l.dim() == 8);
  CHECK(is_index_module(l, 2));
  CHECK_FALSE(is_index_module(make(p33, {{{1, 0}, 3}}), 2));
  CHECK_FALSE(is_index_module(make(p33, {{lam, 2}}), 2));
  CHECK_THROWS(make(p33, {{{3, 0}, 1}}));
  BiserialIndexModule e(p33);
  CHECK_THROWS(e.remove({0, 0}));
}

TEST_CASE("hom to the projective") {
  const auto l = make(p33, {{{2, 2}, 1}, {{1, 1}, 1}});
  CHECK(hom_to_proj_dim(l, 2) == 9);
  CHECK(hom_to_proj_dim_graph(l) == 9);
  const auto l4 = make(p33, {{{2, 2}, 4}});
  CHECK(hom_to_proj_dim(l4, 5) == 20);
  CHECK(hom_to_proj_dim_graph(l4) == 20);
  CHECK_THROWS_AS(hom_to_proj_dim(make(p33, {{{2, 2}, 2}}), 2), std::invalid_argument);
  // dim Hom(M(x^i y^j), Lambda) = i + j + 2 for i <= a-2, j <= b-2
  for (AlgebraParams params : {AlgebraParams{3, 3}, AlgebraParams{4, 3}, AlgebraParams{5, 4}})
    for (int i = 0; i <= params.a - 2; ++i)
      for (int j = 0; j <= params.b - 2; ++j)
        CHECK(hom_dim_graph(summand_word(params, {i, j}), projective_word(params)) == i + j + 2);
}

TEST_CASE("stratum dimensions") {
  CHECK(stratum_dim(make(p33, {{{2, 2}, 1}, {{1, 1}, 1}}), 2) == 3);
  CHECK(stratum_dim(make(p33, {{{2, 2}, 4}}), 5) == 20);
  const auto l = index_of_regular_stratum({2}, {2}, p33);
  CHECK(stratum_dim(l, 2) == delta_dim(PartitionPair({2}, {2}, p33)));
}

TEST_CASE("flip") {
  const auto l = make(p33, {{{2, 2}, 1}, {{1, 1}, 1}});
  const auto f = flip(l, {2, 2}, {1, 1});
  CHECK(f == make(p33, {{{2, 1}, 1}, {{1, 2}, 1}}));
  CHECK(f.dim() == l.dim());
  const auto same = make(p33, {{{1, 1}, 2}});
  CHECK(flip(same, {1, 1}, {1, 1}) == same);
  CHECK_THROWS(flip(l, {1, 1}, {2, 2}));
}

TEST_CASE("box move") {
  const auto l = make(p33, {{{1, 1}, 2}});
  const auto m = box_move(l, {1, 1}, {1, 1}, 'x');
  CHECK(m == make(p33, {{{2, 1}, 1}, {{0, 1}, 1}}));
  CHECK(m.dim() == l.dim());
  CHECK_THROWS(box_move(make(p33, {{{2, 1}, 1}, {{1, 1}, 1}}), {2, 1}, {1, 1}, 'x'));
  const auto y = box_move(l, {1, 1}, {1, 1}, 'y');
  CHECK(y == make(p33, {{{1, 2}, 1}, {{1, 0}, 1}}));
}

TEST_CASE("index of a regular stratum") {
  CHECK(index_of_regular_stratum({2}, {2}, p33) == make(p33, {{{2, 2}, 1}, {{1, 1}, 1}}));
  CHECK(index_of_regular_stratum({3, 1}, {3, 1}, p33) == make(p33, {{{2, 2}, 3}, {{0, 0}, 1}}));
  CHECK_THROWS_AS(index_of_regular_stratum({2, 1}, {1, 1, 1}, p33), std::invalid_argument);
}

TEST_CASE("semi-projective index") {
  auto s = semiproj_index({3, 1, 1}, {3, 1, 1}, p33);
  CHECK(s.index == make(p33, {{{2, 2}, 4}}));
  CHECK(s.string.letters() == "xxyy");
  s = semiproj_index({3, 2, 1, 1}, {3, 2, 1, 1}, p33);
  CHECK(s.index == make(p33, {{{2, 2}, 5}, {{1, 1}, 1}}));
  CHECK(s.string.letters() == "xxyxyy");
  CHECK_THROWS_AS(semiproj_index({2, 2, 1}, {3, 2}, p33), std::invalid_argument);
  CHECK_FALSE(is_semiproj_pair({2, 2, 1}, {3, 2}, p33));
}

TEST_CASE("regular strata: triangle, flip-minimality and projective count") {
  for (int a = 2; a <= 4; ++a)
    for (int b = 2; b <= 4; ++b) {
      const AlgebraParams params(a, b);
      for (int n = 1; n <= 8; ++n)
        for (const auto& ab : regular_pairs(n, params)) {
          const auto l = index_of_regular_stratum(ab.a, ab.b, params);
          INFO("a=" << a << " b=" << b << " " << ab.a.to_string() << " " << ab.b.to_string());
          REQUIRE(is_index_module(l, n));
          REQUIRE(is_flip_minimal(l));
          REQUIRE(hom_to_proj_dim(l, n) == hom_to_proj_dim_graph(l));
          REQUIRE(stratum_dim(l, n) == delta_dim(ab));
          const auto m = family_member(ab);
          REQUIRE(l.projective_summands() == n - stats(m).top_dim);
        }
    }
}

TEST_CASE("semi-projective pairs: open orbit is dense in the stratum") {
  for (int n = 2; n <= 12; ++n)
    for (const auto& a : enumerate_partitions(n, 3))
      for (const auto& b : enumerate_partitions(n, 3)) {
        if (!is_semiproj_pair(a, b, p33)) continue;
        const auto [l, c] = semiproj_index(a, b, p33);
        const auto m = string_module(c);
        INFO(a.to_string() << " " << b.to_string() << " " << c.letters());
        REQUIRE(m.dim() == n);
        REQUIRE(jordan_pair(m) == std::pair{a, b});
        REQUIRE(orbit_dim(m) == stratum_dim(l, n));
      }
}

TEST_CASE("flips preserve the index and degenerate") {
  std::mt19937_64 rng(31);
  const auto tests = short_strings(p33);
  int applied = 0;
  for (int n = 2; n <= 7; ++n)
    for (const auto& ab : regular_pairs(n, p33)) {
      const auto l = index_of_regular_stratum(ab.a, ab.b, p33);
      // spread the summands out by a few random inverse-style flips first
      BiserialIndexModule cur = l;
      for (int step = 0; step < 3; ++step) {
        std::vector<std::pair<Summand, Summand>> options;
        for (const auto& [s, ms] : cur.multiplicities())
          for (const auto& [t, mt] : cur.multiplicities()) {
            if (s == t && ms < 2) continue;
            if (s == Summand{2, 2} || t == Summand{2, 2}) continue;
            if (t.i <= s.i && t.j <= s.j) options.push_back({s, t});
          }
        if (options.empty()) break;
        const auto [big, small] = options[testing::draw(rng, 0, static_cast<int>(options.size()) - 1)];
        const auto next = flip(cur, big, small);
        INFO(ab.a.to_string() << " " << ab.b.to_string());
        REQUIRE(is_index_module(next, n));
        REQUIRE(next.dim() == cur.dim());
        REQUIRE(hom_to_proj_dim(next, n) == hom_to_proj_dim(cur, n));
        REQUIRE(hom_to_proj_dim_graph(next) == hom_to_proj_dim_graph(cur));
        REQUIRE(hom_order_consistent(next.realize(), cur.realize(), tests));
        cur = next;
        ++applied;
      }
    }
  CHECK(applied > 20);
}

TEST_CASE("box moves keep dimension and the hom count where the index survives") {
  const AlgebraParams p44(4, 4);
  for (int n = 2; n <= 7; ++n)
    for (const auto& ab : regular_pairs(n, p44)) {
      const auto l = index_of_regular_stratum(ab.a, ab.b, p44);
      for (const auto& [s, ms] : l.multiplicities())
        for (const auto& [t, mt] : l.multiplicities())
          for (char letter : {'x', 'y'}) {
            if (s == t && ms < 2) continue;
            const bool ok = letter == 'x' ? 1 <= t.i && t.i <= s.i && s.i <= 2
                                          : 1 <= t.j && t.j <= s.j && s.j <= 2;
            if (!ok) continue;
            const auto m = box_move(l, s, t, letter);
            REQUIRE(m.dim() == l.dim());
            REQUIRE(m.summands() == l.summands());
            if (is_index_module(m, n)) REQUIRE(hom_to_proj_dim(m, n) == hom_to_proj_dim_graph(m));
          }
    }
}

TEST_CASE("realization") {
  const auto l = make(p33, {{{2, 2}, 1}, {{1, 1}, 1}});
  const auto m = l.realize();
  CHECK(m.dim() == 8);
  CHECK(verify_relations(m));
  CHECK(l.summands() == 2);
  CHECK(l.projective_summands() == 1);
  CHECK(summand_word(p33, {2, 1}).letters() == "xxy");
}
