#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "codp/poset.hpp"
#include "codp/rng.hpp"
#include "test_support.hpp"

using namespace codp;

TEST_CASE("poset construction validates the order axioms") {
  CHECK_THROWS_AS(FinitePoset({"a", "b"}, {1, 0, 0, 0}), InvalidPoset);  // not reflexive
  CHECK_THROWS_AS(FinitePoset({"a", "b"}, {1, 1, 1, 1}), InvalidPoset);  // not antisymmetric
  CHECK_THROWS_AS(FinitePoset({"a", "a"}, {1, 0, 0, 1}), InvalidPoset);  // duplicate labels
  CHECK_THROWS_AS(FinitePoset({"a", "b", "c"},
                              {1, 1, 0,
                               0, 1, 1,
                               0, 0, 1}),
                  InvalidPoset);  // not transitive
  FinitePoset c3 = FinitePoset::chain(3);
  CHECK(c3.size() == 3);
  CHECK(c3.leq(0, 2));
  CHECK_FALSE(c3.leq(2, 0));
}

TEST_CASE("from_pairs applies the reflexive-transitive closure") {
  FinitePoset p = FinitePoset::from_pairs({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
  CHECK(p.leq(p.index_of("x"), p.index_of("z")));
  CHECK_THROWS_AS(
      FinitePoset::from_pairs({"x", "y"}, {{"x", "y"}, {"y", "x"}}),
      InvalidPoset);
  CHECK_THROWS_AS(FinitePoset::from_pairs({"x"}, {{"x", "w"}}), ElementNotInPoset);
}

TEST_CASE("product order counts multiply") {
  FinitePoset bool2 = FinitePoset::chain(2);
  FinitePoset prod = poset_product(bool2, bool2);
  CHECK(prod.size() == 4);
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      if (prod.leq(a, b)) ++pairs;
  CHECK(pairs == 9);
}

TEST_CASE("product with a one-element poset is order-isomorphic to the factor") {
  FinitePoset p = FinitePoset::from_pairs({"a", "b", "c"}, {{"a", "b"}});
  FinitePoset prod = poset_product(p, unit_poset());
  REQUIRE(prod.size() == p.size());
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      CHECK(prod.leq(a, b) == p.leq(a, b));
}

TEST_CASE("product comparabilities follow the componentwise definition") {
  FinitePoset chain2 = FinitePoset::chain(2);
  FinitePoset anti3 = FinitePoset::antichain({"x", "y", "z"});
  FinitePoset prod = poset_product(chain2, anti3);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 3; ++d)
          CHECK(prod.leq(a * 3 + b, c * 3 + d) ==
                (chain2.leq(a, c) && anti3.leq(b, d)));
}

TEST_CASE("opposite transposes and is an involution") {
  FinitePoset c2 = FinitePoset::chain(2);
  FinitePoset op = poset_opposite(c2);
  CHECK(op.leq(1, 0));
  CHECK_FALSE(op.leq(0, 1));
  CHECK(poset_opposite(op) == c2);
  FinitePoset anti = FinitePoset::antichain({"x", "y"});
  CHECK(poset_opposite(anti) == anti);
}

TEST_CASE("minimal elements of a chain and of the empty set") {
  FinitePoset c3 = FinitePoset::chain(3);
  Antichain whole = minimal_elements(c3, {0, 1, 2});
  CHECK(whole.members() == std::vector<std::size_t>{0});
  Antichain none = minimal_elements(c3, {});
  CHECK(none.empty());
}

TEST_CASE("minimal elements match the pairwise-domination oracle on a grid") {
  FinitePoset grid = poset_product(FinitePoset::chain(4), FinitePoset::chain(4));
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (rng.coin()) subset.push_back(i);
    Antichain mins = minimal_elements(grid, subset);
    // oracle: definitional O(|S|^2) scan
    std::set<std::size_t> expected;
    for (std::size_t s : subset) {
      bool dominated = false;
      for (std::size_t t2 : subset)
        if (t2 != s && grid.leq(t2, s)) dominated = true;
      if (!dominated) expected.insert(s);
    }
    CHECK(std::set<std::size_t>(mins.members().begin(), mins.members().end()) ==
          expected);
    // every subset member dominates some minimal element
    for (std::size_t s : subset) {
      bool covered = false;
      for (std::size_t m : mins.members())
        if (grid.leq(m, s)) covered = true;
      CHECK(covered);
    }
    // idempotence
    Antichain again = minimal_elements(grid, mins.members());
    CHECK(again == mins);
  }
}

TEST_CASE("antichain construction rejects comparable members") {
  FinitePoset c3 = FinitePoset::chain(3);
  CHECK_THROWS_AS(Antichain(c3, {0, 1}), InvalidAntichain);
  CHECK_NOTHROW(Antichain(FinitePoset::antichain({"x", "y"}), {0, 1}));
}

TEST_CASE("is_monotone basic cases and the exhaustive-pair oracle") {
  FinitePoset c2 = FinitePoset::chain(2);
  CHECK(is_monotone(c2, c2, {0, 1}));
  CHECK_FALSE(is_monotone(c2, c2, {1, 0}));  // order-reversing

  Rng rng(3);
  for (int t = 0; t < 60; ++t) {
    FinitePoset p = random_poset(rng, 1, 4, "p");
    FinitePoset q = random_poset(rng, 1, 4, "q");
    std::vector<std::size_t> g(p.size());
    for (auto& v : g) v = rng.below(q.size());
    bool expected = true;
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b)
        if (p.leq(a, b) && !q.leq(g[a], g[b])) expected = false;
    CHECK(is_monotone(p, q, g) == expected);
  }
}

TEST_CASE("upper sets of small posets") {
  FinitePoset c2 = FinitePoset::chain(2);
  SetFamily u2 = upper_sets(c2);
  CHECK(u2.count() == 3);  // {}, {1}, {0,1}
  CHECK(u2.contains(0b00));
  CHECK(u2.contains(0b10));
  CHECK(u2.contains(0b11));

  SetFamily ua = upper_sets(FinitePoset::antichain({"x", "y"}));
  CHECK(ua.count() == 4);

  FinitePoset grid = poset_product(FinitePoset::chain(2), FinitePoset::chain(2));
  SetFamily ug = upper_sets(grid);
  // oracle: filter all 16 subsets by closure
  std::size_t expected = 0;
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    bool closed = true;
    for (std::size_t x = 0; x < 4; ++x)
      if ((mask >> x) & 1)
        for (std::size_t y = 0; y < 4; ++y)
          if (grid.leq(x, y) && !((mask >> y) & 1)) closed = false;
    if (closed) {
      ++expected;
      CHECK(ug.contains(mask));
    }
  }
  CHECK(ug.count() == expected);
  CHECK(ug.count() == 6);
}

TEST_CASE("upper_sets refuses oversized carriers") {
  CHECK_THROWS_AS(upper_sets(FinitePoset::chain(13)), CarrierTooLarge);
  CHECK_THROWS_AS(
      generate_sigma_algebra(SetFamily(FinitePoset::chain(13), {}), 12),
      CarrierTooLarge);
}

TEST_CASE("sigma algebra generation agrees with the naive closure oracle") {
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    FinitePoset p = random_poset(rng, 1, 5, "s");
    std::vector<std::uint64_t> gens;
    const std::uint64_t full = full_mask(p.size());
    for (int g = 0; g < 3; ++g) gens.push_back(rng.below(full + 1));
    SetFamily generated = generate_sigma_algebra(SetFamily(p, gens));
    CHECK(generated == test_support::naive_closure(p, gens));
  }
}

TEST_CASE("sigma algebra of upper sets: worked examples") {
  FinitePoset c2 = FinitePoset::chain(2);
  SetFamily sigma = generate_sigma_algebra(upper_sets(c2));
  CHECK(sigma.count() == 4);  // adds {0} as the complement of {1}
  CHECK(sigma.contains(0b01));

  SetFamily trivial(c2, {0b00, 0b11});
  CHECK(generate_sigma_algebra(trivial) == trivial);
}

TEST_CASE("sigma of upper sets is the powerset for every poset up to 5 elements") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t count = 0;
    test_support::for_each_poset(n, [&](const FinitePoset& p) {
      ++count;
      SetFamily sigma = generate_sigma_algebra(upper_sets(p));
      CHECK(sigma.count() == (std::size_t{1} << n));
    });
    // labeled poset counts, OEIS A001035
    const std::size_t expected[] = {0, 1, 3, 19, 219, 4231};
    CHECK(count == expected[n]);
  }
}

TEST_CASE("sigma algebra of a product equals the rectangle-generated one (<=3)") {
  std::vector<FinitePoset> small;
  for (std::size_t n = 1; n <= 3; ++n)
    test_support::for_each_poset(n, [&](const FinitePoset& p) { small.push_back(p); });
  REQUIRE(small.size() == 23);
  for (const auto& p : small)
    for (const auto& q : small) {
      FinitePoset prod = poset_product(p, q);
      SetFamily sigma_prod = generate_sigma_algebra(upper_sets(prod));
      // rectangles A x B with A in Sigma_P, B in Sigma_Q
      SetFamily sp = generate_sigma_algebra(upper_sets(p));
      SetFamily sq = generate_sigma_algebra(upper_sets(q));
      std::vector<std::uint64_t> rects;
      for (std::uint64_t a : sp.sets())
        for (std::uint64_t b : sq.sets()) {
          std::uint64_t rect = 0;
          for (std::size_t i = 0; i < p.size(); ++i)
            if ((a >> i) & 1)
              for (std::size_t j = 0; j < q.size(); ++j)
                if ((b >> j) & 1) rect |= std::uint64_t{1} << (i * q.size() + j);
          rects.push_back(rect);
        }
      SetFamily sigma_rect = generate_sigma_algebra(SetFamily(prod, rects));
      CHECK(sigma_prod == sigma_rect);
    }
}

TEST_CASE("monotone map helpers") {
  FinitePoset c2 = FinitePoset::chain(2), c3 = FinitePoset::chain(3);
  CHECK_THROWS_AS(MonotoneMap(c2, c2, {1, 0}), NotMonotone);
  MonotoneMap inc(c2, c3, {0, 2});
  MonotoneMap idc3 = MonotoneMap::identity(c3);
  CHECK(inc.then(idc3) == inc);
  MonotoneMap sw = MonotoneMap::swap(c2, c3);
  CHECK(sw.dom() == poset_product(c2, c3));
  CHECK(sw.cod() == poset_product(c3, c2));
  CHECK(sw(0 * 3 + 2) == 2 * 2 + 0);
}
