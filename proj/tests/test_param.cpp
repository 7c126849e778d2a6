#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "codp/param.hpp"
#include "codp/rng.hpp"

using namespace codp;

namespace {

DesignProblem widen(Rng& rng, const DesignProblem& lo) {
  DesignProblem extra = random_monotone_dp(rng, lo.fun(), lo.res());
  std::vector<uint8_t> table(lo.table().size());
  for (std::size_t i = 0; i < table.size(); ++i)
    table[i] = lo.table()[i] | extra.table()[i];
  return DesignProblem(lo.fun(), lo.res(), table);
}

// Discrete factors keep interval cells trivially monotone in the parameter.
ParamSpace random_space(Rng& rng, const std::string& prefix, std::size_t arity) {
  std::vector<FinitePoset> factors;
  for (std::size_t i = 0; i < arity; ++i) {
    std::vector<std::string> labels;
    const std::size_t n = 2 + rng.below(2);
    for (std::size_t j = 0; j < n; ++j)
      labels.push_back(prefix + std::to_string(i) + "_" + std::to_string(j));
    factors.push_back(FinitePoset::antichain(labels));
  }
  return ParamSpace(std::move(factors));
}

ParamCell random_cell(Rng& rng, Monad kind, const FinitePoset& src,
                      const FinitePoset& tgt, const ParamSpace& space) {
  std::vector<Uncertain<DesignProblem>> table;
  for (std::size_t i = 0; i < space.size(); ++i) {
    switch (kind) {
      case Monad::identity:
        table.push_back(
            Uncertain<DesignProblem>::exactly(random_monotone_dp(rng, src, tgt)));
        break;
      case Monad::powerset: {
        std::vector<DesignProblem> dps;
        const std::size_t k = 1 + rng.below(3);
        for (std::size_t j = 0; j < k; ++j)
          dps.push_back(random_monotone_dp(rng, src, tgt));
        table.push_back(Uncertain<DesignProblem>::subset(std::move(dps)));
        break;
      }
      case Monad::interval: {
        DesignProblem lo = random_monotone_dp(rng, src, tgt);
        table.push_back(
            Uncertain<DesignProblem>::between(lo, widen(rng, lo), dp_hom_leq()));
        break;
      }
      case Monad::dist: {
        std::vector<DesignProblem> dps;
        const std::size_t k = 1 + rng.below(3);
        for (std::size_t j = 0; j < k; ++j)
          dps.push_back(random_monotone_dp(rng, src, tgt));
        std::vector<std::pair<DesignProblem, Rat>> entries;
        for (unsigned chip = 0; chip < 4; ++chip)
          entries.emplace_back(dps[rng.below(dps.size())], Rat(1, 4));
        table.push_back(Uncertain<DesignProblem>::weighted(std::move(entries)));
        break;
      }
      default:
        break;
    }
  }
  return ParamCell(src, tgt, space, kind, std::move(table));
}

const Monad kFour[] = {Monad::identity, Monad::powerset, Monad::interval,
                       Monad::dist};

}  // namespace

TEST_CASE("parameter spaces enumerate tuples in row-major order") {
  ParamSpace unit;
  CHECK(unit.size() == 1);
  CHECK(unit.tuple_at(0).empty());

  ParamSpace s({FinitePoset::chain(2), FinitePoset::chain(3)});
  CHECK(s.size() == 6);
  CHECK(s.tuple_at(0) == std::vector<std::size_t>{0, 0});
  CHECK(s.tuple_at(5) == std::vector<std::size_t>{1, 2});
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(s.index_of(s.tuple_at(i)) == i);
  CHECK(s.tuple_leq({0, 1}, {1, 2}));
  CHECK_FALSE(s.tuple_leq({1, 0}, {0, 2}));

  ParamSpace with_unit({FinitePoset::chain(2), unit_poset(), FinitePoset::chain(3)});
  CHECK(drop_units(with_unit) == s);
}

TEST_CASE("the inclusion of DP is the 2-categorical identity and is injective") {
  FinitePoset p = FinitePoset::chain(3);
  for (Monad kind : kFour) {
    ParamCell lifted = cell_lift(dp_identity(p), kind);
    CHECK(lifted == cell_identity(p, kind));
    CHECK(lifted.space().arity() == 0);
  }
  Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    FinitePoset f = random_poset(rng, 1, 4, "f");
    FinitePoset r = random_poset(rng, 1, 4, "r");
    DesignProblem d1 = random_monotone_dp(rng, f, r);
    DesignProblem d2 = random_monotone_dp(rng, f, r);
    if (!(d1 == d2))
      CHECK_FALSE(cell_lift(d1, Monad::dist) == cell_lift(d2, Monad::dist));
  }
}

TEST_CASE("strictness of the inclusion on 50 random pairs") {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    FinitePoset f = random_poset(rng, 1, 3, "f");
    FinitePoset m = random_poset(rng, 1, 3, "m");
    FinitePoset r = random_poset(rng, 1, 3, "r");
    DesignProblem d1 = random_monotone_dp(rng, f, m);
    DesignProblem d2 = random_monotone_dp(rng, m, r);
    for (Monad kind : kFour) {
      CHECK(cell_lift(dp_compose(d1, d2), kind) ==
            cell_compose(cell_lift(d1, kind), cell_lift(d2, kind)));
      CHECK(cell_lift(dp_tensor(d1, d2), kind) ==
            cell_tensor(cell_lift(d1, kind), cell_lift(d2, kind)));
    }
  }
}

TEST_CASE("interval composition composes worst and best cases endpointwise") {
  Rng rng(11);
  FinitePoset f = FinitePoset::chain(2);
  FinitePoset m = FinitePoset::chain(3);
  FinitePoset r = FinitePoset::chain(2);
  ParamSpace bm({FinitePoset::antichain({"b0", "b1"})});
  ParamSpace cm({FinitePoset::antichain({"c0", "c1", "c2"})});
  ParamCell battery = random_cell(rng, Monad::interval, f, m, bm);
  ParamCell chassis = random_cell(rng, Monad::interval, m, r, cm);
  ParamCell composed = cell_compose(battery, chassis);
  REQUIRE(composed.space().size() == 6);
  for (std::size_t i = 0; i < bm.size(); ++i)
    for (std::size_t j = 0; j < cm.size(); ++j) {
      const auto& entry = composed.at(i * cm.size() + j);
      CHECK(entry.lo() == dp_compose(battery.at(i).lo(), chassis.at(j).lo()));
      CHECK(entry.hi() == dp_compose(battery.at(i).hi(), chassis.at(j).hi()));
    }
}

TEST_CASE("dist composition is the pushforward of the product measure") {
  Rng rng(13);
  FinitePoset f = FinitePoset::chain(2), m = FinitePoset::chain(2),
              r = FinitePoset::chain(2);
  ParamSpace u({FinitePoset::antichain({"u0", "u1"})});
  ParamSpace v({FinitePoset::antichain({"v0", "v1"})});
  for (int t = 0; t < 20; ++t) {
    ParamCell c1 = random_cell(rng, Monad::dist, f, m, u);
    ParamCell c2 = random_cell(rng, Monad::dist, m, r, v);
    ParamCell composed = cell_compose(c1, c2);
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) {
        std::map<DesignProblem, Rat> expected;
        const auto& m1 = c1.at(i);
        const auto& m2 = c2.at(j);
        for (std::size_t a = 0; a < m1.support().size(); ++a)
          for (std::size_t b = 0; b < m2.support().size(); ++b)
            expected[dp_compose(m1.support()[a], m2.support()[b])] +=
                m1.weights()[a] * m2.weights()[b];
        const auto& got = composed.at(i * v.size() + j);
        REQUIRE(got.support().size() == expected.size());
        for (std::size_t k = 0; k < got.support().size(); ++k)
          CHECK(got.weights()[k] == expected.at(got.support()[k]));
      }
  }
}

TEST_CASE("tensor of cells: lifts, unit coherence, powerset enumeration") {
  Rng rng(17);
  FinitePoset p = FinitePoset::chain(2), q = FinitePoset::chain(2);
  DesignProblem d1 = random_monotone_dp(rng, p, q);
  DesignProblem d2 = random_monotone_dp(rng, q, p);
  for (Monad kind : kFour)
    CHECK(cell_tensor(cell_lift(d1, kind), cell_lift(d2, kind)) ==
          cell_lift(dp_tensor(d1, d2), kind));

  // powerset: the composite set is the set of pairwise tensors
  ParamSpace u({FinitePoset::antichain({"u0", "u1"})});
  ParamCell s1 = random_cell(rng, Monad::powerset, p, q, u);
  ParamCell s2 = random_cell(rng, Monad::powerset, q, p, ParamSpace());
  ParamCell prod = cell_tensor(s1, s2);
  for (std::size_t i = 0; i < u.size(); ++i) {
    std::vector<DesignProblem> expected;
    for (const auto& a : s1.at(i).support())
      for (const auto& b : s2.at(0).support()) expected.push_back(dp_tensor(a, b));
    CHECK(prod.at(i) == Uncertain<DesignProblem>::subset(std::move(expected)));
  }

  // tensor with the identity on the unit poset only pads labels
  ParamCell padded = cell_tensor(s1, cell_identity(unit_poset(), Monad::powerset));
  REQUIRE(padded.space() == s1.space());
  for (std::size_t i = 0; i < u.size(); ++i) {
    REQUIRE(padded.at(i).support().size() == s1.at(i).support().size());
    for (std::size_t k = 0; k < padded.at(i).support().size(); ++k)
      CHECK(padded.at(i).support()[k].table() == s1.at(i).support()[k].table());
  }
}

TEST_CASE("reparametrization: identity, constant selector, kernel oracle") {
  Rng rng(19);
  FinitePoset p = FinitePoset::chain(2), q = FinitePoset::chain(3);
  ParamSpace u({FinitePoset::antichain({"u0", "u1", "u2"})});
  for (Monad kind : kFour) {
    ParamCell c = random_cell(rng, kind, p, q, u);
    CHECK(cell_reparam(Reparam::identity(kind, u), c) == c);
    // constant point selector picks out one entry
    Reparam constant(ParamSpace(), u, kind, {monad_unit(kind, std::vector<std::size_t>{1})});
    ParamCell picked = cell_reparam(constant, c);
    CHECK(picked.space().arity() == 0);
    CHECK(picked.at(0) == c.at(1));
  }

  // dist: reparam along a stochastic map is kernel composition
  ParamSpace a({FinitePoset::antichain({"a0", "a1"})});
  ParamCell c = random_cell(rng, Monad::dist, p, q, u);
  std::vector<Uncertain<std::vector<std::size_t>>> phi_table;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<std::pair<std::vector<std::size_t>, Rat>> entries;
    for (unsigned chip = 0; chip < 4; ++chip)
      entries.emplace_back(std::vector<std::size_t>{rng.below(3)}, Rat(1, 4));
    phi_table.push_back(
        Uncertain<std::vector<std::size_t>>::weighted(std::move(entries)));
  }
  Reparam phi(a, u, Monad::dist, std::move(phi_table));
  ParamCell reparamed = cell_reparam(phi, c);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::map<DesignProblem, Rat> expected;
    const auto& mix = phi.at(i);
    for (std::size_t s = 0; s < mix.support().size(); ++s) {
      const auto& inner = c.at(u.index_of(mix.support()[s]));
      for (std::size_t k = 0; k < inner.support().size(); ++k)
        expected[inner.support()[k]] += mix.weights()[s] * inner.weights()[k];
    }
    const auto& got = reparamed.at(i);
    REQUIRE(got.support().size() == expected.size());
    for (std::size_t k = 0; k < got.support().size(); ++k)
      CHECK(got.weights()[k] == expected.at(got.support()[k]));
  }
}

TEST_CASE("check_2cell on identities, constants, and a perturbed negative") {
  Rng rng(23);
  FinitePoset p = FinitePoset::chain(2), q = FinitePoset::chain(3);
  ParamSpace u({FinitePoset::antichain({"u0", "u1"})});
  for (Monad kind : kFour) {
    ParamCell g = random_cell(rng, kind, p, q, u);
    CHECK(check_2cell(Reparam::identity(kind, u), g, g));

    // f = constant cell equal to g's entry 0, phi = constant selector
    ParamCell f(p, q, ParamSpace(), kind, {g.at(0)});
    Reparam sel(ParamSpace(), u, kind, {monad_unit(kind, std::vector<std::size_t>{0})});
    CHECK(check_2cell(sel, f, g));

    // perturbed: point at the other entry unless the cell is constant
    Reparam wrong(ParamSpace(), u, kind, {monad_unit(kind, std::vector<std::size_t>{1})});
    if (!(g.at(1) == g.at(0))) CHECK_FALSE(check_2cell(wrong, f, g));

    ParamCell mismatched = random_cell(rng, kind, p, q, ParamSpace());
    CHECK_THROWS_AS(check_2cell(sel, mismatched, random_cell(rng, kind, q, p, u)),
                    ObjectMismatch);
  }
}

TEST_CASE("vertical and horizontal 2-cell composition, middle-four exchange") {
  Rng rng(29);
  auto random_reparam = [&](Monad kind, const ParamSpace& from,
                            const ParamSpace& to) {
    std::vector<Uncertain<std::vector<std::size_t>>> table;
    for (std::size_t i = 0; i < from.size(); ++i) {
      switch (kind) {
        case Monad::identity:
          table.push_back(monad_unit(kind, to.tuple_at(rng.below(to.size()))));
          break;
        case Monad::powerset: {
          std::vector<std::vector<std::size_t>> tuples;
          const std::size_t k = 1 + rng.below(2);
          for (std::size_t j = 0; j < k; ++j)
            tuples.push_back(to.tuple_at(rng.below(to.size())));
          table.push_back(
              Uncertain<std::vector<std::size_t>>::subset(std::move(tuples)));
          break;
        }
        case Monad::dist: {
          std::vector<std::pair<std::vector<std::size_t>, Rat>> entries;
          for (unsigned chip = 0; chip < 2; ++chip)
            entries.emplace_back(to.tuple_at(rng.below(to.size())), Rat(1, 2));
          table.push_back(
              Uncertain<std::vector<std::size_t>>::weighted(std::move(entries)));
          break;
        }
        case Monad::interval: {
          // constant tables are monotone regardless of the orders
          if (i == 0)
            table.push_back(monad_unit(kind, to.tuple_at(rng.below(to.size()))));
          else
            table.push_back(table.front());
          break;
        }
        default:
          break;
      }
    }
    return Reparam(from, to, kind, std::move(table));
  };

  for (Monad kind : kFour) {
    ParamSpace a1 = random_space(rng, "a", 1), b1 = random_space(rng, "b", 1),
               c1 = random_space(rng, "c", 1);
    ParamSpace a2 = random_space(rng, "d", 1), b2 = random_space(rng, "e", 1),
               c2 = random_space(rng, "g", 1);
    Reparam phi1 = random_reparam(kind, a1, b1);
    Reparam psi1 = random_reparam(kind, b1, c1);
    Reparam phi2 = random_reparam(kind, a2, b2);
    Reparam psi2 = random_reparam(kind, b2, c2);

    CHECK(twocell_vcompose(Reparam::identity(kind, a1), phi1) == phi1);
    CHECK(twocell_vcompose(phi1, Reparam::identity(kind, b1)) == phi1);
    CHECK(twocell_hcompose(Reparam::identity(kind, a1),
                           Reparam::identity(kind, a2)) ==
          Reparam::identity(kind, space_concat(a1, a2)));

    CHECK(twocell_hcompose(twocell_vcompose(phi1, psi1),
                           twocell_vcompose(phi2, psi2)) ==
          twocell_vcompose(twocell_hcompose(phi1, phi2),
                           twocell_hcompose(psi1, psi2)));
  }
}

TEST_CASE("tensorator: identity on unit spaces, exhaustive check on 2-point spaces") {
  Rng rng(31);
  FinitePoset p = FinitePoset::chain(2);
  // all unit spaces: the tensorator is the identity reparam on the unit space
  {
    DesignProblem d = random_monotone_dp(rng, p, p);
    ParamCell l = cell_lift(d, Monad::identity);
    Reparam m = tensorator(l, l, l, l);
    CHECK(m == Reparam::identity(Monad::identity, ParamSpace()));
  }

  for (Monad kind : kFour) {
    for (int t = 0; t < 25; ++t) {
      ParamSpace u1 = random_space(rng, "u", 1), u2 = random_space(rng, "v", 1),
                 p1 = random_space(rng, "p", 1), p2 = random_space(rng, "q", 1);
      ParamCell f1 = random_cell(rng, kind, p, p, u1);
      ParamCell f2 = random_cell(rng, kind, p, p, u2);
      ParamCell g1 = random_cell(rng, kind, p, p, p1);
      ParamCell g2 = random_cell(rng, kind, p, p, p2);
      ParamCell lhs = cell_compose(cell_tensor(f1, f2), cell_tensor(g1, g2));
      ParamCell rhs = cell_tensor(cell_compose(f1, g1), cell_compose(f2, g2));
      // raw interchange fails: the parameter spaces are genuinely permuted
      CHECK_FALSE(lhs == rhs);
      Reparam m = tensorator(f1, f2, g1, g2);
      CHECK(check_2cell(m, lhs, rhs));
    }
  }
}

TEST_CASE("symmetry cell: involution and naturality up to the parameter swap") {
  Rng rng(37);
  FinitePoset p = FinitePoset::chain(2);
  FinitePoset q = FinitePoset::antichain({"x", "y"});
  for (Monad kind : kFour) {
    ParamCell s = symmetry_cell(p, q, kind);
    ParamCell s_back = symmetry_cell(q, p, kind);
    ParamCell round = cell_compose(s, s_back);
    CHECK(round == cell_identity(poset_product(p, q), kind));

    ParamSpace u1 = random_space(rng, "u", 1), u2 = random_space(rng, "v", 1);
    ParamCell f1 = random_cell(rng, kind, p, p, u1);
    ParamCell f2 = random_cell(rng, kind, q, q, u2);
    ParamCell lhs = cell_compose(symmetry_cell(p, q, kind), cell_tensor(f2, f1));
    ParamCell rhs = cell_compose(cell_tensor(f1, f2), symmetry_cell(p, q, kind));
    Reparam sw = symmetry_witness(f1, f2);
    CHECK(check_2cell(sw, lhs, rhs));
  }
}

TEST_CASE("horizontal composition of 1-cells is associative exactly") {
  Rng rng(41);
  FinitePoset w = FinitePoset::chain(2);
  for (Monad kind : kFour) {
    for (int t = 0; t < 15; ++t) {
      ParamCell a = random_cell(rng, kind, w, w, random_space(rng, "a", 1));
      ParamCell b = random_cell(rng, kind, w, w, random_space(rng, "b", 1));
      ParamCell c = random_cell(rng, kind, w, w, random_space(rng, "c", 1));
      CHECK(cell_compose(cell_compose(a, b), c) ==
            cell_compose(a, cell_compose(b, c)));
      // identity cells are strict units
      CHECK(cell_compose(cell_identity(w, kind), a) == a);
      CHECK(cell_compose(a, cell_identity(w, kind)) == a);
    }
  }
}

TEST_CASE("unit-space factors normalize away") {
  Rng rng(43);
  FinitePoset w = FinitePoset::chain(2);
  ParamSpace with_unit({unit_poset(), FinitePoset::antichain({"u0", "u1"})});
  ParamCell c = random_cell(rng, Monad::powerset, w, w, with_unit);
  ParamCell n = normalized(c);
  CHECK(n.space().arity() == 1);
  CHECK(n.table() == c.table());
  // composing with a lifted cell normalizes the unit factor away
  ParamCell composed = cell_compose(c, cell_identity(w, Monad::powerset));
  CHECK(composed.space() == n.space());
  CHECK(composed == n);
}

TEST_CASE("whiskering: reparametrization distributes over composition") {
  Rng rng(47);
  FinitePoset w = FinitePoset::chain(2);
  for (Monad kind : {Monad::identity, Monad::powerset, Monad::dist}) {
    for (int t = 0; t < 10; ++t) {
      ParamSpace u1 = random_space(rng, "u", 1), u2 = random_space(rng, "v", 1);
      ParamSpace a1 = random_space(rng, "a", 1), a2 = random_space(rng, "b", 1);
      ParamCell c1 = random_cell(rng, kind, w, w, u1);
      ParamCell c2 = random_cell(rng, kind, w, w, u2);
      auto mk_phi = [&](const ParamSpace& from, const ParamSpace& to) {
        std::vector<Uncertain<std::vector<std::size_t>>> table;
        for (std::size_t i = 0; i < from.size(); ++i)
          table.push_back(monad_unit(kind, to.tuple_at(rng.below(to.size()))));
        return Reparam(from, to, kind, std::move(table));
      };
      Reparam phi1 = mk_phi(a1, u1);
      Reparam phi2 = mk_phi(a2, u2);
      CHECK(cell_reparam(twocell_hcompose(phi1, phi2), cell_compose(c1, c2)) ==
            cell_compose(cell_reparam(phi1, c1), cell_reparam(phi2, c2)));
    }
  }
}

TEST_CASE("cells validate their invariants") {
  FinitePoset p = FinitePoset::chain(2), q = FinitePoset::chain(3);
  Rng rng(53);
  DesignProblem d = random_monotone_dp(rng, p, q);
  // wrong posets in an entry
  CHECK_THROWS_AS(ParamCell(q, p, ParamSpace(), Monad::identity,
                            {Uncertain<DesignProblem>::exactly(d)}),
                  ObjectMismatch);
  // wrong monad in an entry
  CHECK_THROWS_AS(ParamCell(p, q, ParamSpace(), Monad::powerset,
                            {Uncertain<DesignProblem>::exactly(d)}),
                  MonadMismatch);
  // the harness-only mutant is rejected outright
  CHECK_THROWS_AS(ParamCell(p, q, ParamSpace(), Monad::powerset_empty,
                            {Uncertain<DesignProblem>::subset_or_empty({})}),
                  MonadMismatch);
  // mixing instances in compose
  CHECK_THROWS_AS(cell_compose(cell_identity(p, Monad::dist),
                               cell_identity(p, Monad::powerset)),
                  MonadMismatch);
  // promote is the only bridge
  ParamCell plain = cell_lift(d, Monad::identity);
  ParamCell promoted = promote(plain, Monad::dist);
  CHECK(promoted == cell_lift(d, Monad::dist));
  CHECK_THROWS_AS(promote(promoted, Monad::powerset), MonadMismatch);

  // interval cells must be monotone in an ordered parameter
  ParamSpace chain_space({FinitePoset::chain(2)});
  DesignProblem lo = DesignProblem::all_false(p, q);
  DesignProblem hi = DesignProblem::all_true(p, q);
  auto leq = dp_hom_leq();
  CHECK_THROWS_AS(
      ParamCell(p, q, chain_space, Monad::interval,
                {Uncertain<DesignProblem>::between(hi, hi, leq),
                 Uncertain<DesignProblem>::between(lo, lo, leq)}),
      NotMonotone);
  CHECK_NOTHROW(ParamCell(p, q, chain_space, Monad::interval,
                          {Uncertain<DesignProblem>::between(lo, lo, leq),
                           Uncertain<DesignProblem>::between(lo, hi, leq)}));
}
