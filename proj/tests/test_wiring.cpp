#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "codp/rng.hpp"
#include "codp/wiring.hpp"

using namespace codp;

namespace {

// Desk-scale electric vehicle: chassis provides (velocity, total load) for
// power; battery provides power for (cost, mass); battery mass feeds back
// into the load junction.
struct EvWorld {
  FinitePoset v = FinitePoset::chain_labeled({"v0", "v1", "v2"});
  FinitePoset l = FinitePoset::chain_labeled({"l0", "l1", "l2", "l3"});
  FinitePoset m = FinitePoset::chain_labeled({"m0", "m1", "m2"});
  FinitePoset p = FinitePoset::chain_labeled({"p0", "p1", "p2", "p3"});
  FinitePoset c = FinitePoset::chain_labeled({"c0", "c1", "c2", "c3", "c4", "c5"});
  FinitePoset vl, vlm, cm;
  WiringEnv env;

  MonotoneMap junction() const {
    std::vector<std::size_t> map(vlm.size());
    for (std::size_t vi = 0; vi < 3; ++vi)
      for (std::size_t li = 0; li < 4; ++li)
        for (std::size_t mi = 0; mi < 3; ++mi)
          map[(vi * 4 + li) * 3 + mi] = vi * 4 + std::min<std::size_t>(li + mi, 3);
    return MonotoneMap(vlm, vl, map);
  }

  MonotoneMap chassis_phi(std::size_t surcharge) const {
    std::vector<std::size_t> map(vl.size());
    for (std::size_t vi = 0; vi < 3; ++vi)
      for (std::size_t li = 0; li < 4; ++li)
        map[vi * 4 + li] =
            std::min<std::size_t>(vi + (li + 1) / 2 + surcharge, 3);
    return MonotoneMap(vl, p, map);
  }

  MonotoneMap battery_psi(std::size_t surcharge) const {
    std::vector<std::size_t> map(p.size());
    for (std::size_t pi = 0; pi < 4; ++pi) {
      std::size_t cost = std::min<std::size_t>(pi + surcharge, 5);
      std::size_t mass = std::min<std::size_t>(pi, 2);
      map[pi] = cost * 3 + mass;
    }
    return MonotoneMap(p, cm, map);
  }

  EvWorld() {
    vl = poset_product(v, l);
    vlm = poset_product(vl, m);
    cm = poset_product(c, m);
    env.posets = {{"V", v}, {"L", l}, {"M", m}, {"P", p}, {"C", c},
                  {"VL", vl}, {"VLM", vlm}, {"CM", cm}};
    env.register_atoms(vl, {v, l});
    env.register_atoms(vlm, {v, l, m});
    env.register_atoms(cm, {c, m});
    env.maps.emplace("junction", junction());
    env.cells.emplace("chassis",
                      cell_lift(dp_threshold(chassis_phi(0)), Monad::identity));
    env.cells.emplace("battery",
                      cell_lift(dp_threshold(battery_psi(0)), Monad::identity));
  }

  WiringExpr ev_expr(const std::string& chassis = "chassis",
                     const std::string& battery = "battery") const {
    return WiringExpr::loop(
        WiringExpr::compose(
            WiringExpr::compose(WiringExpr::lift("junction"),
                                WiringExpr::prim(chassis)),
            WiringExpr::prim(battery)),
        "M");
  }

  // Literal triple-loop feasibility of the closed diagram.
  bool oracle(const DesignProblem& chassis, const DesignProblem& battery,
              std::size_t vi, std::size_t li, std::size_t ci) const {
    for (std::size_t mi = 0; mi < 3; ++mi) {
      std::size_t lhat = std::min<std::size_t>(li + mi, 3);
      for (std::size_t pi = 0; pi < 4; ++pi)
        if (chassis.at(vi * 4 + lhat, pi) && battery.at(pi, ci * 3 + mi))
          return true;
    }
    return false;
  }
};

}  // namespace

TEST_CASE("typechecking: matches, mismatches, unbound names") {
  EvWorld w;
  TypedExpr ok = typecheck(
      w.env, WiringExpr::compose(WiringExpr::id("P"), WiringExpr::id("P")));
  CHECK(ok.source() == w.p);
  CHECK(ok.target() == w.p);
  CHECK(ok.monad == Monad::identity);
  CHECK(ok.space.arity() == 0);

  CHECK_THROWS_AS(
      typecheck(w.env,
                WiringExpr::compose(WiringExpr::id("P"), WiringExpr::id("C"))),
      ObjectMismatch);
  CHECK_THROWS_AS(typecheck(w.env, WiringExpr::prim("engine")), UnboundName);
  CHECK_THROWS_AS(
      typecheck(w.env, WiringExpr::loop(WiringExpr::id("P"), "M")),
      LoopFactorMissing);

  TypedExpr ev = typecheck(w.env, w.ev_expr());
  CHECK(ev.source() == w.vl);
  CHECK(ev.target() == w.c);
}

TEST_CASE("cell-level yanking: loop of a swap is the identity cell") {
  EvWorld w;
  WiringEnv env = w.env;
  FinitePoset pp = poset_product(w.p, w.p);
  env.posets.emplace("PP", pp);
  env.register_atoms(pp, {w.p, w.p});
  env.maps.emplace("swapP", MonotoneMap::swap(w.p, w.p));

  WiringExpr yank = WiringExpr::loop(
      WiringExpr::tensor(WiringExpr::id("V"), WiringExpr::lift("swapP")), "P");
  ParamCell result = evaluate(env, yank);
  CHECK(result == cell_identity(poset_product(w.v, w.p), Monad::identity));
}

TEST_CASE("the EV composite equals the hand-composed chain") {
  EvWorld w;
  ParamCell via_wiring = evaluate(w.env, w.ev_expr());

  DesignProblem chassis = dp_threshold(w.chassis_phi(0));
  DesignProblem battery = dp_threshold(w.battery_psi(0));
  DesignProblem chain = dp_trace(
      dp_compose(dp_compose(dp_lift_monotone(w.junction()), chassis), battery),
      w.vl, w.c, w.m);
  CHECK(via_wiring == cell_lift(chain, Monad::identity));

  // and the chain agrees with the literal feasibility oracle
  for (std::size_t vi = 0; vi < 3; ++vi)
    for (std::size_t li = 0; li < 4; ++li)
      for (std::size_t ci = 0; ci < 6; ++ci)
        CHECK(chain.at(vi * 4 + li, ci) == w.oracle(chassis, battery, vi, li, ci));
}

TEST_CASE("evaluation respects the inclusion of DP") {
  EvWorld w;
  // all-lifted expression, evaluated in DP then lifted
  WiringExpr expr = WiringExpr::compose(
      WiringExpr::compose(WiringExpr::lift("junction"), WiringExpr::prim("chassis")),
      WiringExpr::prim("battery"));
  ParamCell via_cells = evaluate(w.env, expr);
  DesignProblem direct = dp_compose(
      dp_compose(dp_lift_monotone(w.junction()), dp_threshold(w.chassis_phi(0))),
      dp_threshold(w.battery_psi(0)));
  CHECK(via_cells == cell_lift(direct, Monad::identity));
}

TEST_CASE("composition grouping does not change the evaluated cell") {
  EvWorld w;
  WiringExpr left = WiringExpr::compose(
      WiringExpr::compose(WiringExpr::lift("junction"), WiringExpr::prim("chassis")),
      WiringExpr::prim("battery"));
  WiringExpr right = WiringExpr::compose(
      WiringExpr::lift("junction"),
      WiringExpr::compose(WiringExpr::prim("chassis"), WiringExpr::prim("battery")));
  CHECK(evaluate(w.env, left) == evaluate(w.env, right));
}

TEST_CASE("loop of an expression ignoring the looped wire is a projection") {
  EvWorld w;
  WiringEnv env = w.env;
  Rng rng(5);
  DesignProblem core = random_monotone_dp(rng, w.v, w.c);
  env.cells.emplace("core", cell_lift(core, Monad::identity));
  WiringExpr expr = WiringExpr::loop(
      WiringExpr::tensor(WiringExpr::prim("core"), WiringExpr::id("M")), "M");
  CHECK(evaluate(env, expr) == cell_lift(core, Monad::identity));
}

TEST_CASE("monad resolution and explicit mismatch errors") {
  EvWorld w;
  WiringEnv env = w.env;
  DesignProblem chassis = dp_threshold(w.chassis_phi(0));
  DesignProblem chassis_hi = dp_threshold(w.chassis_phi(1));
  env.cells.emplace(
      "chassis_pow",
      ParamCell(w.vl, w.p, ParamSpace(), Monad::powerset,
                {Uncertain<DesignProblem>::subset({chassis, chassis_hi})}));
  env.cells.emplace("battery_dist",
                    promote(cell_lift(dp_threshold(w.battery_psi(0)),
                                      Monad::identity),
                            Monad::dist));

  // an unambiguous powerset expression: plumbing adapts to the instance
  WiringExpr pow_expr = WiringExpr::compose(WiringExpr::lift("junction"),
                                            WiringExpr::prim("chassis_pow"));
  ParamCell pow_cell = evaluate(env, pow_expr);
  CHECK(pow_cell.kind() == Monad::powerset);

  // mixing instances is an error, not a coercion
  CHECK_THROWS_AS(
      typecheck(env, WiringExpr::compose(WiringExpr::prim("chassis_pow"),
                                         WiringExpr::prim("battery_dist"))),
      MonadMismatch);
  CHECK_THROWS_AS(
      typecheck(env, WiringExpr::compose(WiringExpr::prim("chassis"),
                                         WiringExpr::prim("battery_dist"))),
      MonadMismatch);
}

TEST_CASE("reparametrization nodes precompose the parameter") {
  EvWorld w;
  WiringEnv env = w.env;
  FinitePoset bm = FinitePoset::antichain({"bA", "bB"});
  ParamSpace bspace({bm});
  DesignProblem cheap = dp_threshold(w.battery_psi(0));
  DesignProblem pricey = dp_threshold(w.battery_psi(1));
  env.cells.emplace(
      "battery_dist",
      ParamCell(w.p, w.cm, bspace, Monad::dist,
                {Uncertain<DesignProblem>::weighted({{cheap, Rat(1)}}),
                 Uncertain<DesignProblem>::weighted(
                     {{cheap, Rat(1, 3)}, {pricey, Rat(2, 3)}})}));
  FinitePoset d = FinitePoset::antichain({"d0", "d1"});
  ParamSpace dspace({d});
  Reparam market(
      dspace, bspace, Monad::dist,
      {Uncertain<std::vector<std::size_t>>::weighted(
           {{{0}, Rat(1, 2)}, {{1}, Rat(1, 2)}}),
       Uncertain<std::vector<std::size_t>>::weighted({{{1}, Rat(1)}})});
  env.reparams.emplace("market", market);

  WiringExpr expr =
      WiringExpr::reparam("market", WiringExpr::prim("battery_dist"));
  ParamCell reparamed = evaluate(env, expr);
  CHECK(reparamed == cell_reparam(market, env.cell("battery_dist")));
  CHECK(reparamed.space() == dspace);

  // space mismatch is reported
  Reparam wrong(dspace, dspace, Monad::dist,
                {monad_unit(Monad::dist, std::vector<std::size_t>{0}),
                 monad_unit(Monad::dist, std::vector<std::size_t>{1})});
  env.reparams.emplace("wrong", wrong);
  CHECK_THROWS_AS(
      typecheck(env, WiringExpr::reparam("wrong", WiringExpr::prim("battery_dist"))),
      ObjectMismatch);
}
