#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "codp/model.hpp"

using namespace codp;

namespace {

Model load_ok(const Json& doc) {
  std::vector<Diagnostic> diags;
  Model model = load_model(doc, diags);
  for (const auto& d : diags) {
    INFO(d.object, " ", d.code, " ", d.message);
    CHECK(false);
  }
  return model;
}

}  // namespace

TEST_CASE("poset declaration forms") {
  Json doc = Json::parse(R"({
    "posets": {
      "A": {"chain": 3},
      "B": {"antichain": ["x", "y"]},
      "AB": {"product": ["A", "B"]},
      "Aop": {"opposite": "A"},
      "E": {"elements": ["a", "b", "c"], "leq_pairs": [["a", "b"], ["b", "c"]]}
    }
  })");
  Model model = load_ok(doc);
  CHECK(model.env.poset("A") == FinitePoset::chain(3));
  CHECK(model.env.poset("AB") ==
        poset_product(FinitePoset::chain(3), FinitePoset::antichain({"x", "y"})));
  CHECK(model.env.poset("Aop") == poset_opposite(FinitePoset::chain(3)));
  // closure applied
  const FinitePoset& e = model.env.poset("E");
  CHECK(e.leq(e.index_of("a"), e.index_of("c")));
  // product registrations decompose for the wiring layer
  auto atoms = model.env.atoms_of(model.env.poset("AB"));
  REQUIRE(atoms.size() == 2);
  CHECK(atoms[0] == FinitePoset::chain(3));
}

TEST_CASE("bad declarations are collected as diagnostics, not thrown") {
  Json doc = Json::parse(R"({
    "posets": {
      "A": {"chain": 2},
      "Cycle": {"product": ["Cycle", "A"]},
      "Anti": {"elements": ["a", "b"], "leq_pairs": [["a", "b"], ["b", "a"]]}
    },
    "dps": {
      "broken": {"fun": "A", "res": "A", "feasible": [["1", "0"]]}
    },
    "cells": {
      "orphan": {"source": "Nope", "target": "A", "monad": "identity",
                 "space": [], "entries": [{"at": [], "value": "nothing"}]}
    }
  })");
  std::vector<Diagnostic> diags;
  load_model(doc, diags);
  REQUIRE(diags.size() >= 4);
  auto has = [&](const std::string& code) {
    for (const auto& d : diags)
      if (d.code == code) return true;
    return false;
  };
  CHECK(has("ParseError"));      // self-referential product
  CHECK(has("InvalidPoset"));    // antisymmetry violation
  CHECK(has("NotMonotone"));     // dp table, message carries the quadruple
  CHECK(has("UnboundName"));     // dangling poset reference
  for (const auto& d : diags)
    if (d.code == "NotMonotone") CHECK(d.message.find("(1, 0, 0, 0)") != std::string::npos);
}

TEST_CASE("threshold design problems derive their posets from the map") {
  Json doc = Json::parse(R"({
    "posets": {"A": {"chain": 2}, "B": {"chain": 3}},
    "maps": {"step": {"from": "A", "to": "B", "table": {"0": "0", "1": "2"}}},
    "dps": {"d": {"threshold": "step"}}
  })");
  Model model = load_ok(doc);
  const DesignProblem& d = model.dps.at("d");
  CHECK(d.fun() == FinitePoset::chain(2));
  CHECK(d.res() == FinitePoset::chain(3));
  CHECK(d.at(0, 0));
  CHECK_FALSE(d.at(1, 1));
  CHECK(d.at(1, 2));
}

TEST_CASE("cells require full, non-duplicated coverage of the space") {
  Json base = Json::parse(R"({
    "posets": {"A": {"chain": 2}, "U": {"antichain": ["u0", "u1"]}},
    "dps": {"id": {"fun": "A", "res": "A", "feasible": [["0","0"],["0","1"],["1","1"]]}},
    "cells": {"c": {"source": "A", "target": "A", "monad": "identity",
                    "space": ["U"],
                    "entries": [{"at": ["u0"], "value": "id"}]}}
  })");
  std::vector<Diagnostic> diags;
  load_model(base, diags);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].code == "ParseError");
  CHECK(diags[0].message.find("missing") != std::string::npos);
}

TEST_CASE("wiring parse syntax and validation of wiring references") {
  CHECK_THROWS_AS(parse_wiring(Json::parse(R"(["warp", "x"])")), ParseError);
  CHECK_THROWS_AS(parse_wiring(Json::parse(R"(["compose", ["id","A"]])")),
                  ParseError);
  WiringExpr e = parse_wiring(
      Json::parse(R"(["loop", ["compose", ["id", "A"], ["prim", "c"]], "P"])"));
  CHECK(e.kind() == WiringExpr::Kind::loop);
  CHECK(e.name() == "P");

  Json doc = Json::parse(R"({
    "posets": {"A": {"chain": 2}},
    "wirings": {"bad": ["prim", "ghost"]}
  })");
  std::vector<Diagnostic> diags;
  load_model(doc, diags);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].code == "UnboundName");
}

TEST_CASE("rationals parse from all three forms and round-trip") {
  CHECK(rat_from_json(Json(3)) == Rat(3));
  CHECK(rat_from_json(Json("2/6")) == Rat(1, 3));
  CHECK(rat_from_json(Json::parse(R"({"num": -1, "den": 4})")) == Rat(-1, 4));
  CHECK_THROWS_AS(rat_from_json(Json::parse(R"({"num": 1, "den": 0})")),
                  ParseError);
  CHECK_THROWS_AS(rat_from_json(Json("1/x")), ParseError);

  Json encoded = rat_to_json(Rat(-7, 2));
  CHECK(encoded.at("num").get<std::int64_t>() == -7);
  CHECK(encoded.at("den").get<std::int64_t>() == 2);
  CHECK(rat_from_json(encoded) == Rat(-7, 2));

  // decimal rendering is display-only and exact where possible
  CHECK(rat_to_json(Rat(13, 4), true) == Json("3.25"));
  CHECK(rat_to_json(Rat(1, 3), true) == Json("1/3"));
  CHECK(rat_to_json(Rat(-3, 5), true) == Json("-0.6"));

  // values outside int64 fall back to strings, exactly
  Rat huge = Rat(BigInt("123456789012345678901234567890"), BigInt(7));
  Json big = rat_to_json(huge);
  CHECK(big.at("num").is_string());
  CHECK(rat_from_json(big) == huge);
}

TEST_CASE("observations parse and resolve against posets") {
  auto raw = parse_observations(Json::parse(R"([
    {"f": "0", "r": "1", "outcome": "feasible"},
    {"f": "1", "r": "0", "outcome": "infeasible"}
  ])"));
  REQUIRE(raw.size() == 2);
  auto resolved =
      resolve_observations(raw, FinitePoset::chain(2), FinitePoset::chain(2));
  CHECK(resolved[0].fun_index == 0);
  CHECK(resolved[0].feasible);
  CHECK_FALSE(resolved[1].feasible);
  CHECK_THROWS_AS(
      resolve_observations(raw, FinitePoset::antichain({"x"}), FinitePoset::chain(2)),
      ElementNotInPoset);
  CHECK_THROWS_AS(parse_observations(Json::parse(R"([{"f":"0","r":"0","outcome":"maybe"}])")),
                  ParseError);
}

TEST_CASE("priors must be distributions on their declared space") {
  Json doc = Json::parse(R"({
    "posets": {"D": {"antichain": ["d0", "d1"]}},
    "priors": {"half": {"space": ["D"], "dist": [{"at": ["d0"], "prob": "1/2"}]}}
  })");
  std::vector<Diagnostic> diags;
  load_model(doc, diags);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].code == "InvalidUncertain");
}
