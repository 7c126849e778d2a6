#pragma once

#include <map>
#include <string>
#include <vector>

#include "codp/jsonio.hpp"
#include "codp/learning.hpp"
#include "codp/queries.hpp"
#include "codp/wiring.hpp"

namespace codp {

struct Diagnostic {
  std::string object;
  std::string code;
  std::string message;
};

struct RawObservation {
  std::string fun_label;
  std::string res_label;
  bool feasible = true;
};

struct NamedPrior {
  ParamSpace space;
  std::vector<Rat> weights;
};

// A fully resolved model file: named posets, maps, design problems, cells,
// reparams, wiring expressions, costs, priors, theta families, observations.
struct Model {
  WiringEnv env;
  std::map<std::string, DesignProblem> dps;
  std::map<std::string, WiringExpr> wirings;
  std::map<std::string, CostMap> costs;
  std::map<std::string, NamedPrior> priors;
  std::map<std::string, ThetaFamily> families;
  std::vector<RawObservation> observations;
};

// Nested-array wiring syntax: ["compose", a, b], ["tensor", a, b],
// ["loop", a, "P"], ["prim", "name"], ["id", "P"], ["lift", "g"],
// ["reparam", "g", a].
WiringExpr parse_wiring(const Json& node);

std::vector<RawObservation> parse_observations(const Json& array);

// Observations resolved against a concrete pair of posets.
std::vector<Observation> resolve_observations(
    const std::vector<RawObservation>& raw, const FinitePoset& fun,
    const FinitePoset& res);

// Loads every declared object, collecting one diagnostic per violation
// instead of failing fast. A model is usable only when diagnostics is empty.
Model load_model(const Json& doc, std::vector<Diagnostic>& diagnostics);
Model load_model_file(const std::string& path,
                      std::vector<Diagnostic>& diagnostics);

}  // namespace codp
