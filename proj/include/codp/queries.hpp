#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "codp/param.hpp"
#include "codp/rational.hpp"

namespace codp {

// FixFunMinRes: the antichain of minimal resources making f feasible; empty
// when f is infeasible at every resource.
Antichain fix_fun_min_res(const DesignProblem& d, std::size_t f);

// The dual query, realized through the opposite order on functionalities.
Antichain fix_res_max_fun(const DesignProblem& d, std::size_t r);

struct PlainResult {
  Antichain minimal;
  bool operator==(const PlainResult&) const = default;
};
struct PossibilisticResult {
  std::vector<Antichain> outcomes;  // sorted, deduplicated
  bool operator==(const PossibilisticResult&) const = default;
};
struct IntervalResult {
  Antichain pessimistic;  // from the lower design problem
  Antichain optimistic;   // from the upper one
  bool operator==(const IntervalResult&) const = default;
};
struct ProbabilisticResult {
  std::vector<std::pair<Antichain, Rat>> outcomes;  // pushforward, sorted
  Rat feasible_probability;
  bool operator==(const ProbabilisticResult&) const = default;
};

using QueryResult = std::variant<PlainResult, PossibilisticResult,
                                 IntervalResult, ProbabilisticResult>;

// Per-parameter query results in enumeration order.
std::vector<QueryResult> query_cell(const ParamCell& c, std::size_t f);

enum class Objective { expected, worst_case, optimistic };
std::string objective_name(Objective objective);
Objective objective_from_name(const std::string& name);

// A monotone rational valuation of a poset (costs, numeric embeddings).
class CostMap {
public:
  CostMap(FinitePoset poset, std::vector<Rat> values);

  const FinitePoset& poset() const { return poset_; }
  const Rat& at(std::size_t i) const { return values_[i]; }

  bool operator==(const CostMap&) const = default;

private:
  FinitePoset poset_;
  std::vector<Rat> values_;
};

struct DecisionRow {
  std::vector<std::size_t> parameter;
  std::optional<Rat> value;  // nullopt marks Infeasible
};

struct DecisionReport {
  Objective objective;
  std::vector<DecisionRow> rows;  // enumeration order
  std::size_t chosen_index = 0;   // argmin among feasible rows, first on ties
};

// Scores every parameter and picks the cheapest. The objective must match
// the instance: expected needs dist, worst_case/optimistic need interval or
// powerset. Infeasible outcomes contribute `infeasible_penalty`; nullopt
// penalty means infinity, and a parameter whose score would be infinite is
// marked Infeasible. All parameters Infeasible raises NoFeasibleParameter.
DecisionReport decide(const ParamCell& c, std::size_t f, Objective objective,
                      const CostMap& cost,
                      const std::optional<Rat>& infeasible_penalty);

}  // namespace codp
