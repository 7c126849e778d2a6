#include "codp/queries.hpp"

#include <algorithm>
#include <map>

namespace codp {

Antichain fix_fun_min_res(const DesignProblem& d, std::size_t f) {
  if (f >= d.fun().size())
    throw ElementNotInPoset("functionality index out of range");
  std::vector<std::size_t> feasible;
  for (std::size_t r = 0; r < d.res().size(); ++r)
    if (d.at(f, r)) feasible.push_back(r);
  return minimal_elements(d.res(), std::move(feasible));
}

Antichain fix_res_max_fun(const DesignProblem& d, std::size_t r) {
  if (r >= d.res().size())
    throw ElementNotInPoset("resource index out of range");
  std::vector<std::size_t> feasible;
  for (std::size_t f = 0; f < d.fun().size(); ++f)
    if (d.at(f, r)) feasible.push_back(f);
  Antichain maximal =
      minimal_elements(poset_opposite(d.fun()), std::move(feasible));
  return Antichain(d.fun(), maximal.members());
}

std::vector<QueryResult> query_cell(const ParamCell& c, std::size_t f) {
  if (f >= c.source().size())
    throw ElementNotInPoset("functionality index out of range");
  std::vector<QueryResult> results;
  results.reserve(c.space().size());
  for (std::size_t i = 0; i < c.space().size(); ++i) {
    const auto& entry = c.at(i);
    switch (c.kind()) {
      case Monad::identity:
        results.push_back(PlainResult{fix_fun_min_res(entry.value(), f)});
        break;
      case Monad::powerset: {
        std::vector<Antichain> outcomes;
        for (const DesignProblem& d : entry.support())
          outcomes.push_back(fix_fun_min_res(d, f));
        std::sort(outcomes.begin(), outcomes.end());
        outcomes.erase(std::unique(outcomes.begin(), outcomes.end()),
                       outcomes.end());
        results.push_back(PossibilisticResult{std::move(outcomes)});
        break;
      }
      case Monad::interval:
        results.push_back(IntervalResult{fix_fun_min_res(entry.lo(), f),
                                         fix_fun_min_res(entry.hi(), f)});
        break;
      case Monad::dist: {
        std::map<Antichain, Rat> pushforward;
        Rat feasible(0);
        for (std::size_t k = 0; k < entry.support().size(); ++k) {
          Antichain a = fix_fun_min_res(entry.support()[k], f);
          if (!a.empty()) feasible += entry.weights()[k];
          pushforward[std::move(a)] += entry.weights()[k];
        }
        ProbabilisticResult result;
        result.outcomes.assign(pushforward.begin(), pushforward.end());
        result.feasible_probability = feasible;
        results.push_back(std::move(result));
        break;
      }
      default:
        throw MonadMismatch("query_cell: unsupported instance");
    }
  }
  return results;
}

std::string objective_name(Objective objective) {
  switch (objective) {
    case Objective::expected: return "expected";
    case Objective::worst_case: return "worst_case";
    case Objective::optimistic: return "optimistic";
  }
  return "?";
}

Objective objective_from_name(const std::string& name) {
  if (name == "expected") return Objective::expected;
  if (name == "worst_case") return Objective::worst_case;
  if (name == "optimistic") return Objective::optimistic;
  throw ParseError("unknown objective '" + name + "'");
}

CostMap::CostMap(FinitePoset poset, std::vector<Rat> values)
    : poset_(std::move(poset)), values_(std::move(values)) {
  if (values_.size() != poset_.size())
    throw ObjectMismatch("cost map is not total on the poset");
  for (std::size_t a = 0; a < poset_.size(); ++a)
    for (std::size_t b = 0; b < poset_.size(); ++b)
      if (poset_.leq(a, b) && values_[a] > values_[b])
        throw NotMonotone("cost map decreases from '" + poset_.label(a) +
                          "' to '" + poset_.label(b) + "'");
}

namespace {

// Cheapest minimal resource for f, or nullopt when infeasible.
std::optional<Rat> min_cost(const DesignProblem& d, std::size_t f,
                            const CostMap& cost) {
  Antichain minimal = fix_fun_min_res(d, f);
  if (minimal.empty()) return std::nullopt;
  std::optional<Rat> best;
  for (std::size_t r : minimal.members())
    if (!best || cost.at(r) < *best) best = cost.at(r);
  return best;
}

std::optional<Rat> cost_or_penalty(const std::optional<Rat>& cost,
                                   const std::optional<Rat>& penalty) {
  return cost ? cost : penalty;
}

}  // namespace

DecisionReport decide(const ParamCell& c, std::size_t f, Objective objective,
                      const CostMap& cost,
                      const std::optional<Rat>& infeasible_penalty) {
  if (!(cost.poset() == c.target()))
    throw ObjectMismatch("cost map lives on a different poset than the cell");
  if (f >= c.source().size())
    throw ElementNotInPoset("functionality index out of range");

  const bool wants_dist = objective == Objective::expected;
  if (wants_dist && c.kind() != Monad::dist)
    throw ObjectiveMonadMismatch("expected cost needs the dist instance");
  if (!wants_dist &&
      !(c.kind() == Monad::interval || c.kind() == Monad::powerset))
    throw ObjectiveMonadMismatch(objective_name(objective) +
                                 " needs the interval or powerset instance");

  DecisionReport report;
  report.objective = objective;
  report.rows.reserve(c.space().size());
  for (std::size_t i = 0; i < c.space().size(); ++i) {
    const auto& entry = c.at(i);
    std::optional<Rat> value;
    switch (objective) {
      case Objective::expected: {
        Rat total(0);
        bool infinite = false;
        for (std::size_t k = 0; k < entry.support().size(); ++k) {
          auto v = cost_or_penalty(min_cost(entry.support()[k], f, cost),
                                   infeasible_penalty);
          if (!v) {
            infinite = true;
            break;
          }
          total += entry.weights()[k] * *v;
        }
        if (!infinite) value = total;
        break;
      }
      case Objective::worst_case: {
        if (c.kind() == Monad::interval) {
          value = cost_or_penalty(min_cost(entry.lo(), f, cost),
                                  infeasible_penalty);
        } else {
          std::optional<Rat> worst = Rat(0);
          bool first = true;
          for (const DesignProblem& d : entry.support()) {
            auto v = cost_or_penalty(min_cost(d, f, cost), infeasible_penalty);
            if (!v) {
              worst = std::nullopt;
              break;
            }
            if (first || *v > *worst) worst = *v;
            first = false;
          }
          value = worst;
        }
        break;
      }
      case Objective::optimistic: {
        if (c.kind() == Monad::interval) {
          value = cost_or_penalty(min_cost(entry.hi(), f, cost),
                                  infeasible_penalty);
        } else {
          std::optional<Rat> best;
          for (const DesignProblem& d : entry.support()) {
            auto v = cost_or_penalty(min_cost(d, f, cost), infeasible_penalty);
            if (v && (!best || *v < *best)) best = v;
          }
          value = best;
        }
        break;
      }
    }
    report.rows.push_back({c.space().tuple_at(i), std::move(value)});
  }

  std::optional<std::size_t> chosen;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    if (!row.value) continue;
    if (!chosen || *row.value < *report.rows[*chosen].value) chosen = i;
  }
  if (!chosen)
    throw NoFeasibleParameter("every parameter scores as infeasible");
  report.chosen_index = *chosen;
  return report;
}

}  // namespace codp
