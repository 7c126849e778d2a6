#include "codp/learning.hpp"

namespace codp {

Posterior bayes_update(const std::vector<Rat>& prior, const ParamCell& kernel,
                       const std::vector<Observation>& observations) {
  if (kernel.kind() != Monad::dist)
    throw MonadMismatch("bayes_update needs a dist-instance kernel");
  if (prior.size() != kernel.space().size())
    throw ObjectMismatch("prior is not total on the kernel's parameter space");
  Rat prior_total(0);
  for (const Rat& w : prior) {
    if (w < 0) throw InvalidUncertain("negative prior weight");
    prior_total += w;
  }
  if (prior_total != 1)
    throw InvalidUncertain("prior weights sum to " + rat_to_string(prior_total) +
                           ", not 1");
  for (const Observation& obs : observations) {
    if (obs.fun_index >= kernel.source().size() ||
        obs.res_index >= kernel.target().size())
      throw ElementNotInPoset("observation indices leave the kernel's posets");
  }

  std::vector<Rat> weights(prior);
  for (std::size_t d = 0; d < weights.size(); ++d) {
    if (weights[d] == 0) continue;
    const auto& mixture = kernel.at(d);
    for (const Observation& obs : observations) {
      Rat feasible(0);
      for (std::size_t k = 0; k < mixture.support().size(); ++k)
        if (mixture.support()[k].at(obs.fun_index, obs.res_index))
          feasible += mixture.weights()[k];
      weights[d] *= obs.feasible ? feasible : (Rat(1) - feasible);
      if (weights[d] == 0) break;
    }
  }

  Rat evidence(0);
  for (const Rat& w : weights) evidence += w;
  if (evidence == 0)
    throw ZeroEvidence("the observations contradict every hypothesis");
  for (Rat& w : weights) w /= evidence;

  return Posterior{kernel.space(), std::move(weights), std::move(evidence)};
}

std::string fit_mode_name(FitMode mode) {
  return mode == FitMode::least_squares ? "least_squares" : "constrained";
}

FitMode fit_mode_from_name(const std::string& name) {
  if (name == "least_squares") return FitMode::least_squares;
  if (name == "constrained") return FitMode::constrained;
  throw ParseError("unknown fit mode '" + name + "'");
}

FitReport grid_fit(const ThetaFamily& family,
                   const std::vector<Observation>& data, FitMode mode,
                   const Rat& lambda, const CostMap& embedding) {
  if (family.maps.size() != family.grid.size() ||
      family.complexity.size() != family.grid.size())
    throw ObjectMismatch("theta family tables are not total on the grid");
  if (data.empty()) throw InvalidObservation("fit needs a nonempty dataset");
  for (const auto& map : family.maps)
    if (!(map.dom() == family.maps.front().dom()) ||
        !(map.cod() == family.maps.front().cod()))
      throw ObjectMismatch("theta family maps disagree on their posets");
  const FinitePoset& fun = family.maps.front().dom();
  const FinitePoset& res = family.maps.front().cod();
  if (!(embedding.poset() == res))
    throw ObjectMismatch("numeric embedding lives on a different poset");
  for (const Observation& obs : data) {
    if (!obs.feasible)
      throw InvalidObservation("fit data is restricted to feasible outcomes");
    if (obs.fun_index >= fun.size() || obs.res_index >= res.size())
      throw ElementNotInPoset("observation indices leave the family's posets");
  }

  FitReport report;
  report.mode = mode;
  report.lambda = lambda;
  report.rows.reserve(family.grid.size());
  for (std::size_t t = 0; t < family.grid.size(); ++t) {
    const MonotoneMap& phi = family.maps[t];
    Rat sse(0);
    bool respects = true;
    for (const Observation& obs : data) {
      std::size_t predicted = phi(obs.fun_index);
      Rat diff = embedding.at(predicted) - embedding.at(obs.res_index);
      sse += diff * diff;
      if (!res.leq(predicted, obs.res_index)) respects = false;
    }
    Rat score = mode == FitMode::least_squares
                    ? sse
                    : sse + lambda * family.complexity[t];
    report.rows.push_back(
        {family.grid.tuple_at(t), std::move(sse), respects, std::move(score)});
  }

  std::optional<std::size_t> chosen;
  for (std::size_t t = 0; t < report.rows.size(); ++t) {
    if (mode == FitMode::constrained && !report.rows[t].respects_data) continue;
    if (!chosen || report.rows[t].score < report.rows[*chosen].score) chosen = t;
  }
  if (!chosen)
    throw NoFeasibleTheta("no grid point satisfies every observation");
  report.chosen_index = *chosen;
  return report;
}

}  // namespace codp
