#pragma once

#include <vector>

#include "codp/param.hpp"
#include "codp/queries.hpp"

namespace codp {

struct Observation {
  std::size_t fun_index;
  std::size_t res_index;
  bool feasible = true;

  bool operator==(const Observation&) const = default;
};

struct Posterior {
  ParamSpace space;
  std::vector<Rat> weights;  // one per tuple, sums to 1
  Rat evidence;              // marginal probability of the data

  bool operator==(const Posterior&) const = default;
};

// Conditions a prior over the kernel's parameter space on feasibility
// observations, treated as conditionally independent given the parameter.
// The likelihood of a feasible observation is the kernel's probability that
// (f, r) is feasible; of an infeasible one, its complement. All-zero
// posterior mass raises ZeroEvidence.
Posterior bayes_update(const std::vector<Rat>& prior, const ParamCell& kernel,
                       const std::vector<Observation>& observations);

enum class FitMode { least_squares, constrained };
std::string fit_mode_name(FitMode mode);
FitMode fit_mode_from_name(const std::string& name);

// A grid of threshold design problems phi(.; theta) <= r, one monotone map
// per grid point, with a declared per-point complexity.
struct ThetaFamily {
  ParamSpace grid;
  std::vector<MonotoneMap> maps;     // same dom/cod across the grid
  std::vector<Rat> complexity;       // same length as maps
};

struct FitRow {
  std::vector<std::size_t> theta;
  Rat squared_loss;
  bool respects_data = false;  // phi(f_i) <= r_i for every observation
  Rat score;
};

struct FitReport {
  FitMode mode;
  Rat lambda;
  std::vector<FitRow> rows;
  std::size_t chosen_index = 0;
};

// least_squares: argmin of the squared loss under the numeric embedding.
// constrained: among grid points satisfying every observation, argmin of
// squared loss + lambda * complexity; none satisfying raises NoFeasibleTheta.
// Data must consist of feasible observations only.
FitReport grid_fit(const ThetaFamily& family,
                   const std::vector<Observation>& data, FitMode mode,
                   const Rat& lambda, const CostMap& embedding);

}  // namespace codp
