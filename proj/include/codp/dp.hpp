#pragma once

#include <cstdint>
#include <vector>

#include "codp/poset.hpp"

namespace codp {

// A feasibility relation between finite posets: a monotone boolean table on
// functionalities x resources. table(f,r) means resource r suffices to
// provide functionality f. Monotonicity (f' <= f, r <= r', table(f,r) =>
// table(f',r')) is checked on construction.
class DesignProblem {
public:
  DesignProblem(FinitePoset fun, FinitePoset res, std::vector<uint8_t> table);

  static DesignProblem all_false(FinitePoset fun, FinitePoset res);
  static DesignProblem all_true(FinitePoset fun, FinitePoset res);

  const FinitePoset& fun() const { return fun_; }
  const FinitePoset& res() const { return res_; }
  bool at(std::size_t f, std::size_t r) const { return table_[f * res_.size() + r] != 0; }
  const std::vector<uint8_t>& table() const { return table_; }

  std::vector<std::pair<std::string, std::string>> feasible_pairs() const;

  bool operator==(const DesignProblem& other) const = default;
  bool operator<(const DesignProblem& other) const;

private:
  FinitePoset fun_, res_;
  std::vector<uint8_t> table_;
};

// Identity on P: table(f,r) = (f <= r). Two-sided unit for dp_compose.
DesignProblem dp_identity(const FinitePoset& p);

// (phi ; psi)(f,q) = OR_r phi(f,r) AND psi(r,q). Diagrammatic order.
DesignProblem dp_compose(const DesignProblem& phi, const DesignProblem& psi);

// Entrywise conjunction on product posets.
DesignProblem dp_tensor(const DesignProblem& phi1, const DesignProblem& phi2);

// table(p,q) = (g(p) <= q).
DesignProblem dp_lift_monotone(const MonotoneMap& g);

// d(f,r) = (phi(f) <= r); same relation as dp_lift_monotone, named for the
// threshold reading used by model files.
DesignProblem dp_threshold(const MonotoneMap& phi);

// Feedback over the trailing factor: phi must go F x P -> R x P; the result
// on F -> R is result(f,r) = OR_p phi((f,p),(r,p)).
DesignProblem dp_trace(const DesignProblem& phi, const FinitePoset& fun_rest,
                       const FinitePoset& res_rest, const FinitePoset& loop);

// Compact closed structure. Orientation is the unique monotone choice:
// unit: I -> P (x) P^op with (p,q) feasible iff q <= p;
// counit: P^op (x) P -> I with (q,p) feasible iff p <= q.
DesignProblem dp_dual_unit(const FinitePoset& p);
DesignProblem dp_dual_counit(const FinitePoset& p);

// Pointwise hom-order: d1 <= d2 iff every feasible pair of d1 is feasible in d2.
bool dp_leq(const DesignProblem& d1, const DesignProblem& d2);

// Swap objects for order-identical posets (same sizes and leq tables, labels
// may differ). Used to reassociate nested product labels; the table is reused.
DesignProblem dp_relabel(const DesignProblem& d, const FinitePoset& new_fun,
                         const FinitePoset& new_res);

}  // namespace codp
