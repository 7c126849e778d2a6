#pragma once

#include <optional>
#include <vector>

#include "codp/dp.hpp"
#include "codp/uncertain.hpp"

namespace codp {

// A parameter space kept as a flat ordered list of poset factors. Carrier
// tuples have one coordinate (an element index) per factor; the empty factor
// list is the unit space with a single empty tuple. Keeping the list flat
// turns associators and unitors into identities, so only the tensorator and
// the symmetry survive as genuine 2-cells.
class ParamSpace {
public:
  ParamSpace() = default;
  explicit ParamSpace(std::vector<FinitePoset> factors);

  std::size_t arity() const { return factors_.size(); }
  const std::vector<FinitePoset>& factors() const { return factors_; }
  std::size_t size() const;  // number of tuples; 1 for the unit space

  std::vector<std::size_t> tuple_at(std::size_t index) const;
  std::size_t index_of(const std::vector<std::size_t>& tuple) const;
  bool valid_tuple(const std::vector<std::size_t>& tuple) const;
  // componentwise product order
  bool tuple_leq(const std::vector<std::size_t>& a,
                 const std::vector<std::size_t>& b) const;
  std::vector<std::string> labels_at(std::size_t index) const;
  std::vector<std::size_t> tuple_from_labels(
      const std::vector<std::string>& labels) const;  // ElementNotInPoset

  bool operator==(const ParamSpace& other) const = default;

private:
  std::vector<FinitePoset> factors_;
};

ParamSpace space_concat(const ParamSpace& a, const ParamSpace& b);
// Removes one-element factors; tuple enumeration order is unaffected.
ParamSpace drop_units(const ParamSpace& space);

Leq<DesignProblem> dp_hom_leq();
Leq<std::vector<std::size_t>> tuple_order(const ParamSpace& space);

// A parametrized uncertain design problem: a Kleisli arrow from a parameter
// space to M(DP(source, target)), tabulated per parameter tuple. For the
// interval instance the table must be monotone in the parameter.
class ParamCell {
public:
  ParamCell(FinitePoset source, FinitePoset target, ParamSpace space,
            Monad kind, std::vector<Uncertain<DesignProblem>> table);

  const FinitePoset& source() const { return source_; }
  const FinitePoset& target() const { return target_; }
  const ParamSpace& space() const { return space_; }
  Monad kind() const { return kind_; }
  const Uncertain<DesignProblem>& at(std::size_t index) const {
    return table_[index];
  }
  const std::vector<Uncertain<DesignProblem>>& table() const { return table_; }

  bool operator==(const ParamCell& other) const = default;

private:
  FinitePoset source_, target_;
  ParamSpace space_;
  Monad kind_;
  std::vector<Uncertain<DesignProblem>> table_;
};

// A reparametrization 2-cell: a Kleisli arrow between parameter spaces.
class Reparam {
public:
  Reparam(ParamSpace from, ParamSpace to, Monad kind,
          std::vector<Uncertain<std::vector<std::size_t>>> table);

  static Reparam identity(Monad kind, const ParamSpace& space);

  const ParamSpace& from() const { return from_; }
  const ParamSpace& to() const { return to_; }
  Monad kind() const { return kind_; }
  const Uncertain<std::vector<std::size_t>>& at(std::size_t index) const {
    return table_[index];
  }

  bool operator==(const Reparam& other) const = default;

private:
  ParamSpace from_, to_;
  Monad kind_;
  std::vector<Uncertain<std::vector<std::size_t>>> table_;
};

// The inclusion of DP: a unit-space cell whose sole entry is eta(d).
ParamCell cell_lift(const DesignProblem& d, Monad kind);
ParamCell cell_identity(const FinitePoset& p, Monad kind);

// The only cross-instance bridge: an identity cell re-read under eta.
ParamCell promote(const ParamCell& c, Monad kind);

// drop_units on the space; the table carries over unchanged.
ParamCell normalized(const ParamCell& c);

// Horizontal composition: concatenated (then unit-normalized) parameter
// space, entries combined by the lifted composition nabla ; M(compose).
ParamCell cell_compose(const ParamCell& c1, const ParamCell& c2);
ParamCell cell_tensor(const ParamCell& c1, const ParamCell& c2);

// Precomposition of the parameter by a Kleisli arrow.
ParamCell cell_reparam(const Reparam& phi, const ParamCell& c);

// Does phi witness f = phi * g? Shape mismatches throw; inequality returns
// false.
bool check_2cell(const Reparam& phi, const ParamCell& f, const ParamCell& g);

Reparam twocell_vcompose(const Reparam& phi, const Reparam& psi);
Reparam twocell_hcompose(const Reparam& phi1, const Reparam& phi2);

// The invertible 2-cell witnessing interchange: the pure permutation from
// [U1,U2,P1,P2] to [U1,P1,U2,P2] between
//   cell_compose(cell_tensor(f1,f2), cell_tensor(g1,g2))   and
//   cell_tensor(cell_compose(f1,g1), cell_compose(f2,g2)).
Reparam tensorator(const ParamCell& f1, const ParamCell& f2,
                   const ParamCell& g1, const ParamCell& g2);

// The lifted braiding cell on P (x) Q.
ParamCell symmetry_cell(const FinitePoset& p, const FinitePoset& q, Monad kind);

// The parameter-space swap witnessing naturality of the braiding:
//   s ; (f2 (x) f1)  =  swap * ((f1 (x) f2) ; s).
Reparam symmetry_witness(const ParamCell& f1, const ParamCell& f2);

// Swap objects for order-identical posets; every stored table entry is
// relabeled alongside.
ParamCell cell_relabel(const ParamCell& c, const FinitePoset& new_source,
                       const FinitePoset& new_target);

// M(f) applied entrywise; f must be monotone with respect to the hom-order
// when the instance is interval.
ParamCell cell_map(const ParamCell& c,
                   const std::function<DesignProblem(const DesignProblem&)>& f,
                   const FinitePoset& new_source, const FinitePoset& new_target);

}  // namespace codp
