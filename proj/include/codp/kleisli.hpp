#pragma once

#include <vector>

#include "codp/poset.hpp"
#include "codp/uncertain.hpp"

namespace codp {

// A Kleisli arrow between finite poset carriers, tabulated per domain index.
// The interval instance lives over Pos, so its tables must be monotone with
// respect to the carrier orders; the other instances are over Set.
class FiniteKleisli {
public:
  FiniteKleisli(Monad kind, FinitePoset dom, FinitePoset cod,
                std::vector<Uncertain<std::size_t>> table);

  // L_M(f) = f ; eta.
  static FiniteKleisli lift_pure(Monad kind, FinitePoset dom, FinitePoset cod,
                                 std::vector<std::size_t> mapping);
  static FiniteKleisli identity(Monad kind, const FinitePoset& p);

  Monad kind() const { return kind_; }
  const FinitePoset& dom() const { return dom_; }
  const FinitePoset& cod() const { return cod_; }
  const Uncertain<std::size_t>& at(std::size_t i) const { return table_[i]; }
  const std::vector<Uncertain<std::size_t>>& table() const { return table_; }

  bool operator==(const FiniteKleisli& other) const = default;

private:
  Monad kind_;
  FinitePoset dom_, cod_;
  std::vector<Uncertain<std::size_t>> table_;
};

Leq<std::size_t> poset_leq(const FinitePoset& p);

// a |-> mbind(f(a), g). Diagrammatic order.
FiniteKleisli kleisli_compose(const FiniteKleisli& f, const FiniteKleisli& g);

// Strength-paired product on product carriers.
FiniteKleisli kleisli_tensor(const FiniteKleisli& f, const FiniteKleisli& g);

// eta-lift of the diagonal P -> P x P.
FiniteKleisli markov_copy(Monad kind, const FinitePoset& p);

// eta-lift of the unique map P -> 1.
FiniteKleisli markov_delete(Monad kind, const FinitePoset& p);

// Def of determinism: f ; copy equals copy ; (f (x) f).
bool is_deterministic(const FiniteKleisli& f);

}  // namespace codp
