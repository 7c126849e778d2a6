#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "codp/kleisli.hpp"
#include "codp/poset.hpp"
#include "codp/uncertain.hpp"

namespace codp {

struct LawCheck {
  std::string law;
  bool pass = true;
  std::string witness;  // empty when passing
};

struct LawReport {
  std::string instance;
  std::vector<std::string> carriers;
  std::uint64_t seed = 0;
  std::string sample_note;
  std::vector<LawCheck> checks;

  bool all_pass() const;
  const LawCheck* find(const std::string& law) const;
};

struct LawOptions {
  // Distribution sampling: M(X) is infinite for the dist instance, so the
  // harness is exhaustive over all measures with denominator dividing
  // value_den (nested_den one level up) plus all point masses.
  unsigned value_den = 4;
  unsigned nested_den = 2;
  unsigned random_kernels = 12;
  std::uint64_t seed = 0;
  std::size_t carrier_cap = 4;
};

// All values of M(P); for dist, all weights with denominator dividing den.
std::vector<Uncertain<std::size_t>> enumerate_values(Monad kind,
                                                     const FinitePoset& p,
                                                     unsigned den);

// Monad + monoidal-monad laws: unit laws, bind associativity, naturality of
// the strength in each argument, eta and mu monoidal, the symmetry condition,
// and affineness.
LawReport check_monad_laws(Monad kind, const std::vector<FinitePoset>& carriers,
                           const LawOptions& opts = {});

// Commutative comonoid equations for copy/delete, naturality of delete, and
// determinism classification of eta-lifted arrows.
LawReport check_markov_axioms(Monad kind,
                              const std::vector<FinitePoset>& carriers,
                              const LawOptions& opts = {});

// Seeded random associativity/unit spot-checks for Kleisli composition.
LawReport check_kleisli_category(Monad kind,
                                 const std::vector<FinitePoset>& carriers,
                                 std::size_t trials, std::uint64_t seed);

// The twisted-arrow order has no monotone unit candidate on any carrier with
// a strict pair: returns the first pair (a, b) with a < b strictly, for which
// [a,a] would have to precede [b,b] in the inclusion order but does not.
std::optional<std::pair<std::string, std::string>> twarr_witness(
    const FinitePoset& p);

// Packages the counterexample: confirms witnesses exist on chains 2..4 and
// none exists on a discrete carrier.
LawReport twarr_report();

// chain(1), chain(2), antichain(2), chain(3), antichain(3), vee(3), capped.
std::vector<FinitePoset> default_law_carriers(std::size_t max_size);

}  // namespace codp
