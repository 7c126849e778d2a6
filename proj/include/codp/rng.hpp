#pragma once

#include <cstdint>
#include <random>

#include "codp/dp.hpp"
#include "codp/kleisli.hpp"
#include "codp/poset.hpp"

namespace codp {

// Deterministic random source. mt19937_64 is bit-exact across platforms,
// which the CLI relies on for byte-identical seeded reports.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  std::size_t below(std::size_t n) {
    return n == 0 ? 0 : static_cast<std::size_t>(eng_() % n);
  }
  bool coin() { return (eng_() & 1) != 0; }

private:
  std::mt19937_64 eng_;
};

// A random partial order on min_n..max_n elements (edges only from lower to
// higher index, then transitively closed).
FinitePoset random_poset(Rng& rng, std::size_t min_n, std::size_t max_n,
                         const std::string& label_prefix = "e");

// Random monotone table: a few seed pairs closed downward in f, upward in r.
DesignProblem random_monotone_dp(Rng& rng, const FinitePoset& fun,
                                 const FinitePoset& res);

MonotoneMap random_monotone_map(Rng& rng, const FinitePoset& dom,
                                const FinitePoset& cod);

Uncertain<std::size_t> random_value(Rng& rng, Monad kind, const FinitePoset& p,
                                    unsigned den = 4);

FiniteKleisli random_kleisli(Rng& rng, Monad kind, const FinitePoset& dom,
                             const FinitePoset& cod, unsigned den = 4);

}  // namespace codp
