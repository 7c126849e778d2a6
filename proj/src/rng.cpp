#include "codp/rng.hpp"

namespace codp {

FinitePoset random_poset(Rng& rng, std::size_t min_n, std::size_t max_n,
                         const std::string& label_prefix) {
  const std::size_t n = min_n + rng.below(max_n - min_n + 1);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back(label_prefix + std::to_string(i));
  std::vector<uint8_t> leq(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) leq[a * n + a] = 1;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (rng.below(3) == 0) leq[a * n + b] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a) {
      if (!leq[a * n + k]) continue;
      for (std::size_t b = 0; b < n; ++b)
        if (leq[k * n + b]) leq[a * n + b] = 1;
    }
  return FinitePoset(std::move(labels), std::move(leq));
}

DesignProblem random_monotone_dp(Rng& rng, const FinitePoset& fun,
                                 const FinitePoset& res) {
  const std::size_t nf = fun.size(), nr = res.size();
  std::vector<uint8_t> table(nf * nr, 0);
  if (nf > 0 && nr > 0) {
    const std::size_t seeds = rng.below(nf * nr + 1);
    for (std::size_t s = 0; s < seeds; ++s) {
      const std::size_t f = rng.below(nf), r = rng.below(nr);
      for (std::size_t f2 = 0; f2 < nf; ++f2)
        for (std::size_t r2 = 0; r2 < nr; ++r2)
          if (fun.leq(f2, f) && res.leq(r, r2)) table[f2 * nr + r2] = 1;
    }
  }
  return DesignProblem(fun, res, std::move(table));
}

MonotoneMap random_monotone_map(Rng& rng, const FinitePoset& dom,
                                const FinitePoset& cod) {
  if (cod.size() == 0)
    throw ObjectMismatch("random_monotone_map: empty codomain");
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<std::size_t> mapping(dom.size());
    for (auto& v : mapping) v = rng.below(cod.size());
    if (is_monotone(dom, cod, mapping))
      return MonotoneMap(dom, cod, std::move(mapping));
  }
  // Constant maps are always monotone.
  std::vector<std::size_t> mapping(dom.size(), rng.below(cod.size()));
  return MonotoneMap(dom, cod, std::move(mapping));
}

Uncertain<std::size_t> random_value(Rng& rng, Monad kind, const FinitePoset& p,
                                    unsigned den) {
  const std::size_t n = p.size();
  switch (kind) {
    case Monad::identity:
      return Uncertain<std::size_t>::exactly(rng.below(n));
    case Monad::powerset:
    case Monad::powerset_empty: {
      std::vector<std::size_t> values;
      for (std::size_t i = 0; i < n; ++i)
        if (rng.coin()) values.push_back(i);
      if (values.empty()) values.push_back(rng.below(n));
      return kind == Monad::powerset
                 ? Uncertain<std::size_t>::subset(std::move(values))
                 : Uncertain<std::size_t>::subset_or_empty(std::move(values));
    }
    case Monad::interval: {
      // Sample a point, then widen along the order.
      std::size_t lo = rng.below(n), hi = lo;
      for (std::size_t i = 0; i < n; ++i) {
        if (p.leq(i, lo) && rng.coin()) lo = i;
        if (p.leq(hi, i) && rng.coin()) hi = i;
      }
      return Uncertain<std::size_t>::between(lo, hi, poset_leq(p));
    }
    case Monad::dist: {
      std::vector<std::pair<std::size_t, Rat>> entries;
      for (unsigned chip = 0; chip < den; ++chip)
        entries.emplace_back(rng.below(n), Rat(1, den));
      return Uncertain<std::size_t>::weighted(std::move(entries));
    }
  }
  throw MonadMismatch("unknown monad kind");
}

FiniteKleisli random_kleisli(Rng& rng, Monad kind, const FinitePoset& dom,
                             const FinitePoset& cod, unsigned den) {
  if (kind == Monad::interval) {
    for (int attempt = 0; attempt < 100; ++attempt) {
      std::vector<Uncertain<std::size_t>> table;
      table.reserve(dom.size());
      for (std::size_t i = 0; i < dom.size(); ++i)
        table.push_back(random_value(rng, kind, cod, den));
      try {
        return FiniteKleisli(kind, dom, cod, std::move(table));
      } catch (const NotMonotone&) {
      }
    }
    // eta-lifts of monotone maps are always valid interval arrows.
    return FiniteKleisli::lift_pure(kind, dom, cod,
                                    random_monotone_map(rng, dom, cod).mapping());
  }
  std::vector<Uncertain<std::size_t>> table;
  table.reserve(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i)
    table.push_back(random_value(rng, kind, cod, den));
  return FiniteKleisli(kind, dom, cod, std::move(table));
}

}  // namespace codp
