#include "codp/kleisli.hpp"

namespace codp {

Leq<std::size_t> poset_leq(const FinitePoset& p) {
  return [p](std::size_t a, std::size_t b) { return p.leq(a, b); };
}

FiniteKleisli::FiniteKleisli(Monad kind, FinitePoset dom, FinitePoset cod,
                             std::vector<Uncertain<std::size_t>> table)
    : kind_(kind), dom_(std::move(dom)), cod_(std::move(cod)),
      table_(std::move(table)) {
  if (table_.size() != dom_.size())
    throw ObjectMismatch("kleisli arrow table is not total on the domain");
  for (const auto& value : table_) {
    if (value.kind() != kind_)
      throw MonadMismatch("kleisli arrow entry has the wrong monad instance");
    for (std::size_t i : value.support())
      if (i >= cod_.size())
        throw ElementNotInPoset("kleisli arrow entry outside the codomain");
  }
  if (kind_ == Monad::interval) {
    // Pos arrow: endpoints must move monotonically with the input.
    for (std::size_t a = 0; a < dom_.size(); ++a)
      for (std::size_t b = 0; b < dom_.size(); ++b)
        if (dom_.leq(a, b) &&
            (!cod_.leq(table_[a].lo(), table_[b].lo()) ||
             !cod_.leq(table_[a].hi(), table_[b].hi())))
          throw NotMonotone("interval kleisli arrow is not monotone between '" +
                            dom_.label(a) + "' and '" + dom_.label(b) + "'");
  }
}

FiniteKleisli FiniteKleisli::lift_pure(Monad kind, FinitePoset dom,
                                       FinitePoset cod,
                                       std::vector<std::size_t> mapping) {
  if (mapping.size() != dom.size())
    throw ObjectMismatch("lift_pure mapping is not total on the domain");
  std::vector<Uncertain<std::size_t>> table;
  table.reserve(mapping.size());
  for (std::size_t i : mapping) table.push_back(monad_unit(kind, i));
  return FiniteKleisli(kind, std::move(dom), std::move(cod), std::move(table));
}

FiniteKleisli FiniteKleisli::identity(Monad kind, const FinitePoset& p) {
  std::vector<std::size_t> mapping(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mapping[i] = i;
  return lift_pure(kind, p, p, std::move(mapping));
}

FiniteKleisli kleisli_compose(const FiniteKleisli& f, const FiniteKleisli& g) {
  if (f.kind() != g.kind())
    throw MonadMismatch("kleisli_compose: mixed monad instances");
  if (!(f.cod() == g.dom()))
    throw ObjectMismatch("kleisli_compose: middle carriers differ");
  Leq<std::size_t> leq = poset_leq(g.cod());
  std::vector<Uncertain<std::size_t>> table;
  table.reserve(f.dom().size());
  for (std::size_t a = 0; a < f.dom().size(); ++a)
    table.push_back(
        mbind(f.at(a), [&](std::size_t b) { return g.at(b); }, leq));
  return FiniteKleisli(f.kind(), f.dom(), g.cod(), std::move(table));
}

FiniteKleisli kleisli_tensor(const FiniteKleisli& f, const FiniteKleisli& g) {
  if (f.kind() != g.kind())
    throw MonadMismatch("kleisli_tensor: mixed monad instances");
  FinitePoset dom = poset_product(f.dom(), g.dom());
  FinitePoset cod = poset_product(f.cod(), g.cod());
  Leq<std::size_t> leq = poset_leq(cod);
  const std::size_t gcod = g.cod().size();
  std::vector<Uncertain<std::size_t>> table;
  table.reserve(dom.size());
  for (std::size_t a = 0; a < f.dom().size(); ++a)
    for (std::size_t b = 0; b < g.dom().size(); ++b)
      table.push_back(combine(
          f.at(a), g.at(b),
          [&](std::size_t x, std::size_t y) { return x * gcod + y; }, leq));
  return FiniteKleisli(f.kind(), std::move(dom), std::move(cod), std::move(table));
}

FiniteKleisli markov_copy(Monad kind, const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> mapping(n);
  for (std::size_t i = 0; i < n; ++i) mapping[i] = i * n + i;
  return FiniteKleisli::lift_pure(kind, p, poset_product(p, p), std::move(mapping));
}

FiniteKleisli markov_delete(Monad kind, const FinitePoset& p) {
  std::vector<std::size_t> mapping(p.size(), 0);
  return FiniteKleisli::lift_pure(kind, p, unit_poset(), std::move(mapping));
}

bool is_deterministic(const FiniteKleisli& f) {
  FiniteKleisli lhs = kleisli_compose(f, markov_copy(f.kind(), f.cod()));
  FiniteKleisli rhs =
      kleisli_compose(markov_copy(f.kind(), f.dom()), kleisli_tensor(f, f));
  return lhs == rhs;
}

}  // namespace codp
