#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "codp/errors.hpp"
#include "codp/rational.hpp"

namespace codp {

// The four uncertainty semantics, plus the deliberately broken powerset that
// admits the empty set. The broken instance exists only so the law harness
// can demonstrate which axiom non-affine monads lose; cells reject it.
enum class Monad {
  identity,
  powerset,
  interval,
  dist,
  powerset_empty,
};

std::string monad_name(Monad m);
Monad monad_from_name(const std::string& name);  // rejects powerset_empty

template <class T>
using Leq = std::function<bool(const T&, const T&)>;

// A monadic container over a finite carrier. Canonical form:
//   identity       exactly one value
//   powerset       sorted, deduplicated, nonempty support
//   interval       support = {lo, hi} with lo <= hi in the carrier order
//   dist           sorted support, positive rational weights summing to 1
//   powerset_empty as powerset but possibly empty
// Values are immutable; equality is structural on the canonical form.
template <class T>
class Uncertain {
public:
  static Uncertain exactly(T value) {
    return Uncertain(Monad::identity, {std::move(value)}, {});
  }

  static Uncertain subset(std::vector<T> values) {
    canonicalize(values);
    if (values.empty()) throw InvalidUncertain("powerset value must be nonempty");
    return Uncertain(Monad::powerset, std::move(values), {});
  }

  static Uncertain subset_or_empty(std::vector<T> values) {
    canonicalize(values);
    return Uncertain(Monad::powerset_empty, std::move(values), {});
  }

  static Uncertain between(T lo, T hi, const Leq<T>& leq) {
    if (!leq(lo, hi))
      throw InvalidUncertain("interval endpoints out of order");
    return Uncertain(Monad::interval, {std::move(lo), std::move(hi)}, {});
  }

  // Weights must be nonnegative and sum to exactly 1 after merging duplicate
  // support points; zero-weight entries are pruned.
  static Uncertain weighted(std::vector<std::pair<T, Rat>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<T> support;
    std::vector<Rat> weights;
    Rat total = 0;
    for (auto& [value, weight] : entries) {
      if (weight < 0) throw InvalidUncertain("negative distribution weight");
      if (weight == 0) continue;
      total += weight;
      if (!support.empty() && support.back() == value)
        weights.back() += weight;
      else {
        support.push_back(std::move(value));
        weights.push_back(weight);
      }
    }
    if (support.empty()) throw InvalidUncertain("distribution support is empty");
    if (total != 1) throw InvalidUncertain("distribution weights sum to " +
                                           rat_to_string(total) + ", not 1");
    return Uncertain(Monad::dist, std::move(support), std::move(weights));
  }

  Monad kind() const { return kind_; }
  const std::vector<T>& support() const { return support_; }
  const std::vector<Rat>& weights() const { return weights_; }

  const T& value() const { return support_.front(); }  // identity
  const T& lo() const { return support_.front(); }     // interval
  const T& hi() const { return support_.back(); }      // interval

  Rat weight_of(const T& x) const {
    auto it = std::lower_bound(support_.begin(), support_.end(), x);
    if (it == support_.end() || !(*it == x)) return Rat(0);
    return weights_[static_cast<std::size_t>(it - support_.begin())];
  }

  bool operator==(const Uncertain& other) const {
    return kind_ == other.kind_ && support_ == other.support_ &&
           weights_ == other.weights_;
  }

  bool operator<(const Uncertain& other) const {
    if (kind_ != other.kind_) return kind_ < other.kind_;
    if (support_ != other.support_) return support_ < other.support_;
    return weights_ < other.weights_;
  }

private:
  Uncertain(Monad kind, std::vector<T> support, std::vector<Rat> weights)
      : kind_(kind), support_(std::move(support)), weights_(std::move(weights)) {}

  static void canonicalize(std::vector<T>& values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
  }

  Monad kind_;
  std::vector<T> support_;
  std::vector<Rat> weights_;

  template <class S>
  friend class Uncertain;

  template <class S>
  friend Uncertain<S> make_uncertain_unchecked(Monad, std::vector<S>,
                                               std::vector<Rat>);
};

// Internal: used by monad operations whose results are valid by construction
// (e.g. the unit, whose interval endpoints coincide).
template <class T>
Uncertain<T> make_uncertain_unchecked(Monad kind, std::vector<T> support,
                                      std::vector<Rat> weights) {
  return Uncertain<T>(kind, std::move(support), std::move(weights));
}

// eta: one element, singleton, degenerate interval, or point mass.
template <class T>
Uncertain<T> monad_unit(Monad kind, T x) {
  switch (kind) {
    case Monad::identity:
      return Uncertain<T>::exactly(std::move(x));
    case Monad::powerset:
      return Uncertain<T>::subset({std::move(x)});
    case Monad::powerset_empty:
      return Uncertain<T>::subset_or_empty({std::move(x)});
    case Monad::interval:
      return make_uncertain_unchecked<T>(Monad::interval, {x, x}, {});
    case Monad::dist:
      return Uncertain<T>::weighted({{std::move(x), Rat(1)}});
  }
  throw MonadMismatch("unknown monad kind");
}

namespace detail {

template <class T>
void require_kind(const Uncertain<T>& m, Monad kind, const char* op) {
  if (m.kind() != kind)
    throw MonadMismatch(std::string(op) + ": mixed monad instances");
}

}  // namespace detail

// M(f). For the interval instance f must be monotone so that the image
// endpoints stay ordered; `leq` validates the result.
template <class T, class F,
          class S = std::decay_t<decltype(std::declval<F>()(std::declval<const T&>()))>>
Uncertain<S> umap(const Uncertain<T>& m, F&& f, const Leq<S>& leq = {}) {
  switch (m.kind()) {
    case Monad::identity:
      return Uncertain<S>::exactly(f(m.value()));
    case Monad::powerset:
    case Monad::powerset_empty: {
      std::vector<S> image;
      image.reserve(m.support().size());
      for (const T& x : m.support()) image.push_back(f(x));
      return m.kind() == Monad::powerset ? Uncertain<S>::subset(std::move(image))
                                         : Uncertain<S>::subset_or_empty(std::move(image));
    }
    case Monad::interval: {
      S lo = f(m.lo());
      S hi = f(m.hi());
      if (!leq) throw InvalidUncertain("interval umap needs a codomain order");
      return Uncertain<S>::between(std::move(lo), std::move(hi), leq);
    }
    case Monad::dist: {
      std::vector<std::pair<S, Rat>> entries;
      entries.reserve(m.support().size());
      for (std::size_t i = 0; i < m.support().size(); ++i)
        entries.emplace_back(f(m.support()[i]), m.weights()[i]);
      return Uncertain<S>::weighted(std::move(entries));
    }
  }
  throw MonadMismatch("unknown monad kind");
}

// Kleisli extension: f maps carrier points to Uncertain values of the same
// instance. For intervals this is mu . M(f): [a,b] |-> [f(a).lo, f(b).hi].
template <class T, class F,
          class U = std::decay_t<decltype(std::declval<F>()(std::declval<const T&>()))>,
          class S = typename std::decay_t<decltype(std::declval<U>().support())>::value_type>
Uncertain<S> mbind(const Uncertain<T>& m, F&& f, const Leq<S>& leq = {}) {
  switch (m.kind()) {
    case Monad::identity: {
      Uncertain<S> out = f(m.value());
      detail::require_kind(out, Monad::identity, "bind");
      return out;
    }
    case Monad::powerset:
    case Monad::powerset_empty: {
      std::vector<S> values;
      for (const T& x : m.support()) {
        Uncertain<S> step = f(x);
        detail::require_kind(step, m.kind(), "bind");
        for (const S& y : step.support()) values.push_back(y);
      }
      return m.kind() == Monad::powerset ? Uncertain<S>::subset(std::move(values))
                                         : Uncertain<S>::subset_or_empty(std::move(values));
    }
    case Monad::interval: {
      Uncertain<S> first = f(m.lo());
      Uncertain<S> second = f(m.hi());
      detail::require_kind(first, Monad::interval, "bind");
      detail::require_kind(second, Monad::interval, "bind");
      if (!leq) throw InvalidUncertain("interval bind needs a codomain order");
      return Uncertain<S>::between(first.lo(), second.hi(), leq);
    }
    case Monad::dist: {
      std::vector<std::pair<S, Rat>> entries;
      for (std::size_t i = 0; i < m.support().size(); ++i) {
        Uncertain<S> step = f(m.support()[i]);
        detail::require_kind(step, Monad::dist, "bind");
        for (std::size_t j = 0; j < step.support().size(); ++j)
          entries.emplace_back(step.support()[j], m.weights()[i] * step.weights()[j]);
      }
      return Uncertain<S>::weighted(std::move(entries));
    }
  }
  throw MonadMismatch("unknown monad kind");
}

// nabla followed by M of a binary map: combines two independent uncertain
// values. For intervals f must be monotone in both arguments.
template <class T, class S, class F,
          class R = std::decay_t<decltype(std::declval<F>()(
              std::declval<const T&>(), std::declval<const S&>()))>>
Uncertain<R> combine(const Uncertain<T>& ma, const Uncertain<S>& mb, F&& f,
                     const Leq<R>& leq = {}) {
  if (ma.kind() != mb.kind())
    throw MonadMismatch("combine: mixed monad instances");
  switch (ma.kind()) {
    case Monad::identity:
      return Uncertain<R>::exactly(f(ma.value(), mb.value()));
    case Monad::powerset:
    case Monad::powerset_empty: {
      std::vector<R> values;
      values.reserve(ma.support().size() * mb.support().size());
      for (const T& x : ma.support())
        for (const S& y : mb.support()) values.push_back(f(x, y));
      return ma.kind() == Monad::powerset
                 ? Uncertain<R>::subset(std::move(values))
                 : Uncertain<R>::subset_or_empty(std::move(values));
    }
    case Monad::interval: {
      R lo = f(ma.lo(), mb.lo());
      R hi = f(ma.hi(), mb.hi());
      if (!leq) throw InvalidUncertain("interval combine needs a codomain order");
      return Uncertain<R>::between(std::move(lo), std::move(hi), leq);
    }
    case Monad::dist: {
      std::vector<std::pair<R, Rat>> entries;
      entries.reserve(ma.support().size() * mb.support().size());
      for (std::size_t i = 0; i < ma.support().size(); ++i)
        for (std::size_t j = 0; j < mb.support().size(); ++j)
          entries.emplace_back(f(ma.support()[i], mb.support()[j]),
                               ma.weights()[i] * mb.weights()[j]);
      return Uncertain<R>::weighted(std::move(entries));
    }
  }
  throw MonadMismatch("unknown monad kind");
}

// nabla proper: pairs of values.
template <class T, class S>
Uncertain<std::pair<T, S>> strength(const Uncertain<T>& ma, const Uncertain<S>& mb,
                                    const Leq<std::pair<T, S>>& leq = {}) {
  return combine(ma, mb,
                 [](const T& x, const S& y) { return std::make_pair(x, y); }, leq);
}

// mu. The outer endpoints of an interval-of-intervals must themselves be
// ordered intervals; the result keeps the outer-lo lower end and outer-hi
// upper end.
template <class T>
Uncertain<T> monad_join(const Uncertain<Uncertain<T>>& mm, const Leq<T>& leq = {}) {
  switch (mm.kind()) {
    case Monad::identity:
      return mm.value();
    case Monad::powerset:
    case Monad::powerset_empty: {
      std::vector<T> values;
      for (const Uncertain<T>& inner : mm.support()) {
        detail::require_kind(inner, mm.kind(), "monad_join");
        for (const T& x : inner.support()) values.push_back(x);
      }
      return mm.kind() == Monad::powerset
                 ? Uncertain<T>::subset(std::move(values))
                 : Uncertain<T>::subset_or_empty(std::move(values));
    }
    case Monad::interval: {
      const Uncertain<T>& first = mm.lo();
      const Uncertain<T>& second = mm.hi();
      detail::require_kind(first, Monad::interval, "monad_join");
      detail::require_kind(second, Monad::interval, "monad_join");
      if (!leq) throw InvalidUncertain("interval join needs a carrier order");
      if (!leq(first.lo(), second.lo()) || !leq(first.hi(), second.hi()))
        throw InvalidUncertain("interval join: outer endpoints out of order");
      return Uncertain<T>::between(first.lo(), second.hi(), leq);
    }
    case Monad::dist: {
      std::vector<std::pair<T, Rat>> entries;
      for (std::size_t i = 0; i < mm.support().size(); ++i) {
        const Uncertain<T>& inner = mm.support()[i];
        detail::require_kind(inner, Monad::dist, "monad_join");
        for (std::size_t j = 0; j < inner.support().size(); ++j)
          entries.emplace_back(inner.support()[j],
                               mm.weights()[i] * inner.weights()[j]);
      }
      return Uncertain<T>::weighted(std::move(entries));
    }
  }
  throw MonadMismatch("unknown monad kind");
}

}  // namespace codp
