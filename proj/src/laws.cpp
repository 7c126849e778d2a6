#include "codp/laws.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "codp/rng.hpp"

namespace codp {

namespace {

using Val = Uncertain<std::size_t>;
using Kernel = std::vector<Val>;  // table over domain indices

bool set_based(Monad kind) { return kind != Monad::interval; }

std::string describe_poset(const FinitePoset& p) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out << ",";
    out << p.label(i);
  }
  out << "|";
  bool first = true;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (a != b && p.leq(a, b)) {
        if (!first) out << " ";
        out << p.label(a) << "<=" << p.label(b);
        first = false;
      }
  out << "}";
  return out.str();
}

std::string render_val(const FinitePoset& p, const Val& v) {
  std::ostringstream out;
  switch (v.kind()) {
    case Monad::identity:
      out << p.label(v.value());
      break;
    case Monad::powerset:
    case Monad::powerset_empty: {
      out << "{";
      for (std::size_t i = 0; i < v.support().size(); ++i) {
        if (i) out << ",";
        out << p.label(v.support()[i]);
      }
      out << "}";
      break;
    }
    case Monad::interval:
      out << "[" << p.label(v.lo()) << "," << p.label(v.hi()) << "]";
      break;
    case Monad::dist: {
      out << "{";
      for (std::size_t i = 0; i < v.support().size(); ++i) {
        if (i) out << ",";
        out << p.label(v.support()[i]) << ":" << rat_to_string(v.weights()[i]);
      }
      out << "}";
      break;
    }
  }
  return out.str();
}

std::vector<std::vector<std::size_t>> enumerate_functions(std::size_t nx,
                                                          std::size_t ny) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current(nx, 0);
  while (true) {
    out.push_back(current);
    std::size_t i = 0;
    for (; i < nx; ++i) {
      if (++current[i] < ny) break;
      current[i] = 0;
    }
    if (i == nx) break;
  }
  if (nx == 0) out.assign(1, {});
  return out;
}

std::vector<std::vector<std::size_t>> enumerate_maps(const FinitePoset& x,
                                                     const FinitePoset& y,
                                                     bool monotone_only) {
  auto fns = enumerate_functions(x.size(), y.size());
  if (!monotone_only) return fns;
  std::vector<std::vector<std::size_t>> out;
  for (auto& f : fns)
    if (is_monotone(x, y, f)) out.push_back(std::move(f));
  return out;
}

// All Kleisli tables X -> M(Y). For dist this is every pure table plus a
// seeded random sample; everything else is genuinely exhaustive.
std::vector<Kernel> enumerate_kernels(Monad kind, const FinitePoset& x,
                                      const FinitePoset& y,
                                      const LawOptions& opts, Rng& rng) {
  std::vector<Kernel> out;
  if (kind == Monad::dist) {
    for (const auto& f : enumerate_functions(x.size(), y.size())) {
      Kernel k;
      k.reserve(x.size());
      for (std::size_t i : f) k.push_back(monad_unit(kind, i));
      out.push_back(std::move(k));
    }
    for (unsigned r = 0; r < opts.random_kernels; ++r) {
      Kernel k;
      k.reserve(x.size());
      for (std::size_t i = 0; i < x.size(); ++i)
        k.push_back(random_value(rng, kind, y, opts.value_den));
      out.push_back(std::move(k));
    }
    return out;
  }
  std::vector<Val> values = enumerate_values(kind, y, opts.value_den);
  double total_est = 1;
  for (std::size_t i = 0; i < x.size(); ++i) total_est *= double(values.size());
  // Larger carriers make the table count explode; thin deterministically.
  const double budget = 4096;
  const std::size_t stride =
      total_est > budget ? static_cast<std::size_t>(total_est / budget) + 1 : 1;
  const std::size_t total = static_cast<std::size_t>(total_est);
  for (std::size_t idx = 0; idx < total; idx += stride) {
    Kernel k;
    k.reserve(x.size());
    std::size_t rest = idx;
    for (std::size_t i = 0; i < x.size(); ++i) {
      k.push_back(values[rest % values.size()]);
      rest /= values.size();
    }
    bool ok = true;
    if (kind == Monad::interval) {
      for (std::size_t a = 0; a < x.size() && ok; ++a)
        for (std::size_t b = 0; b < x.size() && ok; ++b)
          if (x.leq(a, b))
            ok = y.leq(k[a].lo(), k[b].lo()) && y.leq(k[a].hi(), k[b].hi());
    }
    if (ok) out.push_back(std::move(k));
  }
  return out;
}

using PairVal = Uncertain<std::pair<std::size_t, std::size_t>>;

Leq<std::pair<std::size_t, std::size_t>> pair_leq(const FinitePoset& x,
                                                  const FinitePoset& y) {
  return [x, y](const std::pair<std::size_t, std::size_t>& a,
                const std::pair<std::size_t, std::size_t>& b) {
    return x.leq(a.first, b.first) && y.leq(a.second, b.second);
  };
}

Leq<Val> value_leq(const FinitePoset& p) {
  // Endpoint order on M(P); only consulted for the interval instance.
  return [p](const Val& a, const Val& b) {
    return p.leq(a.lo(), b.lo()) && p.leq(a.hi(), b.hi());
  };
}

std::vector<Uncertain<Val>> enumerate_nested(Monad kind, const FinitePoset& p,
                                             const LawOptions& opts) {
  std::vector<Val> inner = enumerate_values(kind, p, opts.nested_den);
  std::vector<Uncertain<Val>> out;
  switch (kind) {
    case Monad::identity:
      for (const Val& v : inner) out.push_back(Uncertain<Val>::exactly(v));
      break;
    case Monad::powerset:
    case Monad::powerset_empty: {
      const std::size_t n = inner.size();
      if (n > 10) break;  // guarded by carrier sizes elsewhere
      const std::uint64_t total = std::uint64_t{1} << n;
      for (std::uint64_t mask = kind == Monad::powerset ? 1 : 0; mask < total;
           ++mask) {
        std::vector<Val> sub;
        for (std::size_t i = 0; i < n; ++i)
          if ((mask >> i) & 1) sub.push_back(inner[i]);
        if (kind == Monad::powerset) {
          if (!sub.empty()) out.push_back(Uncertain<Val>::subset(std::move(sub)));
        } else {
          out.push_back(Uncertain<Val>::subset_or_empty(std::move(sub)));
        }
      }
      break;
    }
    case Monad::interval: {
      Leq<Val> leq = value_leq(p);
      for (const Val& a : inner)
        for (const Val& b : inner)
          if (leq(a, b)) out.push_back(Uncertain<Val>::between(a, b, leq));
      break;
    }
    case Monad::dist: {
      // compositions of nested_den chips over the inner values
      std::set<Uncertain<Val>> seen;
      std::vector<std::size_t> chips(opts.nested_den, 0);
      if (inner.empty()) break;
      while (true) {
        std::vector<std::pair<Val, Rat>> entries;
        for (std::size_t chip : chips)
          entries.emplace_back(inner[chip], Rat(1, opts.nested_den));
        seen.insert(Uncertain<Val>::weighted(std::move(entries)));
        std::size_t i = 0;
        for (; i < chips.size(); ++i) {
          if (++chips[i] < inner.size()) break;
          chips[i] = 0;
        }
        if (i == chips.size()) break;
      }
      out.assign(seen.begin(), seen.end());
      break;
    }
  }
  return out;
}

struct CheckBuilder {
  LawCheck check;
  explicit CheckBuilder(std::string law) { check.law = std::move(law); }
  void fail(const std::string& witness) {
    if (check.pass) {
      check.pass = false;
      check.witness = witness;
    }
  }
};

}  // namespace

bool LawReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const LawCheck* LawReport::find(const std::string& law) const {
  for (const auto& c : checks)
    if (c.law == law) return &c;
  return nullptr;
}

std::vector<Val> enumerate_values(Monad kind, const FinitePoset& p,
                                  unsigned den) {
  const std::size_t n = p.size();
  std::vector<Val> out;
  switch (kind) {
    case Monad::identity:
      for (std::size_t i = 0; i < n; ++i) out.push_back(Val::exactly(i));
      break;
    case Monad::powerset:
    case Monad::powerset_empty: {
      const std::uint64_t total = std::uint64_t{1} << n;
      for (std::uint64_t mask = kind == Monad::powerset ? 1 : 0; mask < total;
           ++mask) {
        std::vector<std::size_t> sub;
        for (std::size_t i = 0; i < n; ++i)
          if ((mask >> i) & 1) sub.push_back(i);
        out.push_back(kind == Monad::powerset
                          ? Val::subset(std::move(sub))
                          : Val::subset_or_empty(std::move(sub)));
      }
      break;
    }
    case Monad::interval:
      for (std::size_t lo = 0; lo < n; ++lo)
        for (std::size_t hi = 0; hi < n; ++hi)
          if (p.leq(lo, hi)) out.push_back(Val::between(lo, hi, poset_leq(p)));
      break;
    case Monad::dist: {
      if (n == 0) break;
      std::set<Val> seen;
      std::vector<std::size_t> chips(den, 0);
      while (true) {
        std::vector<std::pair<std::size_t, Rat>> entries;
        for (std::size_t chip : chips) entries.emplace_back(chip, Rat(1, den));
        seen.insert(Val::weighted(std::move(entries)));
        std::size_t i = 0;
        for (; i < chips.size(); ++i) {
          if (++chips[i] < n) break;
          chips[i] = 0;
        }
        if (i == chips.size()) break;
      }
      out.assign(seen.begin(), seen.end());
      break;
    }
  }
  return out;
}

LawReport check_monad_laws(Monad kind, const std::vector<FinitePoset>& all,
                           const LawOptions& opts) {
  for (const auto& p : all)
    if (p.size() > opts.carrier_cap)
      throw CarrierTooLarge("law carrier " + describe_poset(p) + " exceeds cap " +
                            std::to_string(opts.carrier_cap));

  // Set-based instances depend only on carrier size; keep one poset per size.
  std::vector<FinitePoset> carriers;
  if (set_based(kind)) {
    std::set<std::size_t> sizes;
    for (const auto& p : all)
      if (sizes.insert(p.size()).second) carriers.push_back(p);
  } else {
    carriers = all;
  }

  LawReport report;
  report.instance = monad_name(kind);
  report.seed = opts.seed;
  for (const auto& p : carriers) report.carriers.push_back(describe_poset(p));
  if (kind == Monad::dist) {
    std::ostringstream note;
    note << "dist sampling: measures with denominator dividing "
         << opts.value_den << " (nested level " << opts.nested_den
         << "); kernels: all pure plus " << opts.random_kernels
         << " seeded samples";
    report.sample_note = note.str();
  }
  if (set_based(kind))
    report.sample_note += std::string(report.sample_note.empty() ? "" : "; ") +
                          "set-based instance: carriers deduplicated by size";

  Rng rng(opts.seed);

  CheckBuilder left_unit("left_unit");
  CheckBuilder right_unit("right_unit");
  CheckBuilder bind_assoc("bind_assoc");
  CheckBuilder nat_left("strength_natural_left");
  CheckBuilder nat_right("strength_natural_right");
  CheckBuilder eta_monoidal("eta_monoidal");
  CheckBuilder mu_monoidal("mu_monoidal");
  CheckBuilder symmetry("symmetry");
  CheckBuilder affine("affine");

  const bool monotone_only = kind == Monad::interval;

  // left unit and right unit
  for (const auto& x : carriers) {
    for (const Val& m : enumerate_values(kind, x, opts.value_den)) {
      Val back = mbind(m, [&](std::size_t v) { return monad_unit(kind, v); },
                      poset_leq(x));
      if (!(back == m))
        right_unit.fail("carrier " + describe_poset(x) + ", m = " +
                        render_val(x, m));
    }
    for (const auto& y : carriers) {
      for (const Kernel& f : enumerate_kernels(kind, x, y, opts, rng)) {
        for (std::size_t v = 0; v < x.size(); ++v) {
          Val lhs = mbind(monad_unit(kind, v),
                         [&](std::size_t a) { return f[a]; }, poset_leq(y));
          if (!(lhs == f[v]))
            left_unit.fail("carrier " + describe_poset(x) + ", x = " +
                           x.label(v));
        }
      }
    }
  }

  // associativity of bind; exhaustive over kernel pairs for carriers up to
  // three elements, stride-sampled beyond that
  for (const auto& x : carriers)
    for (const auto& y : carriers)
      for (const auto& z : carriers) {
        auto fs = enumerate_kernels(kind, x, y, opts, rng);
        auto gs = enumerate_kernels(kind, y, z, opts, rng);
        auto ms = enumerate_values(kind, x, opts.value_den);
        Leq<std::size_t> leq_y = poset_leq(y), leq_z = poset_leq(z);
        const bool small = x.size() <= 3 && y.size() <= 3 && z.size() <= 3;
        const std::size_t total = fs.size() * gs.size();
        const std::size_t budget = 8192;
        const std::size_t stride =
            (!small && total > budget) ? total / budget + 1 : 1;
        for (std::size_t pair = 0; pair < total; pair += stride) {
          const Kernel& f = fs[pair / gs.size()];
          const Kernel& g = gs[pair % gs.size()];
          Kernel composite;
          composite.reserve(x.size());
          for (std::size_t i = 0; i < x.size(); ++i)
            composite.push_back(
                mbind(f[i], [&](std::size_t b) { return g[b]; }, leq_z));
          for (const Val& m : ms) {
            Val lhs = mbind(mbind(m, [&](std::size_t a) { return f[a]; }, leq_y),
                            [&](std::size_t b) { return g[b]; }, leq_z);
            Val rhs =
                mbind(m, [&](std::size_t a) { return composite[a]; }, leq_z);
            if (!(lhs == rhs)) {
              bind_assoc.fail("carriers " + describe_poset(x) + "," +
                              describe_poset(y) + "," + describe_poset(z) +
                              ", m = " + render_val(x, m));
              break;
            }
          }
        }
      }

  // naturality of the strength in each argument
  for (const auto& x : carriers)
    for (const auto& x2 : carriers)
      for (const auto& y : carriers) {
        auto maps = enumerate_maps(x, x2, monotone_only);
        auto mxs = enumerate_values(kind, x, opts.value_den);
        auto mys = enumerate_values(kind, y, opts.value_den);
        if (x.size() > 3 || x2.size() > 3 || y.size() > 3) {
          // keep oversized carriers affordable
          auto thin = [](auto& family, std::size_t cap) {
            if (family.size() <= cap) return;
            decltype(family) kept;
            const std::size_t stride = family.size() / cap + 1;
            for (std::size_t i = 0; i < family.size(); i += stride)
              kept.push_back(family[i]);
            family = std::move(kept);
          };
          thin(maps, 64);
          thin(mxs, 24);
          thin(mys, 24);
        }
        for (const auto& f : maps)
          for (const Val& mx : mxs)
            for (const Val& my : mys) {
              PairVal before = strength(mx, my, pair_leq(x, y));
              PairVal lhs = umap(
                  before,
                  [&](const std::pair<std::size_t, std::size_t>& v) {
                    return std::make_pair(f[v.first], v.second);
                  },
                  pair_leq(x2, y));
              PairVal rhs = strength(
                  umap(mx, [&](std::size_t v) { return f[v]; }, poset_leq(x2)),
                  my, pair_leq(x2, y));
              if (!(lhs == rhs))
                nat_left.fail("carriers " + describe_poset(x) + "->" +
                              describe_poset(x2) + " with " + describe_poset(y) +
                              ", mx = " + render_val(x, mx) + ", my = " +
                              render_val(y, my));
              PairVal before2 = strength(my, mx, pair_leq(y, x));
              PairVal lhs2 = umap(
                  before2,
                  [&](const std::pair<std::size_t, std::size_t>& v) {
                    return std::make_pair(v.first, f[v.second]);
                  },
                  pair_leq(y, x2));
              PairVal rhs2 = strength(
                  my, umap(mx, [&](std::size_t v) { return f[v]; }, poset_leq(x2)),
                  pair_leq(y, x2));
              if (!(lhs2 == rhs2))
                nat_right.fail("carriers " + describe_poset(y) + " with " +
                               describe_poset(x) + "->" + describe_poset(x2) +
                               ", mx = " + render_val(x, mx) + ", my = " +
                               render_val(y, my));
            }
      }

  // eta monoidal
  for (const auto& x : carriers)
    for (const auto& y : carriers)
      for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = 0; b < y.size(); ++b) {
          PairVal lhs = strength(monad_unit(kind, a), monad_unit(kind, b),
                                 pair_leq(x, y));
          PairVal rhs = monad_unit(kind, std::make_pair(a, b));
          if (!(lhs == rhs))
            eta_monoidal.fail("elements " + x.label(a) + ", " + y.label(b));
        }

  // mu monoidal
  for (const auto& x : carriers)
    for (const auto& y : carriers) {
      if ((kind == Monad::powerset || kind == Monad::powerset_empty) &&
          (x.size() > 3 || y.size() > 3))
        continue;  // nested powerset enumeration grows doubly exponentially
      auto mmxs = enumerate_nested(kind, x, opts);
      auto mmys = enumerate_nested(kind, y, opts);
      Leq<std::pair<std::size_t, std::size_t>> leq_xy = pair_leq(x, y);
      Leq<Val> leq_mx = value_leq(x);
      Leq<Val> leq_my = value_leq(y);
      Leq<PairVal> leq_mxy = [leq_xy](const PairVal& a, const PairVal& b) {
        return leq_xy(a.lo(), b.lo()) && leq_xy(a.hi(), b.hi());
      };
      Leq<std::pair<Val, Val>> leq_mxmy = [leq_mx, leq_my](
                                              const std::pair<Val, Val>& a,
                                              const std::pair<Val, Val>& b) {
        return leq_mx(a.first, b.first) && leq_my(a.second, b.second);
      };
      for (const auto& mmx : mmxs)
        for (const auto& mmy : mmys) {
          auto paired = strength(mmx, mmy, leq_mxmy);
          auto inner = umap(
              paired,
              [&](const std::pair<Val, Val>& p) {
                return strength(p.first, p.second, leq_xy);
              },
              leq_mxy);
          PairVal lhs = monad_join(inner, leq_xy);
          PairVal rhs = strength(monad_join(mmx, poset_leq(x)),
                                 monad_join(mmy, poset_leq(y)), leq_xy);
          if (!(lhs == rhs))
            mu_monoidal.fail("carriers " + describe_poset(x) + "," +
                             describe_poset(y));
        }
    }

  // symmetry of the strength
  for (const auto& x : carriers)
    for (const auto& y : carriers) {
      auto mxs = enumerate_values(kind, x, opts.value_den);
      auto mys = enumerate_values(kind, y, opts.value_den);
      for (const Val& mx : mxs)
        for (const Val& my : mys) {
          PairVal lhs = umap(
              strength(mx, my, pair_leq(x, y)),
              [](const std::pair<std::size_t, std::size_t>& v) {
                return std::make_pair(v.second, v.first);
              },
              pair_leq(y, x));
          PairVal rhs = strength(my, mx, pair_leq(y, x));
          if (!(lhs == rhs))
            symmetry.fail("carriers " + describe_poset(x) + "," +
                          describe_poset(y) + ", mx = " + render_val(x, mx) +
                          ", my = " + render_val(y, my));
        }
    }

  // affine: M(1) must have exactly one inhabitant
  {
    FinitePoset one = FinitePoset::chain(1);
    auto values = enumerate_values(kind, one, opts.value_den);
    Val eta = monad_unit(kind, std::size_t{0});
    if (values.size() != 1)
      affine.fail("M(1) has " + std::to_string(values.size()) +
                  " inhabitants, e.g. " +
                  render_val(one, values.empty() ? eta : values.front()));
    else if (!(values.front() == eta))
      affine.fail("sole inhabitant of M(1) differs from eta");
  }

  report.checks = {left_unit.check, right_unit.check, bind_assoc.check,
                   nat_left.check,  nat_right.check,  eta_monoidal.check,
                   mu_monoidal.check, symmetry.check, affine.check};
  return report;
}

LawReport check_markov_axioms(Monad kind, const std::vector<FinitePoset>& all,
                              const LawOptions& opts) {
  for (const auto& p : all)
    if (p.size() > opts.carrier_cap)
      throw CarrierTooLarge("law carrier " + describe_poset(p) + " exceeds cap " +
                            std::to_string(opts.carrier_cap));
  LawReport report;
  report.instance = monad_name(kind);
  report.seed = opts.seed;
  for (const auto& p : all) report.carriers.push_back(describe_poset(p));

  Rng rng(opts.seed);

  CheckBuilder coassoc("copy_coassociative");
  CheckBuilder commutative("copy_commutative");
  CheckBuilder counital("copy_counital");
  CheckBuilder tensor_compat("copy_tensor_compatible");
  CheckBuilder del_natural("delete_natural");
  CheckBuilder pure_det("lift_pure_deterministic");
  CheckBuilder det_separates("determinism_separates");

  for (const auto& x : all) {
    if (x.size() == 0) continue;
    FiniteKleisli cp = markov_copy(kind, x);
    FiniteKleisli id = FiniteKleisli::identity(kind, x);
    const FinitePoset xx = poset_product(x, x);

    // coassociativity, compared on index tables (the two codomains differ
    // only by label nesting)
    FiniteKleisli lhs = kleisli_compose(cp, kleisli_tensor(cp, id));
    FiniteKleisli rhs = kleisli_compose(cp, kleisli_tensor(id, cp));
    if (!(lhs.table() == rhs.table()))
      coassoc.fail("carrier " + describe_poset(x));

    // commutativity
    FiniteKleisli swapped = kleisli_compose(
        cp, FiniteKleisli::lift_pure(kind, xx, xx,
                                     MonotoneMap::swap(x, x).mapping()));
    if (!(swapped == cp)) commutative.fail("carrier " + describe_poset(x));

    // counitality via both projections
    std::vector<std::size_t> proj1(xx.size()), proj2(xx.size());
    for (std::size_t a = 0; a < x.size(); ++a)
      for (std::size_t b = 0; b < x.size(); ++b) {
        proj1[a * x.size() + b] = a;
        proj2[a * x.size() + b] = b;
      }
    FiniteKleisli left =
        kleisli_compose(cp, FiniteKleisli::lift_pure(kind, xx, x, proj1));
    FiniteKleisli right =
        kleisli_compose(cp, FiniteKleisli::lift_pure(kind, xx, x, proj2));
    if (!(left == id) || !(right == id))
      counital.fail("carrier " + describe_poset(x));
  }

  for (const auto& x : all)
    for (const auto& y : all) {
      if (x.size() == 0 || y.size() == 0) continue;
      // cp_{X (x) Y} vs (cp_X (x) cp_Y) ; mid-four shuffle
      const FinitePoset xy = poset_product(x, y);
      FiniteKleisli lhs = markov_copy(kind, xy);
      const FinitePoset xxyy =
          poset_product(poset_product(x, x), poset_product(y, y));
      const FinitePoset xyxy = poset_product(xy, xy);
      std::vector<std::size_t> mid(xxyy.size());
      const std::size_t nx = x.size(), ny = y.size();
      for (std::size_t a = 0; a < nx; ++a)
        for (std::size_t b = 0; b < nx; ++b)
          for (std::size_t c = 0; c < ny; ++c)
            for (std::size_t d = 0; d < ny; ++d)
              mid[((a * nx + b) * ny + c) * ny + d] =
                  (a * ny + c) * xy.size() + (b * ny + d);
      FiniteKleisli rhs = kleisli_compose(
          kleisli_tensor(markov_copy(kind, x), markov_copy(kind, y)),
          FiniteKleisli::lift_pure(kind, xxyy, xyxy, std::move(mid)));
      if (!(lhs.table() == rhs.table()))
        tensor_compat.fail("carriers " + describe_poset(x) + "," +
                           describe_poset(y));

      // naturality of delete over the kernel family
      for (const Kernel& table : enumerate_kernels(kind, x, y, opts, rng)) {
        FiniteKleisli f(kind, x, y, table);
        FiniteKleisli lhsn = kleisli_compose(f, markov_delete(kind, y));
        FiniteKleisli rhsn = markov_delete(kind, x);
        if (!(lhsn == rhsn)) {
          std::size_t bad = 0;
          for (std::size_t i = 0; i < x.size(); ++i)
            if (!(lhsn.at(i) == rhsn.at(i))) bad = i;
          del_natural.fail("kernel at " + x.label(bad) + " = " +
                           render_val(y, f.at(bad)) + " on carrier " +
                           describe_poset(x));
        }
      }

      // every eta-lift is deterministic
      for (const auto& f : enumerate_maps(x, y, kind == Monad::interval)) {
        FiniteKleisli lifted = FiniteKleisli::lift_pure(kind, x, y, f);
        if (!is_deterministic(lifted))
          pure_det.fail("pure map on " + describe_poset(x));
      }
    }

  // canonical nondeterministic arrows are classified as such
  if (kind == Monad::dist) {
    FinitePoset coin = FinitePoset::antichain({"H", "T"});
    FiniteKleisli fair(kind, unit_poset(), coin,
                       {Val::weighted({{0, Rat(1, 2)}, {1, Rat(1, 2)}})});
    if (is_deterministic(fair))
      det_separates.fail("fair coin classified deterministic");
  } else if (kind == Monad::powerset) {
    FinitePoset two = FinitePoset::antichain({"x", "y"});
    FiniteKleisli both(kind, unit_poset(), two, {Val::subset({0, 1})});
    if (is_deterministic(both))
      det_separates.fail("two-point subset classified deterministic");
  }

  report.checks = {coassoc.check,       commutative.check, counital.check,
                   tensor_compat.check, del_natural.check, pure_det.check};
  if (kind == Monad::dist || kind == Monad::powerset)
    report.checks.push_back(det_separates.check);
  return report;
}

LawReport check_kleisli_category(Monad kind,
                                 const std::vector<FinitePoset>& carriers,
                                 std::size_t trials, std::uint64_t seed) {
  LawReport report;
  report.instance = monad_name(kind);
  report.seed = seed;
  for (const auto& p : carriers) report.carriers.push_back(describe_poset(p));

  Rng rng(seed);
  CheckBuilder assoc("kleisli_associative");
  CheckBuilder unit_left("kleisli_unit_left");
  CheckBuilder unit_right("kleisli_unit_right");

  std::vector<FinitePoset> usable;
  for (const auto& p : carriers)
    if (p.size() > 0) usable.push_back(p);
  if (!usable.empty()) {
    for (std::size_t t = 0; t < trials; ++t) {
      const FinitePoset& x = usable[rng.below(usable.size())];
      const FinitePoset& y = usable[rng.below(usable.size())];
      const FinitePoset& z = usable[rng.below(usable.size())];
      const FinitePoset& w = usable[rng.below(usable.size())];
      FiniteKleisli f = random_kleisli(rng, kind, x, y);
      FiniteKleisli g = random_kleisli(rng, kind, y, z);
      FiniteKleisli h = random_kleisli(rng, kind, z, w);
      if (!(kleisli_compose(kleisli_compose(f, g), h) ==
            kleisli_compose(f, kleisli_compose(g, h))))
        assoc.fail("trial " + std::to_string(t));
      if (!(kleisli_compose(FiniteKleisli::identity(kind, x), f) == f))
        unit_left.fail("trial " + std::to_string(t));
      if (!(kleisli_compose(f, FiniteKleisli::identity(kind, y)) == f))
        unit_right.fail("trial " + std::to_string(t));
    }
  }

  report.checks = {assoc.check, unit_left.check, unit_right.check};
  return report;
}

std::optional<std::pair<std::string, std::string>> twarr_witness(
    const FinitePoset& p) {
  // The inclusion order puts [a,a] below [b,b] only when a = b, so any
  // strictly related pair defeats monotonicity of the candidate unit.
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (a != b && p.leq(a, b)) return std::make_pair(p.label(a), p.label(b));
  return std::nullopt;
}

LawReport twarr_report() {
  LawReport report;
  report.instance = "twarr";
  report.sample_note =
      "counterexample: the twisted-arrow order admits no monotone unit";
  for (std::size_t n = 2; n <= 4; ++n) {
    FinitePoset c = FinitePoset::chain(n);
    report.carriers.push_back(describe_poset(c));
    LawCheck check;
    check.law = "unit_not_monotone_on_chain_" + std::to_string(n);
    auto witness = twarr_witness(c);
    if (witness) {
      check.pass = true;
      check.witness = "witness pair (" + witness->first + "," +
                      witness->second + ")";
    } else {
      check.pass = false;
      check.witness = "no witness found; candidate unit is monotone";
    }
    report.checks.push_back(check);
  }
  FinitePoset discrete = FinitePoset::antichain({"x", "y", "z"});
  report.carriers.push_back(describe_poset(discrete));
  LawCheck vacuous;
  vacuous.law = "unit_monotone_on_discrete";
  if (twarr_witness(discrete)) {
    vacuous.pass = false;
    vacuous.witness = "unexpected witness on a discrete carrier";
  }
  report.checks.push_back(vacuous);
  return report;
}

std::vector<FinitePoset> default_law_carriers(std::size_t max_size) {
  std::vector<FinitePoset> out;
  if (max_size >= 1) out.push_back(FinitePoset::chain(1));
  if (max_size >= 2) {
    out.push_back(FinitePoset::chain(2));
    out.push_back(FinitePoset::antichain({"u", "v"}));
  }
  if (max_size >= 3) {
    // every three-element poset up to isomorphism
    out.push_back(FinitePoset::chain(3));
    out.push_back(FinitePoset::antichain({"a", "b", "c"}));
    out.push_back(FinitePoset::from_pairs({"a", "b", "c"},
                                          {{"a", "c"}, {"b", "c"}}));
    out.push_back(FinitePoset::from_pairs({"a", "b", "c"},
                                          {{"a", "b"}, {"a", "c"}}));
    out.push_back(FinitePoset::from_pairs({"a", "b", "c"}, {{"a", "b"}}));
  }
  if (max_size >= 4) {
    out.push_back(poset_product(FinitePoset::chain(2), FinitePoset::chain(2)));
  }
  return out;
}

}  // namespace codp
