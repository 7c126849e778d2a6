#include "codp/param.hpp"

#include <algorithm>

namespace codp {

namespace {

void require_cell_kind(Monad kind) {
  if (kind == Monad::powerset_empty)
    throw MonadMismatch("cells are limited to the four uncertainty instances");
}

}  // namespace

ParamSpace::ParamSpace(std::vector<FinitePoset> factors)
    : factors_(std::move(factors)) {}

std::size_t ParamSpace::size() const {
  std::size_t n = 1;
  for (const auto& f : factors_) n *= f.size();
  return n;
}

std::vector<std::size_t> ParamSpace::tuple_at(std::size_t index) const {
  std::vector<std::size_t> tuple(factors_.size(), 0);
  for (std::size_t i = factors_.size(); i-- > 0;) {
    tuple[i] = index % factors_[i].size();
    index /= factors_[i].size();
  }
  return tuple;
}

std::size_t ParamSpace::index_of(const std::vector<std::size_t>& tuple) const {
  if (!valid_tuple(tuple))
    throw ElementNotInPoset("tuple does not live in the parameter space");
  std::size_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    index = index * factors_[i].size() + tuple[i];
  return index;
}

bool ParamSpace::valid_tuple(const std::vector<std::size_t>& tuple) const {
  if (tuple.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    if (tuple[i] >= factors_[i].size()) return false;
  return true;
}

bool ParamSpace::tuple_leq(const std::vector<std::size_t>& a,
                           const std::vector<std::size_t>& b) const {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (!factors_[i].leq(a[i], b[i])) return false;
  return true;
}

std::vector<std::string> ParamSpace::labels_at(std::size_t index) const {
  std::vector<std::size_t> tuple = tuple_at(index);
  std::vector<std::string> labels(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i)
    labels[i] = factors_[i].label(tuple[i]);
  return labels;
}

std::vector<std::size_t> ParamSpace::tuple_from_labels(
    const std::vector<std::string>& labels) const {
  if (labels.size() != factors_.size())
    throw ElementNotInPoset("tuple arity does not match the parameter space");
  std::vector<std::size_t> tuple(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    tuple[i] = factors_[i].index_of(labels[i]);
  return tuple;
}

ParamSpace space_concat(const ParamSpace& a, const ParamSpace& b) {
  std::vector<FinitePoset> factors = a.factors();
  factors.insert(factors.end(), b.factors().begin(), b.factors().end());
  return ParamSpace(std::move(factors));
}

ParamSpace drop_units(const ParamSpace& space) {
  std::vector<FinitePoset> kept;
  for (const auto& f : space.factors())
    if (f.size() != 1) kept.push_back(f);
  return ParamSpace(std::move(kept));
}

Leq<DesignProblem> dp_hom_leq() {
  return [](const DesignProblem& a, const DesignProblem& b) {
    return dp_leq(a, b);
  };
}

Leq<std::vector<std::size_t>> tuple_order(const ParamSpace& space) {
  return [space](const std::vector<std::size_t>& a,
                 const std::vector<std::size_t>& b) {
    return space.tuple_leq(a, b);
  };
}

ParamCell::ParamCell(FinitePoset source, FinitePoset target, ParamSpace space,
                     Monad kind, std::vector<Uncertain<DesignProblem>> table)
    : source_(std::move(source)), target_(std::move(target)),
      space_(std::move(space)), kind_(kind), table_(std::move(table)) {
  require_cell_kind(kind_);
  if (table_.size() != space_.size())
    throw ObjectMismatch("cell table is not total on the parameter space");
  for (const auto& entry : table_) {
    if (entry.kind() != kind_)
      throw MonadMismatch("cell entry has the wrong monad instance");
    for (const DesignProblem& d : entry.support()) {
      if (!(d.fun() == source_) || !(d.res() == target_))
        throw ObjectMismatch("cell entry lives on different posets");
    }
    if (kind_ == Monad::interval && !dp_leq(entry.lo(), entry.hi()))
      throw InvalidUncertain("interval cell entry endpoints out of order");
  }
  if (kind_ == Monad::interval) {
    // the cell is a Pos arrow: entries move monotonically with the parameter
    for (std::size_t i = 0; i < table_.size(); ++i)
      for (std::size_t j = 0; j < table_.size(); ++j) {
        if (!space_.tuple_leq(space_.tuple_at(i), space_.tuple_at(j))) continue;
        if (!dp_leq(table_[i].lo(), table_[j].lo()) ||
            !dp_leq(table_[i].hi(), table_[j].hi()))
          throw NotMonotone("interval cell table is not monotone in the parameter");
      }
  }
}

Reparam::Reparam(ParamSpace from, ParamSpace to, Monad kind,
                 std::vector<Uncertain<std::vector<std::size_t>>> table)
    : from_(std::move(from)), to_(std::move(to)), kind_(kind),
      table_(std::move(table)) {
  require_cell_kind(kind_);
  if (table_.size() != from_.size())
    throw ObjectMismatch("reparam table is not total on its source space");
  for (const auto& entry : table_) {
    if (entry.kind() != kind_)
      throw MonadMismatch("reparam entry has the wrong monad instance");
    for (const auto& tuple : entry.support())
      if (!to_.valid_tuple(tuple))
        throw ElementNotInPoset("reparam entry leaves the target space");
    if (kind_ == Monad::interval && !to_.tuple_leq(entry.lo(), entry.hi()))
      throw InvalidUncertain("interval reparam entry endpoints out of order");
  }
  if (kind_ == Monad::interval) {
    for (std::size_t i = 0; i < table_.size(); ++i)
      for (std::size_t j = 0; j < table_.size(); ++j) {
        if (!from_.tuple_leq(from_.tuple_at(i), from_.tuple_at(j))) continue;
        if (!to_.tuple_leq(table_[i].lo(), table_[j].lo()) ||
            !to_.tuple_leq(table_[i].hi(), table_[j].hi()))
          throw NotMonotone("interval reparam is not monotone");
      }
  }
}

Reparam Reparam::identity(Monad kind, const ParamSpace& space) {
  std::vector<Uncertain<std::vector<std::size_t>>> table;
  table.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i)
    table.push_back(monad_unit(kind, space.tuple_at(i)));
  return Reparam(space, space, kind, std::move(table));
}

ParamCell cell_lift(const DesignProblem& d, Monad kind) {
  return ParamCell(d.fun(), d.res(), ParamSpace(), kind, {monad_unit(kind, d)});
}

ParamCell cell_identity(const FinitePoset& p, Monad kind) {
  return cell_lift(dp_identity(p), kind);
}

ParamCell promote(const ParamCell& c, Monad kind) {
  if (c.kind() != Monad::identity)
    throw MonadMismatch("promote starts from the identity instance");
  std::vector<Uncertain<DesignProblem>> table;
  table.reserve(c.table().size());
  for (const auto& entry : c.table())
    table.push_back(monad_unit(kind, entry.value()));
  return ParamCell(c.source(), c.target(), c.space(), kind, std::move(table));
}

ParamCell normalized(const ParamCell& c) {
  return ParamCell(c.source(), c.target(), drop_units(c.space()), c.kind(),
                   c.table());
}

ParamCell cell_compose(const ParamCell& c1, const ParamCell& c2) {
  if (c1.kind() != c2.kind())
    throw MonadMismatch("cell_compose: mixed monad instances");
  if (!(c1.target() == c2.source()))
    throw ObjectMismatch("cell_compose: middle posets differ");
  Leq<DesignProblem> leq = dp_hom_leq();
  std::vector<Uncertain<DesignProblem>> table;
  table.reserve(c1.space().size() * c2.space().size());
  for (std::size_t i = 0; i < c1.space().size(); ++i)
    for (std::size_t j = 0; j < c2.space().size(); ++j)
      table.push_back(combine(
          c1.at(i), c2.at(j),
          [](const DesignProblem& a, const DesignProblem& b) {
            return dp_compose(a, b);
          },
          leq));
  return ParamCell(c1.source(), c2.target(),
                   drop_units(space_concat(c1.space(), c2.space())), c1.kind(),
                   std::move(table));
}

ParamCell cell_tensor(const ParamCell& c1, const ParamCell& c2) {
  if (c1.kind() != c2.kind())
    throw MonadMismatch("cell_tensor: mixed monad instances");
  Leq<DesignProblem> leq = dp_hom_leq();
  std::vector<Uncertain<DesignProblem>> table;
  table.reserve(c1.space().size() * c2.space().size());
  for (std::size_t i = 0; i < c1.space().size(); ++i)
    for (std::size_t j = 0; j < c2.space().size(); ++j)
      table.push_back(combine(
          c1.at(i), c2.at(j),
          [](const DesignProblem& a, const DesignProblem& b) {
            return dp_tensor(a, b);
          },
          leq));
  return ParamCell(poset_product(c1.source(), c2.source()),
                   poset_product(c1.target(), c2.target()),
                   drop_units(space_concat(c1.space(), c2.space())), c1.kind(),
                   std::move(table));
}

ParamCell cell_reparam(const Reparam& phi, const ParamCell& c) {
  if (phi.kind() != c.kind())
    throw MonadMismatch("cell_reparam: mixed monad instances");
  if (!(phi.to() == c.space()))
    throw ObjectMismatch("cell_reparam: reparam target is not the cell's space");
  Leq<DesignProblem> leq = dp_hom_leq();
  std::vector<Uncertain<DesignProblem>> table;
  table.reserve(phi.from().size());
  for (std::size_t i = 0; i < phi.from().size(); ++i)
    table.push_back(mbind(
        phi.at(i),
        [&](const std::vector<std::size_t>& u) {
          return c.at(c.space().index_of(u));
        },
        leq));
  return ParamCell(c.source(), c.target(), phi.from(), c.kind(),
                   std::move(table));
}

bool check_2cell(const Reparam& phi, const ParamCell& f, const ParamCell& g) {
  if (f.kind() != g.kind() || phi.kind() != f.kind())
    throw MonadMismatch("check_2cell: mixed monad instances");
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    throw ObjectMismatch("check_2cell: cells do not share their endpoints");
  if (!(phi.from() == f.space()) || !(phi.to() == g.space()))
    throw ObjectMismatch("check_2cell: reparam spaces do not match the cells");
  return cell_reparam(phi, g) == f;
}

Reparam twocell_vcompose(const Reparam& phi, const Reparam& psi) {
  if (phi.kind() != psi.kind())
    throw MonadMismatch("twocell_vcompose: mixed monad instances");
  if (!(phi.to() == psi.from()))
    throw ObjectMismatch("twocell_vcompose: middle spaces differ");
  Leq<std::vector<std::size_t>> leq = tuple_order(psi.to());
  std::vector<Uncertain<std::vector<std::size_t>>> table;
  table.reserve(phi.from().size());
  for (std::size_t i = 0; i < phi.from().size(); ++i)
    table.push_back(mbind(
        phi.at(i),
        [&](const std::vector<std::size_t>& u) {
          return psi.at(psi.from().index_of(u));
        },
        leq));
  return Reparam(phi.from(), psi.to(), phi.kind(), std::move(table));
}

namespace {

// Concatenate tuples over two spaces and strip unit-factor coordinates so the
// result lives in drop_units(concat).
std::vector<std::size_t> concat_strip(const ParamSpace& a, const ParamSpace& b,
                                      const std::vector<std::size_t>& ta,
                                      const std::vector<std::size_t>& tb) {
  std::vector<std::size_t> full = ta;
  full.insert(full.end(), tb.begin(), tb.end());
  std::vector<FinitePoset> factors = a.factors();
  factors.insert(factors.end(), b.factors().begin(), b.factors().end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i].size() != 1) out.push_back(full[i]);
  return out;
}

// Reads a tuple over drop_units(space) back as a tuple over space.
std::vector<std::size_t> reinsert_units(const ParamSpace& space,
                                        const std::vector<std::size_t>& reduced) {
  std::vector<std::size_t> full(space.arity(), 0);
  std::size_t j = 0;
  for (std::size_t i = 0; i < space.arity(); ++i)
    if (space.factors()[i].size() != 1) full[i] = reduced[j++];
  return full;
}

}  // namespace

Reparam twocell_hcompose(const Reparam& phi1, const Reparam& phi2) {
  if (phi1.kind() != phi2.kind())
    throw MonadMismatch("twocell_hcompose: mixed monad instances");
  ParamSpace from = drop_units(space_concat(phi1.from(), phi2.from()));
  ParamSpace to = drop_units(space_concat(phi1.to(), phi2.to()));
  Leq<std::vector<std::size_t>> leq = tuple_order(to);
  std::vector<Uncertain<std::vector<std::size_t>>> table;
  table.reserve(from.size());
  for (std::size_t idx = 0; idx < from.size(); ++idx) {
    std::vector<std::size_t> full = reinsert_units(
        space_concat(phi1.from(), phi2.from()), from.tuple_at(idx));
    std::vector<std::size_t> t1(full.begin(), full.begin() + phi1.from().arity());
    std::vector<std::size_t> t2(full.begin() + phi1.from().arity(), full.end());
    table.push_back(combine(
        phi1.at(phi1.from().index_of(t1)), phi2.at(phi2.from().index_of(t2)),
        [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
          return concat_strip(phi1.to(), phi2.to(), a, b);
        },
        leq));
  }
  return Reparam(std::move(from), std::move(to), phi1.kind(), std::move(table));
}

Reparam tensorator(const ParamCell& f1, const ParamCell& f2,
                   const ParamCell& g1, const ParamCell& g2) {
  Monad kind = f1.kind();
  if (f2.kind() != kind || g1.kind() != kind || g2.kind() != kind)
    throw MonadMismatch("tensorator: mixed monad instances");
  if (!(f1.target() == g1.source()) || !(f2.target() == g2.source()))
    throw ObjectMismatch("tensorator: cells do not form an interchange square");

  const std::vector<const ParamSpace*> src_order = {&f1.space(), &f2.space(),
                                                    &g1.space(), &g2.space()};
  const std::vector<const ParamSpace*> dst_order = {&f1.space(), &g1.space(),
                                                    &f2.space(), &g2.space()};
  auto full_list = [](const std::vector<const ParamSpace*>& spaces) {
    std::vector<FinitePoset> factors;
    for (const ParamSpace* s : spaces)
      factors.insert(factors.end(), s->factors().begin(), s->factors().end());
    return ParamSpace(std::move(factors));
  };
  ParamSpace src_full = full_list(src_order);
  ParamSpace dst_full = full_list(dst_order);
  ParamSpace from = drop_units(src_full);
  ParamSpace to = drop_units(dst_full);

  // position of each source-full coordinate inside the destination-full tuple:
  // blocks [f1 f2 g1 g2] -> [f1 g1 f2 g2]
  const std::size_t a1 = f1.space().arity(), a2 = f2.space().arity(),
                    a3 = g1.space().arity(), a4 = g2.space().arity();
  std::vector<std::size_t> dst_pos(a1 + a2 + a3 + a4);
  for (std::size_t i = 0; i < a1; ++i) dst_pos[i] = i;
  for (std::size_t i = 0; i < a2; ++i) dst_pos[a1 + i] = a1 + a3 + i;
  for (std::size_t i = 0; i < a3; ++i) dst_pos[a1 + a2 + i] = a1 + i;
  for (std::size_t i = 0; i < a4; ++i) dst_pos[a1 + a2 + a3 + i] = a1 + a3 + a2 + i;

  std::vector<Uncertain<std::vector<std::size_t>>> table;
  table.reserve(from.size());
  for (std::size_t idx = 0; idx < from.size(); ++idx) {
    std::vector<std::size_t> src_tuple =
        reinsert_units(src_full, from.tuple_at(idx));
    std::vector<std::size_t> dst_tuple(dst_full.arity());
    for (std::size_t i = 0; i < src_tuple.size(); ++i)
      dst_tuple[dst_pos[i]] = src_tuple[i];
    std::vector<std::size_t> reduced;
    for (std::size_t i = 0; i < dst_full.arity(); ++i)
      if (dst_full.factors()[i].size() != 1) reduced.push_back(dst_tuple[i]);
    table.push_back(monad_unit(kind, std::move(reduced)));
  }
  return Reparam(std::move(from), std::move(to), kind, std::move(table));
}

ParamCell symmetry_cell(const FinitePoset& p, const FinitePoset& q, Monad kind) {
  return cell_lift(dp_lift_monotone(MonotoneMap::swap(p, q)), kind);
}

Reparam symmetry_witness(const ParamCell& f1, const ParamCell& f2) {
  if (f1.kind() != f2.kind())
    throw MonadMismatch("symmetry_witness: mixed monad instances");
  Monad kind = f1.kind();
  ParamSpace src_full = space_concat(f2.space(), f1.space());
  ParamSpace from = drop_units(src_full);
  ParamSpace to = drop_units(space_concat(f1.space(), f2.space()));
  std::vector<Uncertain<std::vector<std::size_t>>> table;
  table.reserve(from.size());
  for (std::size_t idx = 0; idx < from.size(); ++idx) {
    std::vector<std::size_t> full = reinsert_units(src_full, from.tuple_at(idx));
    std::vector<std::size_t> t2(full.begin(), full.begin() + f2.space().arity());
    std::vector<std::size_t> t1(full.begin() + f2.space().arity(), full.end());
    table.push_back(monad_unit(kind, concat_strip(f1.space(), f2.space(), t1, t2)));
  }
  return Reparam(std::move(from), std::move(to), kind, std::move(table));
}

ParamCell cell_relabel(const ParamCell& c, const FinitePoset& new_source,
                       const FinitePoset& new_target) {
  return cell_map(
      c,
      [&](const DesignProblem& d) {
        return dp_relabel(d, new_source, new_target);
      },
      new_source, new_target);
}

ParamCell cell_map(const ParamCell& c,
                   const std::function<DesignProblem(const DesignProblem&)>& f,
                   const FinitePoset& new_source,
                   const FinitePoset& new_target) {
  Leq<DesignProblem> leq = dp_hom_leq();
  std::vector<Uncertain<DesignProblem>> table;
  table.reserve(c.table().size());
  for (const auto& entry : c.table())
    table.push_back(umap(entry, [&](const DesignProblem& d) { return f(d); }, leq));
  return ParamCell(new_source, new_target, c.space(), c.kind(), std::move(table));
}

}  // namespace codp
