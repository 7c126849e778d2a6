#include "codp/wiring.hpp"

#include <set>

namespace codp {

WiringExpr WiringExpr::prim(std::string name) {
  return WiringExpr(Kind::prim, std::move(name));
}

WiringExpr WiringExpr::id(std::string poset) {
  return WiringExpr(Kind::id, std::move(poset));
}

WiringExpr WiringExpr::lift(std::string map) {
  return WiringExpr(Kind::lift, std::move(map));
}

WiringExpr WiringExpr::compose(WiringExpr a, WiringExpr b) {
  WiringExpr e(Kind::compose, "");
  e.a_ = std::make_shared<WiringExpr>(std::move(a));
  e.b_ = std::make_shared<WiringExpr>(std::move(b));
  return e;
}

WiringExpr WiringExpr::tensor(WiringExpr a, WiringExpr b) {
  WiringExpr e(Kind::tensor, "");
  e.a_ = std::make_shared<WiringExpr>(std::move(a));
  e.b_ = std::make_shared<WiringExpr>(std::move(b));
  return e;
}

WiringExpr WiringExpr::loop(WiringExpr a, std::string poset) {
  WiringExpr e(Kind::loop, std::move(poset));
  e.a_ = std::make_shared<WiringExpr>(std::move(a));
  return e;
}

WiringExpr WiringExpr::reparam(std::string name, WiringExpr a) {
  WiringExpr e(Kind::reparam, std::move(name));
  e.a_ = std::make_shared<WiringExpr>(std::move(a));
  return e;
}

void WiringEnv::register_atoms(const FinitePoset& poset,
                               std::vector<FinitePoset> parts) {
  atom_table_.emplace_back(poset, std::move(parts));
}

std::vector<FinitePoset> WiringEnv::atoms_of(const FinitePoset& poset) const {
  for (const auto& [key, parts] : atom_table_)
    if (key == poset) return parts;
  return {poset};
}

namespace {

template <class Map>
const typename Map::mapped_type& lookup(const Map& map, const std::string& name,
                                        const char* what) {
  auto it = map.find(name);
  if (it == map.end())
    throw UnboundName(std::string(what) + " '" + name + "' is not declared");
  return it->second;
}

}  // namespace

const FinitePoset& WiringEnv::poset(const std::string& name) const {
  return lookup(posets, name, "poset");
}
const MonotoneMap& WiringEnv::map(const std::string& name) const {
  return lookup(maps, name, "map");
}
const ParamCell& WiringEnv::cell(const std::string& name) const {
  return lookup(cells, name, "cell");
}
const Reparam& WiringEnv::reparam(const std::string& name) const {
  return lookup(reparams, name, "reparam");
}

FinitePoset flatten_factors(const std::vector<FinitePoset>& factors) {
  if (factors.empty()) return unit_poset();
  FinitePoset out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i)
    out = poset_product(out, factors[i]);
  return out;
}

namespace {

void collect_monads(const WiringEnv& env, const WiringExpr& expr,
                    const std::string& path, std::set<Monad>& found) {
  switch (expr.kind()) {
    case WiringExpr::Kind::prim:
      try {
        found.insert(env.cell(expr.name()).kind());
      } catch (const UnboundName& e) {
        throw UnboundName(std::string(e.what()) + " at " + path);
      }
      break;
    case WiringExpr::Kind::reparam:
      try {
        found.insert(env.reparam(expr.name()).kind());
      } catch (const UnboundName& e) {
        throw UnboundName(std::string(e.what()) + " at " + path);
      }
      collect_monads(env, expr.a(), path + ".0", found);
      break;
    case WiringExpr::Kind::compose:
    case WiringExpr::Kind::tensor:
      collect_monads(env, expr.a(), path + ".0", found);
      collect_monads(env, expr.b(), path + ".1", found);
      break;
    case WiringExpr::Kind::loop:
      collect_monads(env, expr.a(), path + ".0", found);
      break;
    case WiringExpr::Kind::id:
    case WiringExpr::Kind::lift:
      break;
  }
}

TypedExpr annotate(const WiringEnv& env, const WiringExpr& expr, Monad monad,
                   const std::string& path) {
  TypedExpr typed;
  typed.node = &expr;
  typed.path = path;
  typed.monad = monad;
  switch (expr.kind()) {
    case WiringExpr::Kind::prim: {
      const ParamCell& cell = env.cell(expr.name());
      if (cell.kind() != monad)
        throw MonadMismatch("cell '" + expr.name() + "' uses " +
                            monad_name(cell.kind()) + " inside a " +
                            monad_name(monad) + " expression at " + path);
      typed.source_factors = env.atoms_of(cell.source());
      typed.target_factors = env.atoms_of(cell.target());
      typed.space = cell.space();
      return typed;
    }
    case WiringExpr::Kind::id: {
      const FinitePoset& p = env.poset(expr.name());
      typed.source_factors = env.atoms_of(p);
      typed.target_factors = typed.source_factors;
      return typed;
    }
    case WiringExpr::Kind::lift: {
      const MonotoneMap& g = env.map(expr.name());
      typed.source_factors = env.atoms_of(g.dom());
      typed.target_factors = env.atoms_of(g.cod());
      return typed;
    }
    case WiringExpr::Kind::compose: {
      typed.children.push_back(annotate(env, expr.a(), monad, path + ".0"));
      typed.children.push_back(annotate(env, expr.b(), monad, path + ".1"));
      const TypedExpr& a = typed.children[0];
      const TypedExpr& b = typed.children[1];
      if (!(a.target() == b.source()))
        throw ObjectMismatch("compose at " + path +
                             ": middle objects do not match");
      typed.source_factors = a.source_factors;
      typed.target_factors = b.target_factors;
      typed.space = drop_units(space_concat(a.space, b.space));
      return typed;
    }
    case WiringExpr::Kind::tensor: {
      typed.children.push_back(annotate(env, expr.a(), monad, path + ".0"));
      typed.children.push_back(annotate(env, expr.b(), monad, path + ".1"));
      const TypedExpr& a = typed.children[0];
      const TypedExpr& b = typed.children[1];
      typed.source_factors = a.source_factors;
      typed.source_factors.insert(typed.source_factors.end(),
                                  b.source_factors.begin(),
                                  b.source_factors.end());
      typed.target_factors = a.target_factors;
      typed.target_factors.insert(typed.target_factors.end(),
                                  b.target_factors.begin(),
                                  b.target_factors.end());
      typed.space = drop_units(space_concat(a.space, b.space));
      return typed;
    }
    case WiringExpr::Kind::loop: {
      typed.children.push_back(annotate(env, expr.a(), monad, path + ".0"));
      const TypedExpr& a = typed.children[0];
      const FinitePoset& p = env.poset(expr.name());
      if (a.source_factors.empty() || !(a.source_factors.back() == p) ||
          a.target_factors.empty() || !(a.target_factors.back() == p))
        throw LoopFactorMissing(
            "loop at " + path + ": '" + expr.name() +
            "' is not the final tensor factor of both boundaries");
      typed.source_factors.assign(a.source_factors.begin(),
                                  a.source_factors.end() - 1);
      typed.target_factors.assign(a.target_factors.begin(),
                                  a.target_factors.end() - 1);
      typed.space = a.space;
      return typed;
    }
    case WiringExpr::Kind::reparam: {
      typed.children.push_back(annotate(env, expr.a(), monad, path + ".0"));
      const TypedExpr& a = typed.children[0];
      const Reparam& r = env.reparam(expr.name());
      if (r.kind() != monad)
        throw MonadMismatch("reparam '" + expr.name() + "' uses " +
                            monad_name(r.kind()) + " inside a " +
                            monad_name(monad) + " expression at " + path);
      if (!(r.to() == a.space))
        throw ObjectMismatch("reparam at " + path +
                             ": target space does not match the expression");
      typed.source_factors = a.source_factors;
      typed.target_factors = a.target_factors;
      typed.space = r.from();
      return typed;
    }
  }
  throw ParseError("unknown wiring node at " + path);
}

}  // namespace

TypedExpr typecheck(const WiringEnv& env, const WiringExpr& expr) {
  std::set<Monad> found;
  collect_monads(env, expr, "root", found);
  Monad monad = Monad::identity;
  if (found.size() == 1) {
    monad = *found.begin();
  } else if (found.size() > 1) {
    std::string names;
    for (Monad m : found) names += (names.empty() ? "" : ", ") + monad_name(m);
    throw MonadMismatch("expression mixes monad instances {" + names +
                        "}; promote cells explicitly before wiring them");
  }
  return annotate(env, expr, monad, "root");
}

ParamCell evaluate(const WiringEnv& env, const TypedExpr& typed) {
  switch (typed.node->kind()) {
    case WiringExpr::Kind::prim:
      return cell_relabel(env.cell(typed.node->name()), typed.source(),
                          typed.target());
    case WiringExpr::Kind::id:
      return cell_identity(typed.source(), typed.monad);
    case WiringExpr::Kind::lift: {
      ParamCell lifted =
          cell_lift(dp_lift_monotone(env.map(typed.node->name())), typed.monad);
      return cell_relabel(lifted, typed.source(), typed.target());
    }
    case WiringExpr::Kind::compose: {
      ParamCell a = evaluate(env, typed.children[0]);
      ParamCell b = evaluate(env, typed.children[1]);
      return cell_compose(a, b);
    }
    case WiringExpr::Kind::tensor: {
      ParamCell a = evaluate(env, typed.children[0]);
      ParamCell b = evaluate(env, typed.children[1]);
      return cell_relabel(cell_tensor(a, b), typed.source(), typed.target());
    }
    case WiringExpr::Kind::loop: {
      ParamCell inner = evaluate(env, typed.children[0]);
      const FinitePoset& p = env.poset(typed.node->name());
      FinitePoset f_rest = typed.source();
      FinitePoset r_rest = typed.target();
      inner = cell_relabel(inner, poset_product(f_rest, p),
                           poset_product(r_rest, p));
      return cell_map(
          inner,
          [&](const DesignProblem& d) { return dp_trace(d, f_rest, r_rest, p); },
          f_rest, r_rest);
    }
    case WiringExpr::Kind::reparam: {
      ParamCell a = evaluate(env, typed.children[0]);
      return cell_reparam(env.reparam(typed.node->name()), a);
    }
  }
  throw ParseError("unknown wiring node");
}

ParamCell evaluate(const WiringEnv& env, const WiringExpr& expr) {
  return evaluate(env, typecheck(env, expr));
}

}  // namespace codp
