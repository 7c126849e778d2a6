#include "codp/model.hpp"

#include <fstream>
#include <set>

namespace codp {

namespace {

std::vector<std::string> string_list(const Json& node) {
  if (!node.is_array()) throw ParseError("expected an array of strings");
  std::vector<std::string> out;
  for (const auto& item : node) {
    if (!item.is_string()) throw ParseError("expected an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

class PosetResolver {
public:
  PosetResolver(const Json& decls, WiringEnv& env) : decls_(decls), env_(env) {}

  void resolve_all(std::vector<Diagnostic>& diagnostics) {
    for (const auto& [name, decl] : decls_.items()) {
      (void)decl;
      try {
        resolve(name);
      } catch (const DomainError& e) {
        diagnostics.push_back({"poset " + name, e.code(), e.what()});
      }
    }
  }

  const FinitePoset& resolve(const std::string& name) {
    if (auto it = env_.posets.find(name); it != env_.posets.end())
      return it->second;
    if (!decls_.contains(name))
      throw UnboundName("poset '" + name + "' is not declared");
    if (!in_progress_.insert(name).second)
      throw ParseError("poset '" + name + "' is defined in terms of itself");
    const Json& decl = decls_.at(name);
    FinitePoset poset = build(decl);
    in_progress_.erase(name);
    auto [it, inserted] = env_.posets.emplace(name, std::move(poset));
    (void)inserted;
    return it->second;
  }

private:
  FinitePoset build(const Json& decl) {
    if (!decl.is_object()) throw ParseError("poset declaration must be an object");
    if (decl.contains("chain")) {
      auto n = decl.at("chain").get<std::int64_t>();
      if (n < 0) throw ParseError("chain length must be nonnegative");
      return FinitePoset::chain(static_cast<std::size_t>(n));
    }
    if (decl.contains("antichain"))
      return FinitePoset::antichain(string_list(decl.at("antichain")));
    if (decl.contains("product")) {
      auto names = string_list(decl.at("product"));
      if (names.size() != 2) throw ParseError("product expects two poset names");
      const FinitePoset& a = resolve(names[0]);
      const FinitePoset& b = resolve(names[1]);
      FinitePoset prod = poset_product(a, b);
      std::vector<FinitePoset> atoms = env_.atoms_of(a);
      std::vector<FinitePoset> b_atoms = env_.atoms_of(b);
      atoms.insert(atoms.end(), b_atoms.begin(), b_atoms.end());
      env_.register_atoms(prod, std::move(atoms));
      return prod;
    }
    if (decl.contains("opposite"))
      return poset_opposite(resolve(decl.at("opposite").get<std::string>()));
    if (decl.contains("elements")) {
      std::vector<std::pair<std::string, std::string>> pairs;
      if (decl.contains("leq_pairs"))
        for (const auto& pair : decl.at("leq_pairs")) {
          auto p = string_list(pair);
          if (p.size() != 2) throw ParseError("leq_pairs entries are [lo, hi]");
          pairs.emplace_back(p[0], p[1]);
        }
      return FinitePoset::from_pairs(string_list(decl.at("elements")), pairs);
    }
    throw ParseError("unknown poset declaration form");
  }

  const Json& decls_;
  WiringEnv& env_;
  std::set<std::string> in_progress_;
};

MonotoneMap parse_map(const Json& decl, const WiringEnv& env) {
  const FinitePoset& dom = env.poset(decl.at("from").get<std::string>());
  const FinitePoset& cod = env.poset(decl.at("to").get<std::string>());
  std::vector<std::size_t> mapping(dom.size(), 0);
  if (decl.contains("by_index")) {
    const Json& arr = decl.at("by_index");
    if (!arr.is_array() || arr.size() != dom.size())
      throw ParseError("by_index must list one codomain index per domain element");
    for (std::size_t i = 0; i < dom.size(); ++i)
      mapping[i] = arr[i].get<std::size_t>();
  } else if (decl.contains("table")) {
    const Json& table = decl.at("table");
    std::vector<bool> seen(dom.size(), false);
    for (const auto& [from_label, to_label] : table.items()) {
      std::size_t i = dom.index_of(from_label);
      mapping[i] = cod.index_of(to_label.get<std::string>());
      seen[i] = true;
    }
    for (std::size_t i = 0; i < dom.size(); ++i)
      if (!seen[i])
        throw ParseError("map table misses element '" + dom.label(i) + "'");
  } else {
    throw ParseError("map declaration needs 'table' or 'by_index'");
  }
  return MonotoneMap(dom, cod, std::move(mapping));
}

DesignProblem parse_dp(const Json& decl, const WiringEnv& env,
                       const std::map<std::string, MonotoneMap>& maps) {
  if (decl.contains("threshold")) {
    const std::string map_name = decl.at("threshold").get<std::string>();
    auto it = maps.find(map_name);
    if (it == maps.end())
      throw UnboundName("threshold map '" + map_name + "' is not declared");
    DesignProblem d = dp_threshold(it->second);
    if (decl.contains("fun") &&
        !(env.poset(decl.at("fun").get<std::string>()) == d.fun()))
      throw ObjectMismatch("declared fun poset differs from the threshold map");
    if (decl.contains("res") &&
        !(env.poset(decl.at("res").get<std::string>()) == d.res()))
      throw ObjectMismatch("declared res poset differs from the threshold map");
    return d;
  }
  const FinitePoset& fun = env.poset(decl.at("fun").get<std::string>());
  const FinitePoset& res = env.poset(decl.at("res").get<std::string>());
  std::vector<uint8_t> table(fun.size() * res.size(), 0);
  for (const auto& pair : decl.at("feasible")) {
    auto p = string_list(pair);
    if (p.size() != 2) throw ParseError("feasible entries are [f, r]");
    table[fun.index_of(p[0]) * res.size() + res.index_of(p[1])] = 1;
  }
  return DesignProblem(fun, res, std::move(table));
}

ParamSpace parse_space(const Json& node, const WiringEnv& env) {
  std::vector<FinitePoset> factors;
  for (const auto& name : string_list(node))
    factors.push_back(env.poset(name));
  return ParamSpace(std::move(factors));
}

const DesignProblem& named_dp(const std::map<std::string, DesignProblem>& dps,
                              const Json& node) {
  const std::string name = node.get<std::string>();
  auto it = dps.find(name);
  if (it == dps.end())
    throw UnboundName("design problem '" + name + "' is not declared");
  return it->second;
}

Uncertain<DesignProblem> parse_cell_entry(
    const Json& entry, Monad kind,
    const std::map<std::string, DesignProblem>& dps) {
  switch (kind) {
    case Monad::identity:
      return Uncertain<DesignProblem>::exactly(named_dp(dps, entry.at("value")));
    case Monad::powerset: {
      std::vector<DesignProblem> values;
      for (const auto& node : entry.at("values"))
        values.push_back(named_dp(dps, node));
      return Uncertain<DesignProblem>::subset(std::move(values));
    }
    case Monad::interval:
      return Uncertain<DesignProblem>::between(named_dp(dps, entry.at("lo")),
                                               named_dp(dps, entry.at("hi")),
                                               dp_hom_leq());
    case Monad::dist: {
      std::vector<std::pair<DesignProblem, Rat>> weighted;
      for (const auto& node : entry.at("dist"))
        weighted.emplace_back(named_dp(dps, node.at("value")),
                              rat_from_json(node.at("prob")));
      return Uncertain<DesignProblem>::weighted(std::move(weighted));
    }
    default:
      throw MonadMismatch("cells are limited to the four uncertainty instances");
  }
}

ParamCell parse_cell(const Json& decl, const WiringEnv& env,
                     const std::map<std::string, DesignProblem>& dps) {
  const FinitePoset& source = env.poset(decl.at("source").get<std::string>());
  const FinitePoset& target = env.poset(decl.at("target").get<std::string>());
  Monad kind = monad_from_name(decl.at("monad").get<std::string>());
  ParamSpace space = decl.contains("space") ? parse_space(decl.at("space"), env)
                                            : ParamSpace();
  std::vector<Uncertain<DesignProblem>> table;
  std::vector<bool> seen(space.size(), false);
  table.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i)
    table.push_back(Uncertain<DesignProblem>::exactly(
        DesignProblem::all_false(source, target)));
  for (const auto& entry : decl.at("entries")) {
    std::size_t index = space.index_of(
        space.tuple_from_labels(string_list(entry.at("at"))));
    if (seen[index]) throw ParseError("duplicate cell entry");
    seen[index] = true;
    table[index] = parse_cell_entry(entry, kind, dps);
  }
  for (std::size_t i = 0; i < space.size(); ++i)
    if (!seen[i])
      throw ParseError("cell entry missing for parameter tuple index " +
                       std::to_string(i));
  return ParamCell(source, target, std::move(space), kind, std::move(table));
}

std::vector<std::size_t> parse_tuple(const Json& node, const ParamSpace& space) {
  return space.tuple_from_labels(string_list(node));
}

Reparam parse_reparam(const Json& decl, const WiringEnv& env) {
  ParamSpace from = parse_space(decl.at("from"), env);
  ParamSpace to = parse_space(decl.at("to"), env);
  Monad kind = monad_from_name(decl.at("monad").get<std::string>());
  std::vector<Uncertain<std::vector<std::size_t>>> table;
  std::vector<bool> seen(from.size(), false);
  for (std::size_t i = 0; i < from.size(); ++i)
    table.push_back(monad_unit(kind, to.tuple_at(0)));
  for (const auto& entry : decl.at("entries")) {
    std::size_t index = from.index_of(parse_tuple(entry.at("at"), from));
    if (seen[index]) throw ParseError("duplicate reparam entry");
    seen[index] = true;
    switch (kind) {
      case Monad::identity:
        table[index] = monad_unit(kind, parse_tuple(entry.at("value"), to));
        break;
      case Monad::powerset: {
        std::vector<std::vector<std::size_t>> tuples;
        for (const auto& node : entry.at("values"))
          tuples.push_back(parse_tuple(node, to));
        table[index] =
            Uncertain<std::vector<std::size_t>>::subset(std::move(tuples));
        break;
      }
      case Monad::interval:
        table[index] = Uncertain<std::vector<std::size_t>>::between(
            parse_tuple(entry.at("lo"), to), parse_tuple(entry.at("hi"), to),
            tuple_order(to));
        break;
      case Monad::dist: {
        std::vector<std::pair<std::vector<std::size_t>, Rat>> weighted;
        for (const auto& node : entry.at("dist"))
          weighted.emplace_back(parse_tuple(node.at("value"), to),
                                rat_from_json(node.at("prob")));
        table[index] = Uncertain<std::vector<std::size_t>>::weighted(
            std::move(weighted));
        break;
      }
      default:
        throw MonadMismatch("reparams are limited to the four instances");
    }
  }
  for (std::size_t i = 0; i < from.size(); ++i)
    if (!seen[i])
      throw ParseError("reparam entry missing for parameter tuple index " +
                       std::to_string(i));
  return Reparam(std::move(from), std::move(to), kind, std::move(table));
}

CostMap parse_cost(const Json& decl, const WiringEnv& env) {
  const FinitePoset& poset = env.poset(decl.at("poset").get<std::string>());
  std::vector<Rat> values(poset.size(), Rat(0));
  std::vector<bool> seen(poset.size(), false);
  for (const auto& [label, value] : decl.at("values").items()) {
    std::size_t i = poset.index_of(label);
    values[i] = rat_from_json(value);
    seen[i] = true;
  }
  for (std::size_t i = 0; i < poset.size(); ++i)
    if (!seen[i])
      throw ParseError("cost map misses element '" + poset.label(i) + "'");
  return CostMap(poset, std::move(values));
}

NamedPrior parse_prior(const Json& decl, const WiringEnv& env) {
  NamedPrior prior;
  prior.space = parse_space(decl.at("space"), env);
  prior.weights.assign(prior.space.size(), Rat(0));
  for (const auto& entry : decl.at("dist")) {
    std::size_t index =
        prior.space.index_of(parse_tuple(entry.at("at"), prior.space));
    prior.weights[index] = rat_from_json(entry.at("prob"));
  }
  Rat total(0);
  for (const Rat& w : prior.weights) {
    if (w < 0) throw InvalidUncertain("negative prior weight");
    total += w;
  }
  if (total != 1)
    throw InvalidUncertain("prior weights sum to " + rat_to_string(total) +
                           ", not 1");
  return prior;
}

ThetaFamily parse_family(const Json& decl, const WiringEnv& env,
                         const std::map<std::string, MonotoneMap>& maps) {
  ThetaFamily family;
  family.grid = parse_space(decl.at("space"), env);
  std::vector<bool> seen(family.grid.size(), false);
  family.maps.reserve(family.grid.size());
  family.complexity.assign(family.grid.size(), Rat(0));
  std::vector<const MonotoneMap*> slots(family.grid.size(), nullptr);
  for (const auto& entry : decl.at("entries")) {
    std::size_t index =
        family.grid.index_of(parse_tuple(entry.at("at"), family.grid));
    if (seen[index]) throw ParseError("duplicate family entry");
    seen[index] = true;
    const std::string map_name = entry.at("map").get<std::string>();
    auto it = maps.find(map_name);
    if (it == maps.end())
      throw UnboundName("family map '" + map_name + "' is not declared");
    slots[index] = &it->second;
    if (entry.contains("complexity"))
      family.complexity[index] = rat_from_json(entry.at("complexity"));
  }
  for (std::size_t i = 0; i < family.grid.size(); ++i) {
    if (!seen[i])
      throw ParseError("family entry missing for grid index " +
                       std::to_string(i));
    family.maps.push_back(*slots[i]);
  }
  return family;
}

}  // namespace

WiringExpr parse_wiring(const Json& node) {
  if (!node.is_array() || node.empty() || !node[0].is_string())
    throw ParseError("wiring nodes are arrays starting with a keyword");
  const std::string head = node[0].get<std::string>();
  auto expect = [&](std::size_t n) {
    if (node.size() != n)
      throw ParseError("wiring node '" + head + "' expects " +
                       std::to_string(n - 1) + " arguments");
  };
  if (head == "prim") {
    expect(2);
    return WiringExpr::prim(node[1].get<std::string>());
  }
  if (head == "id") {
    expect(2);
    return WiringExpr::id(node[1].get<std::string>());
  }
  if (head == "lift") {
    expect(2);
    return WiringExpr::lift(node[1].get<std::string>());
  }
  if (head == "compose") {
    expect(3);
    return WiringExpr::compose(parse_wiring(node[1]), parse_wiring(node[2]));
  }
  if (head == "tensor") {
    expect(3);
    return WiringExpr::tensor(parse_wiring(node[1]), parse_wiring(node[2]));
  }
  if (head == "loop") {
    expect(3);
    return WiringExpr::loop(parse_wiring(node[1]), node[2].get<std::string>());
  }
  if (head == "reparam") {
    expect(3);
    return WiringExpr::reparam(node[1].get<std::string>(), parse_wiring(node[2]));
  }
  throw ParseError("unknown wiring keyword '" + head + "'");
}

std::vector<RawObservation> parse_observations(const Json& array) {
  if (!array.is_array()) throw ParseError("observations must be an array");
  std::vector<RawObservation> out;
  for (const auto& node : array) {
    RawObservation obs;
    obs.fun_label = node.at("f").get<std::string>();
    obs.res_label = node.at("r").get<std::string>();
    const std::string outcome = node.at("outcome").get<std::string>();
    if (outcome == "feasible")
      obs.feasible = true;
    else if (outcome == "infeasible")
      obs.feasible = false;
    else
      throw ParseError("outcome must be 'feasible' or 'infeasible'");
    out.push_back(std::move(obs));
  }
  return out;
}

std::vector<Observation> resolve_observations(
    const std::vector<RawObservation>& raw, const FinitePoset& fun,
    const FinitePoset& res) {
  std::vector<Observation> out;
  out.reserve(raw.size());
  for (const auto& obs : raw)
    out.push_back(
        {fun.index_of(obs.fun_label), res.index_of(obs.res_label), obs.feasible});
  return out;
}

Model load_model(const Json& doc, std::vector<Diagnostic>& diagnostics) {
  Model model;
  if (!doc.is_object()) {
    diagnostics.push_back({"model", "ParseError", "model file must be a JSON object"});
    return model;
  }

  if (doc.contains("posets")) {
    PosetResolver resolver(doc.at("posets"), model.env);
    resolver.resolve_all(diagnostics);
  }

  auto section = [&](const char* key, auto parse_one) {
    if (!doc.contains(key)) return;
    for (const auto& [name, decl] : doc.at(key).items()) {
      try {
        parse_one(name, decl);
      } catch (const DomainError& e) {
        diagnostics.push_back(
            {std::string(key) + " " + name, e.code(), e.what()});
      } catch (const Json::exception& e) {
        diagnostics.push_back({std::string(key) + " " + name, "ParseError", e.what()});
      }
    }
  };

  section("maps", [&](const std::string& name, const Json& decl) {
    model.env.maps.emplace(name, parse_map(decl, model.env));
  });
  section("dps", [&](const std::string& name, const Json& decl) {
    model.dps.emplace(name, parse_dp(decl, model.env, model.env.maps));
  });
  section("cells", [&](const std::string& name, const Json& decl) {
    model.env.cells.emplace(name, parse_cell(decl, model.env, model.dps));
  });
  section("reparams", [&](const std::string& name, const Json& decl) {
    model.env.reparams.emplace(name, parse_reparam(decl, model.env));
  });
  section("costs", [&](const std::string& name, const Json& decl) {
    model.costs.emplace(name, parse_cost(decl, model.env));
  });
  section("priors", [&](const std::string& name, const Json& decl) {
    model.priors.emplace(name, parse_prior(decl, model.env));
  });
  section("families", [&](const std::string& name, const Json& decl) {
    model.families.emplace(name, parse_family(decl, model.env, model.env.maps));
  });
  section("wirings", [&](const std::string& name, const Json& decl) {
    WiringExpr expr = parse_wiring(decl);
    typecheck(model.env, expr);  // surfaces unbound names and type mismatches
    model.wirings.emplace(name, std::move(expr));
  });

  if (doc.contains("observations")) {
    try {
      model.observations = parse_observations(doc.at("observations"));
    } catch (const DomainError& e) {
      diagnostics.push_back({"observations", e.code(), e.what()});
    } catch (const Json::exception& e) {
      diagnostics.push_back({"observations", "ParseError", e.what()});
    }
  }

  return model;
}

Model load_model_file(const std::string& path,
                      std::vector<Diagnostic>& diagnostics) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("model file '" + path + "': " + e.what());
  }
  return load_model(doc, diagnostics);
}

}  // namespace codp
