#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "codp/param.hpp"

namespace codp {

// Co-design diagram expression. Leaves name objects in a WiringEnv; inner
// nodes are series/parallel composition, feedback over the trailing tensor
// factor, and reparametrization.
class WiringExpr {
public:
  enum class Kind { prim, id, compose, tensor, loop, lift, reparam };

  static WiringExpr prim(std::string name);
  static WiringExpr id(std::string poset);
  static WiringExpr lift(std::string map);
  static WiringExpr compose(WiringExpr a, WiringExpr b);
  static WiringExpr tensor(WiringExpr a, WiringExpr b);
  static WiringExpr loop(WiringExpr a, std::string poset);
  static WiringExpr reparam(std::string name, WiringExpr a);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const WiringExpr& a() const { return *a_; }
  const WiringExpr& b() const { return *b_; }

private:
  WiringExpr(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  Kind kind_;
  std::string name_;
  std::shared_ptr<const WiringExpr> a_, b_;
};

// Name bindings for wiring leaves. Posets assembled from declared products
// register their factor decomposition so that feedback loops can peel the
// trailing factor off nested product labels.
struct WiringEnv {
  std::map<std::string, FinitePoset> posets;
  std::map<std::string, MonotoneMap> maps;
  std::map<std::string, ParamCell> cells;
  std::map<std::string, Reparam> reparams;

  void register_atoms(const FinitePoset& poset, std::vector<FinitePoset> parts);
  std::vector<FinitePoset> atoms_of(const FinitePoset& poset) const;

  const FinitePoset& poset(const std::string& name) const;
  const MonotoneMap& map(const std::string& name) const;
  const ParamCell& cell(const std::string& name) const;
  const Reparam& reparam(const std::string& name) const;

private:
  std::vector<std::pair<FinitePoset, std::vector<FinitePoset>>> atom_table_;
};

// Left fold of poset products; the unit poset for an empty list.
FinitePoset flatten_factors(const std::vector<FinitePoset>& factors);

struct TypedExpr {
  const WiringExpr* node = nullptr;
  std::string path;
  std::vector<FinitePoset> source_factors, target_factors;
  ParamSpace space;
  Monad monad = Monad::identity;
  std::vector<TypedExpr> children;

  FinitePoset source() const { return flatten_factors(source_factors); }
  FinitePoset target() const { return flatten_factors(target_factors); }
};

// Annotates every node with source/target factor lists, parameter space and
// the expression's resolved monad; the first mismatch is reported with the
// node path. The monad is the unique instance named by prim/reparam leaves
// (identity when there are none); mixing instances is an error, never a
// coercion.
TypedExpr typecheck(const WiringEnv& env, const WiringExpr& expr);

// Structural recursion to a single cell. Objects are canonicalized to the
// left fold of the atomic factor lists, so series/parallel grouping does not
// affect the result.
ParamCell evaluate(const WiringEnv& env, const TypedExpr& typed);
ParamCell evaluate(const WiringEnv& env, const WiringExpr& expr);

}  // namespace codp
