#include "codp/dp.hpp"

namespace codp {

DesignProblem::DesignProblem(FinitePoset fun, FinitePoset res,
                             std::vector<uint8_t> table)
    : fun_(std::move(fun)), res_(std::move(res)), table_(std::move(table)) {
  const std::size_t nf = fun_.size(), nr = res_.size();
  if (table_.size() != nf * nr)
    throw ObjectMismatch("design problem table size does not match posets");
  // Down-closed in f and up-closed in r together give the full condition.
  for (std::size_t f = 0; f < nf; ++f)
    for (std::size_t f2 = 0; f2 < nf; ++f2) {
      if (!fun_.leq(f2, f)) continue;
      for (std::size_t r = 0; r < nr; ++r)
        if (at(f, r) && !at(f2, r))
          throw NotMonotone("design problem not monotone at (" + fun_.label(f) +
                            ", " + fun_.label(f2) + ", " + res_.label(r) + ", " +
                            res_.label(r) + ")");
    }
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t r2 = 0; r2 < nr; ++r2) {
      if (!res_.leq(r, r2)) continue;
      for (std::size_t f = 0; f < nf; ++f)
        if (at(f, r) && !at(f, r2))
          throw NotMonotone("design problem not monotone at (" + fun_.label(f) +
                            ", " + fun_.label(f) + ", " + res_.label(r) + ", " +
                            res_.label(r2) + ")");
    }
}

DesignProblem DesignProblem::all_false(FinitePoset fun, FinitePoset res) {
  std::vector<uint8_t> table(fun.size() * res.size(), 0);
  return DesignProblem(std::move(fun), std::move(res), std::move(table));
}

DesignProblem DesignProblem::all_true(FinitePoset fun, FinitePoset res) {
  std::vector<uint8_t> table(fun.size() * res.size(), 1);
  return DesignProblem(std::move(fun), std::move(res), std::move(table));
}

std::vector<std::pair<std::string, std::string>> DesignProblem::feasible_pairs()
    const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t f = 0; f < fun_.size(); ++f)
    for (std::size_t r = 0; r < res_.size(); ++r)
      if (at(f, r)) out.emplace_back(fun_.label(f), res_.label(r));
  return out;
}

bool DesignProblem::operator<(const DesignProblem& other) const {
  if (!(fun_ == other.fun_)) return fun_ < other.fun_;
  if (!(res_ == other.res_)) return res_ < other.res_;
  return table_ < other.table_;
}

DesignProblem dp_identity(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<uint8_t> table(n * n, 0);
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t r = 0; r < n; ++r) table[f * n + r] = p.leq(f, r) ? 1 : 0;
  return DesignProblem(p, p, std::move(table));
}

DesignProblem dp_compose(const DesignProblem& phi, const DesignProblem& psi) {
  if (!(phi.res() == psi.fun()))
    throw ObjectMismatch("dp_compose: middle posets differ");
  const std::size_t nf = phi.fun().size(), nm = phi.res().size(),
                    nq = psi.res().size();
  std::vector<uint8_t> table(nf * nq, 0);
  for (std::size_t f = 0; f < nf; ++f)
    for (std::size_t q = 0; q < nq; ++q) {
      bool any = false;
      for (std::size_t r = 0; r < nm && !any; ++r)
        any = phi.at(f, r) && psi.at(r, q);
      table[f * nq + q] = any ? 1 : 0;
    }
  return DesignProblem(phi.fun(), psi.res(), std::move(table));
}

DesignProblem dp_tensor(const DesignProblem& phi1, const DesignProblem& phi2) {
  FinitePoset fun = poset_product(phi1.fun(), phi2.fun());
  FinitePoset res = poset_product(phi1.res(), phi2.res());
  const std::size_t nf2 = phi2.fun().size(), nr2 = phi2.res().size();
  const std::size_t nr = res.size();
  std::vector<uint8_t> table(fun.size() * nr, 0);
  for (std::size_t f1 = 0; f1 < phi1.fun().size(); ++f1)
    for (std::size_t f2 = 0; f2 < nf2; ++f2)
      for (std::size_t r1 = 0; r1 < phi1.res().size(); ++r1)
        for (std::size_t r2 = 0; r2 < nr2; ++r2)
          table[(f1 * nf2 + f2) * nr + (r1 * nr2 + r2)] =
              (phi1.at(f1, r1) && phi2.at(f2, r2)) ? 1 : 0;
  return DesignProblem(std::move(fun), std::move(res), std::move(table));
}

DesignProblem dp_lift_monotone(const MonotoneMap& g) {
  const std::size_t nf = g.dom().size(), nr = g.cod().size();
  std::vector<uint8_t> table(nf * nr, 0);
  for (std::size_t f = 0; f < nf; ++f)
    for (std::size_t r = 0; r < nr; ++r)
      table[f * nr + r] = g.cod().leq(g(f), r) ? 1 : 0;
  return DesignProblem(g.dom(), g.cod(), std::move(table));
}

DesignProblem dp_threshold(const MonotoneMap& phi) { return dp_lift_monotone(phi); }

DesignProblem dp_trace(const DesignProblem& phi, const FinitePoset& fun_rest,
                       const FinitePoset& res_rest, const FinitePoset& loop) {
  if (!(phi.fun() == poset_product(fun_rest, loop)))
    throw ObjectMismatch("dp_trace: functionality poset is not fun_rest x loop");
  if (!(phi.res() == poset_product(res_rest, loop)))
    throw ObjectMismatch("dp_trace: resource poset is not res_rest x loop");
  const std::size_t nf = fun_rest.size(), nr = res_rest.size(), np = loop.size();
  std::vector<uint8_t> table(nf * nr, 0);
  for (std::size_t f = 0; f < nf; ++f)
    for (std::size_t r = 0; r < nr; ++r) {
      bool any = false;
      for (std::size_t p = 0; p < np && !any; ++p)
        any = phi.at(f * np + p, r * np + p);
      table[f * nr + r] = any ? 1 : 0;
    }
  return DesignProblem(fun_rest, res_rest, std::move(table));
}

DesignProblem dp_dual_unit(const FinitePoset& p) {
  FinitePoset res = poset_product(p, poset_opposite(p));
  const std::size_t n = p.size();
  std::vector<uint8_t> table(res.size(), 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t q = 0; q < n; ++q)
      table[a * n + q] = p.leq(q, a) ? 1 : 0;
  return DesignProblem(unit_poset(), std::move(res), std::move(table));
}

DesignProblem dp_dual_counit(const FinitePoset& p) {
  FinitePoset fun = poset_product(poset_opposite(p), p);
  const std::size_t n = p.size();
  std::vector<uint8_t> table(fun.size(), 0);
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t a = 0; a < n; ++a)
      table[q * n + a] = p.leq(a, q) ? 1 : 0;
  return DesignProblem(std::move(fun), unit_poset(), std::move(table));
}

bool dp_leq(const DesignProblem& d1, const DesignProblem& d2) {
  if (!(d1.fun() == d2.fun()) || !(d1.res() == d2.res()))
    throw ObjectMismatch("dp_leq: design problems live on different posets");
  for (std::size_t f = 0; f < d1.fun().size(); ++f)
    for (std::size_t r = 0; r < d1.res().size(); ++r)
      if (d1.at(f, r) && !d2.at(f, r)) return false;
  return true;
}

DesignProblem dp_relabel(const DesignProblem& d, const FinitePoset& new_fun,
                         const FinitePoset& new_res) {
  if (new_fun.size() != d.fun().size() || new_fun.table() != d.fun().table())
    throw ObjectMismatch("dp_relabel: functionality orders differ");
  if (new_res.size() != d.res().size() || new_res.table() != d.res().table())
    throw ObjectMismatch("dp_relabel: resource orders differ");
  return DesignProblem(new_fun, new_res, d.table());
}

}  // namespace codp
