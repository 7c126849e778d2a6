#include "codp/poset.hpp"

#include <algorithm>
#include <set>

namespace codp {

namespace {

std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

}  // namespace

FinitePoset::FinitePoset(std::vector<std::string> elements,
                         std::vector<uint8_t> leq_table)
    : elements_(std::move(elements)), leq_(std::move(leq_table)) {
  const std::size_t n = elements_.size();
  if (leq_.size() != n * n)
    throw InvalidPoset("leq table size does not match element count");
  {
    std::set<std::string> seen(elements_.begin(), elements_.end());
    if (seen.size() != n) throw InvalidPoset("duplicate element labels");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (!leq(a, a))
      throw InvalidPoset("not reflexive at '" + elements_[a] + "'");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && leq(a, b) && leq(b, a))
        throw InvalidPoset("not antisymmetric: '" + elements_[a] + "' and '" +
                           elements_[b] + "'");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!leq(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (leq(b, c) && !leq(a, c))
          throw InvalidPoset("not transitive: '" + elements_[a] + "' <= '" +
                             elements_[b] + "' <= '" + elements_[c] + "'");
    }
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return chain_labeled(std::move(labels));
}

FinitePoset FinitePoset::chain_labeled(std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  std::vector<uint8_t> leq(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) leq[a * n + b] = 1;
  return FinitePoset(std::move(labels), std::move(leq));
}

FinitePoset FinitePoset::antichain(std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  std::vector<uint8_t> leq(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) leq[a * n + a] = 1;
  return FinitePoset(std::move(labels), std::move(leq));
}

FinitePoset FinitePoset::from_pairs(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
  const std::size_t n = elements.size();
  std::vector<uint8_t> leq(n * n, 0);
  auto index = [&](const std::string& label) -> std::size_t {
    for (std::size_t i = 0; i < n; ++i)
      if (elements[i] == label) return i;
    throw ElementNotInPoset("unknown element '" + label + "' in leq_pairs");
  };
  for (std::size_t a = 0; a < n; ++a) leq[a * n + a] = 1;
  for (const auto& [lo, hi] : leq_pairs) leq[index(lo) * n + index(hi)] = 1;
  // transitive closure
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a) {
      if (!leq[a * n + k]) continue;
      for (std::size_t b = 0; b < n; ++b)
        if (leq[k * n + b]) leq[a * n + b] = 1;
    }
  return FinitePoset(std::move(elements), std::move(leq));
}

std::optional<std::size_t> FinitePoset::find(std::string_view label) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == label) return i;
  return std::nullopt;
}

std::size_t FinitePoset::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw ElementNotInPoset("element '" + std::string(label) + "' not in poset");
}

bool FinitePoset::operator<(const FinitePoset& other) const {
  if (elements_ != other.elements_) return elements_ < other.elements_;
  return leq_ < other.leq_;
}

FinitePoset poset_product(const FinitePoset& p, const FinitePoset& q) {
  const std::size_t np = p.size(), nq = q.size(), n = np * nq;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = 0; b < nq; ++b)
      labels.push_back(pair_label(p.label(a), q.label(b)));
  std::vector<uint8_t> leq(n * n, 0);
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = 0; b < nq; ++b)
      for (std::size_t c = 0; c < np; ++c)
        for (std::size_t d = 0; d < nq; ++d)
          leq[(a * nq + b) * n + (c * nq + d)] =
              (p.leq(a, c) && q.leq(b, d)) ? 1 : 0;
  return FinitePoset(std::move(labels), std::move(leq));
}

FinitePoset poset_opposite(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<uint8_t> leq(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      leq[a * n + b] = p.leq(b, a) ? 1 : 0;
  return FinitePoset(p.elements(), std::move(leq));
}

const FinitePoset& unit_poset() {
  static const FinitePoset unit = FinitePoset::antichain({"*"});
  return unit;
}

bool is_monotone(const FinitePoset& dom, const FinitePoset& cod,
                 const std::vector<std::size_t>& mapping) {
  if (mapping.size() != dom.size()) return false;
  for (std::size_t i : mapping)
    if (i >= cod.size()) return false;
  for (std::size_t a = 0; a < dom.size(); ++a)
    for (std::size_t b = 0; b < dom.size(); ++b)
      if (dom.leq(a, b) && !cod.leq(mapping[a], mapping[b])) return false;
  return true;
}

MonotoneMap::MonotoneMap(FinitePoset dom, FinitePoset cod,
                         std::vector<std::size_t> mapping)
    : dom_(std::move(dom)), cod_(std::move(cod)), mapping_(std::move(mapping)) {
  if (mapping_.size() != dom_.size())
    throw NotMonotone("mapping is not total on the domain");
  for (std::size_t i : mapping_)
    if (i >= cod_.size())
      throw NotMonotone("mapping hits an index outside the codomain");
  for (std::size_t a = 0; a < dom_.size(); ++a)
    for (std::size_t b = 0; b < dom_.size(); ++b)
      if (dom_.leq(a, b) && !cod_.leq(mapping_[a], mapping_[b]))
        throw NotMonotone("map not monotone: '" + dom_.label(a) + "' <= '" +
                          dom_.label(b) + "' but images are not ordered");
}

MonotoneMap MonotoneMap::identity(const FinitePoset& p) {
  std::vector<std::size_t> mapping(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mapping[i] = i;
  return MonotoneMap(p, p, std::move(mapping));
}

MonotoneMap MonotoneMap::swap(const FinitePoset& p, const FinitePoset& q) {
  FinitePoset pq = poset_product(p, q);
  FinitePoset qp = poset_product(q, p);
  std::vector<std::size_t> mapping(pq.size());
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < q.size(); ++b)
      mapping[a * q.size() + b] = b * p.size() + a;
  return MonotoneMap(std::move(pq), std::move(qp), std::move(mapping));
}

MonotoneMap MonotoneMap::then(const MonotoneMap& next) const {
  if (!(cod_ == next.dom_))
    throw ObjectMismatch("map composition: codomain does not match next domain");
  std::vector<std::size_t> mapping(dom_.size());
  for (std::size_t i = 0; i < dom_.size(); ++i) mapping[i] = next.mapping_[mapping_[i]];
  return MonotoneMap(dom_, next.cod_, std::move(mapping));
}

Antichain::Antichain(FinitePoset poset, std::vector<std::size_t> members)
    : poset_(std::move(poset)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (std::size_t i : members_)
    if (i >= poset_.size())
      throw ElementNotInPoset("antichain member index out of range");
  for (std::size_t a : members_)
    for (std::size_t b : members_)
      if (a != b && poset_.leq(a, b))
        throw InvalidAntichain("comparable members '" + poset_.label(a) +
                               "' <= '" + poset_.label(b) + "'");
}

std::vector<std::string> Antichain::labels() const {
  std::vector<std::string> out;
  out.reserve(members_.size());
  for (std::size_t i : members_) out.push_back(poset_.label(i));
  return out;
}

bool Antichain::operator<(const Antichain& other) const {
  if (members_ != other.members_) return members_ < other.members_;
  return poset_ < other.poset_;
}

Antichain minimal_elements(const FinitePoset& p, std::vector<std::size_t> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  std::vector<std::size_t> mins;
  for (std::size_t s : subset) {
    if (s >= p.size())
      throw ElementNotInPoset("subset member index out of range");
    bool dominated = false;
    for (std::size_t t : subset)
      if (t != s && p.leq(t, s)) {
        dominated = true;
        break;
      }
    if (!dominated) mins.push_back(s);
  }
  return Antichain(p, std::move(mins));
}

SetFamily::SetFamily(FinitePoset ground, std::vector<std::uint64_t> sets)
    : ground_(std::move(ground)), sets_(std::move(sets)) {
  const std::uint64_t full = full_mask(ground_.size());
  for (std::uint64_t m : sets_)
    if ((m & ~full) != 0)
      throw ElementNotInPoset("set mask exceeds the ground carrier");
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool SetFamily::contains(std::uint64_t mask) const {
  return std::binary_search(sets_.begin(), sets_.end(), mask);
}

std::vector<std::string> SetFamily::labels_of(std::uint64_t mask) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ground_.size(); ++i)
    if (mask & (std::uint64_t{1} << i)) out.push_back(ground_.label(i));
  return out;
}

std::uint64_t full_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

SetFamily upper_sets(const FinitePoset& p, std::size_t cap) {
  if (p.size() > cap)
    throw CarrierTooLarge("upper_sets: carrier has " + std::to_string(p.size()) +
                          " elements, cap is " + std::to_string(cap));
  const std::size_t n = p.size();
  std::vector<std::uint64_t> up(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.leq(x, y)) up[x] |= std::uint64_t{1} << y;
  std::vector<std::uint64_t> result;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool closed = true;
    for (std::size_t x = 0; x < n && closed; ++x)
      if ((mask >> x) & 1) closed = (up[x] & ~mask) == 0;
    if (closed) result.push_back(mask);
  }
  return SetFamily(p, std::move(result));
}

SetFamily generate_sigma_algebra(const SetFamily& generators, std::size_t cap) {
  const FinitePoset& ground = generators.ground();
  const std::size_t n = ground.size();
  if (n > cap)
    throw CarrierTooLarge("generate_sigma_algebra: ground has " +
                          std::to_string(n) + " elements, cap is " +
                          std::to_string(cap));
  const std::uint64_t full = full_mask(n);
  // The generated sigma-algebra on a finite carrier is the set of unions of
  // the atoms of the generator family.
  std::vector<std::uint64_t> atom_of(n, full);
  for (std::size_t x = 0; x < n; ++x)
    for (std::uint64_t g : generators.sets())
      atom_of[x] &= ((g >> x) & 1) ? g : (full & ~g);
  std::vector<std::uint64_t> atoms = atom_of;
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  std::vector<std::uint64_t> result;
  const std::uint64_t combos = std::uint64_t{1} << atoms.size();
  for (std::uint64_t pick = 0; pick < combos; ++pick) {
    std::uint64_t u = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if ((pick >> i) & 1) u |= atoms[i];
    result.push_back(u);
  }
  return SetFamily(ground, std::move(result));
}

}  // namespace codp
