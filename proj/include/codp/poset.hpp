#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "codp/errors.hpp"

namespace codp {

// A finite poset: an ordered list of distinct labels plus a dense <= table.
// Immutable value; reflexivity, antisymmetry and transitivity are checked on
// construction. Carriers stay desk-scale (tens of elements at most).
class FinitePoset {
public:
  FinitePoset() = default;  // the empty poset
  FinitePoset(std::vector<std::string> elements, std::vector<uint8_t> leq);

  static FinitePoset chain(std::size_t n);  // labels "0".."n-1"
  static FinitePoset chain_labeled(std::vector<std::string> labels);
  static FinitePoset antichain(std::vector<std::string> labels);
  // Reflexive-transitive closure of the given pairs; antisymmetry validated.
  static FinitePoset from_pairs(
      std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& leq_pairs);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& label(std::size_t i) const { return elements_[i]; }
  bool leq(std::size_t a, std::size_t b) const {
    return leq_[a * elements_.size() + b] != 0;
  }
  const std::vector<uint8_t>& table() const { return leq_; }

  std::optional<std::size_t> find(std::string_view label) const;
  std::size_t index_of(std::string_view label) const;  // ElementNotInPoset

  bool operator==(const FinitePoset& other) const = default;
  bool operator<(const FinitePoset& other) const;

private:
  std::vector<std::string> elements_;
  std::vector<uint8_t> leq_;
};

// Cartesian product; element (a,b) gets label "(a,b)", order componentwise.
FinitePoset poset_product(const FinitePoset& p, const FinitePoset& q);
FinitePoset poset_opposite(const FinitePoset& p);
// The one-element poset, label "*". Monoidal unit of DP.
const FinitePoset& unit_poset();

bool is_monotone(const FinitePoset& dom, const FinitePoset& cod,
                 const std::vector<std::size_t>& mapping);

// A total monotone map between posets, stored by codomain index.
class MonotoneMap {
public:
  MonotoneMap(FinitePoset dom, FinitePoset cod, std::vector<std::size_t> mapping);

  static MonotoneMap identity(const FinitePoset& p);
  // (a,b) |-> (b,a) on the product posets.
  static MonotoneMap swap(const FinitePoset& p, const FinitePoset& q);

  const FinitePoset& dom() const { return dom_; }
  const FinitePoset& cod() const { return cod_; }
  std::size_t operator()(std::size_t i) const { return mapping_[i]; }
  const std::vector<std::size_t>& mapping() const { return mapping_; }

  MonotoneMap then(const MonotoneMap& next) const;  // diagrammatic order

  bool operator==(const MonotoneMap& other) const = default;

private:
  FinitePoset dom_, cod_;
  std::vector<std::size_t> mapping_;
};

// A set of pairwise incomparable elements, kept as sorted indices.
class Antichain {
public:
  Antichain(FinitePoset poset, std::vector<std::size_t> members);

  const FinitePoset& poset() const { return poset_; }
  const std::vector<std::size_t>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  std::vector<std::string> labels() const;

  bool operator==(const Antichain& other) const = default;
  bool operator<(const Antichain& other) const;

private:
  FinitePoset poset_;
  std::vector<std::size_t> members_;
};

// { s in S : no other s' in S with s' <= s }.
Antichain minimal_elements(const FinitePoset& p, std::vector<std::size_t> subset);

// A family of subsets of a poset carrier, each stored as a bitmask over
// element indices. Sorted and deduplicated.
class SetFamily {
public:
  SetFamily(FinitePoset ground, std::vector<std::uint64_t> sets);

  const FinitePoset& ground() const { return ground_; }
  const std::vector<std::uint64_t>& sets() const { return sets_; }
  bool contains(std::uint64_t mask) const;
  std::size_t count() const { return sets_.size(); }
  std::vector<std::string> labels_of(std::uint64_t mask) const;

  bool operator==(const SetFamily& other) const = default;

private:
  FinitePoset ground_;
  std::vector<std::uint64_t> sets_;
};

// All up-closed subsets. Exponential; refuses carriers above `cap`.
SetFamily upper_sets(const FinitePoset& p, std::size_t cap = 12);

// Least family containing the generators, empty set and full carrier, closed
// under complement and union. Exponential; refuses grounds above `cap`.
SetFamily generate_sigma_algebra(const SetFamily& generators, std::size_t cap = 12);

std::uint64_t full_mask(std::size_t n);

}  // namespace codp
