#pragma once

#include "restheory/preorder.hpp"
#include "restheory/resource_set.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace restheory {

namespace detail {
class CombineTable;
}

using PairKey = std::pair<ResourceId, ResourceId>;  // normalized: first <= second

// A finite universally combinable resource theory: carrier names, a
// commutative set-valued combination keyed by unordered pairs, and the free
// and neutral subsets. Immutable; copies share the combination table.
class ResourceTheory {
 public:
  ResourceTheory() = default;

  // Entries absent from the map combine to the empty set.
  static ResourceTheory from_entries(std::vector<std::string> names, const std::map<PairKey, ResourceSet>& entries,
                                     ResourceSet free, ResourceSet neutral);
  // fn is queried once per unordered pair with r <= s.
  static ResourceTheory from_function(std::vector<std::string> names,
                                      const std::function<ResourceSet(ResourceId, ResourceId)>& fn,
                                      ResourceSet free, ResourceSet neutral);
  // Carrier is the product of the factor carriers in mixed radix, first
  // factor most significant; combination is componentwise.
  static ResourceTheory product(std::vector<std::shared_ptr<const ResourceTheory>> factors,
                                std::vector<std::string> names, ResourceSet free, ResourceSet neutral);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(ResourceId r) const { return names_[r]; }
  std::optional<ResourceId> find(const std::string& name) const;
  ResourceId id(const std::string& name) const;  // throws BadParameters

  const ResourceSet& free() const { return free_; }
  const ResourceSet& neutral() const { return neutral_; }

  ResourceSet combine(ResourceId r, ResourceId s) const;
  // acc |= r ⊠ s
  void accumulate(ResourceId r, ResourceId s, ResourceSet& acc) const;
  ResourceSet empty_set() const { return ResourceSet(size()); }
  ResourceSet full_set() const { return ResourceSet::full(size()); }

  // Every entry is a singleton.
  bool is_deterministic() const;
  // Every entry is explicitly stored (as opposed to derived from factors).
  bool is_explicit() const;
  const std::vector<std::shared_ptr<const ResourceTheory>>& factors() const;

  ResourceTheory with_free(ResourceSet free) const;
  ResourceTheory with_neutral(ResourceSet neutral) const;
  // Explicit copy with one unordered entry replaced.
  ResourceTheory with_entry(ResourceId r, ResourceId s, ResourceSet value) const;

  ResourceSet set_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(const ResourceSet& s) const;

 private:
  ResourceTheory(std::vector<std::string> names, std::shared_ptr<const detail::CombineTable> table,
                 ResourceSet free, ResourceSet neutral);

  std::vector<std::string> names_;
  std::unordered_map<std::string, ResourceId> index_;
  std::shared_ptr<const detail::CombineTable> table_;
  ResourceSet free_;
  ResourceSet neutral_;
};

using TheoryPtr = std::shared_ptr<const ResourceTheory>;

// ⋃_{s∈S, t∈T} s⊠t
ResourceSet combine_sets(const ResourceTheory& theory, const ResourceSet& s, const ResourceSet& t);
// free ⊠ S
ResourceSet free_image(const ResourceTheory& theory, const ResourceSet& s);

struct Violation {
  std::string axiom;
  std::vector<ResourceId> witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationOptions {
  bool all_witnesses = false;     // otherwise the first witness per axiom
  bool strict = false;            // report incompatible (empty) pairs as warnings
  std::size_t cap = 64;           // carriers above the cap are sampled
  std::uint64_t seed = 0;
  std::uint64_t samples = 100000; // sampled triples when above the cap
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<Violation> warnings;
  bool exhaustive = true;
  std::uint64_t triples_checked = 0;
  std::uint64_t triples_total = 0;

  bool ok() const { return violations.empty(); }
};

namespace axiom {
inline constexpr const char* associativity = "associativity";
inline constexpr const char* neutral_nonempty = "neutral-nonempty";
inline constexpr const char* neutral_law = "neutral-law";
inline constexpr const char* neutral_subset_free = "neutral-subset-free";
inline constexpr const char* free_nonempty = "free-nonempty";
inline constexpr const char* free_closure = "free-closure";
inline constexpr const char* incompatible_pair = "incompatible-pair";
}  // namespace axiom

ValidationReport validate(const ResourceTheory& theory, const ValidationOptions& options = {});

// Re-checks a single reported witness against its axiom.
bool witness_violates(const ResourceTheory& theory, const Violation& v);

// (r, s) holds iff s ∈ free ⊠ r. Throws AxiomViolation if that is not a preorder.
FinitePreorder resource_order(const ResourceTheory& theory);

// T ⊆ free ⊠ S
bool set_order(const ResourceTheory& theory, const ResourceSet& s, const ResourceSet& t);

}  // namespace restheory
