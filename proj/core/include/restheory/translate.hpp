#pragma once

#include "restheory/monotone.hpp"
#include "restheory/order.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace restheory {

// enhancement: S ≽ T iff ↓S ⊇ ↓T; degradation: S ≽ T iff ↑S ⊆ ↑T;
// inclusion: S ≽ T iff S ⊆ T; reverse-inclusion: S ≽ T iff S ⊇ T.
enum class SubsetOrderKind { enhancement, degradation, inclusion, reverse_inclusion };

std::string_view to_string(SubsetOrderKind kind);
std::optional<SubsetOrderKind> parse_subset_order_kind(std::string_view text);

bool enh_order(const OrderedResources& ctx, const ResourceSet& s, const ResourceSet& t);
bool deg_order(const OrderedResources& ctx, const ResourceSet& s, const ResourceSet& t);
bool subset_geq(const OrderedResources& ctx, SubsetOrderKind kind, const ResourceSet& s, const ResourceSet& t);

std::string subset_label(const std::vector<std::string>& labels, const ResourceSet& s);
// All subsets, indexed by bitmask. Throws CarrierTooLarge if 2^n > cap.
FinitePreorder powerset_preorder(const OrderedResources& ctx, SubsetOrderKind kind, std::size_t cap = 1U << 16);

// Chain of values ordered by >=, labeled by their text.
FinitePreorder value_order(const std::vector<ExtRational>& values);

// F : R → P(Q) with a declared codomain order. A degradation map may record
// the function G : Q → R whose preimage it is.
struct MediatingMap {
  TheoryPtr source;
  TheoryPtr target;
  std::vector<ResourceSet> image;
  SubsetOrderKind kind = SubsetOrderKind::enhancement;
  std::optional<std::vector<ResourceId>> preimage_of;

  // Union of images.
  ResourceSet apply(const ResourceSet& s) const;
};

// r ↦ r^⊠n
MediatingMap copy_map(TheoryPtr theory, unsigned n);
// r ↦ C ⊠ r
MediatingMap aug_map(TheoryPtr theory, const ResourceSet& c);

struct EnhCertificate {
  std::optional<ResourceId> primary_failure;            // r with F(free⊠r) ⊄ Qfree⊠F(r)
  std::optional<OrderPair> star0_failure;               // F(r⊠s) ≠ F(r)⊠F(s)
  std::optional<ResourceId> free0_failure;              // free r with F(r) ⊄ Qfree⊠F(neutral)
  std::optional<OrderPair> star1_failure;               // F(r⊠s) ⊄ F(r)⊠F(s)
  std::optional<ResourceId> free1_failure;              // free r with F(r) ⊄ Qfree

  bool primary() const { return !primary_failure; }
  bool variant0() const { return !star0_failure && !free0_failure; }
  bool variant1() const { return !star1_failure && !free1_failure; }
  bool certified() const { return primary() || variant0() || variant1(); }
  // "primary", "star-morphism-0", "star-morphism-1" or "" if none holds.
  std::string route() const;
};

EnhCertificate check_enh_mediating(const MediatingMap& f);

struct DegCertificate {
  std::optional<ResourceId> preimage_failure;  // r with F(r) ≠ G⁻¹(r)
  std::optional<OrderPair> star_failure;       // target (p, q) with G(p⊠q) ⊉ G(p)⊠G(q)
  std::optional<ResourceId> free_failure;      // free source r outside G(Qfree)

  bool certified() const { return !preimage_failure && !star_failure && !free_failure; }
};

DegCertificate check_deg_mediating(const MediatingMap& f, const std::vector<ResourceId>& g);

// First source pair r ≽ s whose images are not ordered by the map's kind.
std::optional<OrderPair> mediating_violation(const MediatingMap& f);
std::optional<OrderPair> mediating_violation(const MediatingMap& f, const OrderedResources& source,
                                             const OrderedResources& target);

// r ↦ F(r) ∩ window; the window must be upward closed (enhancement) or
// downward closed (degradation) in the target.
MediatingMap restrict_map(const MediatingMap& f, const ResourceSet& window);

enum class Extremum { max, min };

std::string_view to_string(Extremum mode);

struct PullbackOptions {
  bool force = false;
};

// r ↦ f_max / f_min of the root over F(r).
MonotoneFn pull_back(const MediatingMap& f, const PartialValuation& root, Extremum mode,
                     const PullbackOptions& options = {});

}  // namespace restheory
