#pragma once

#include "restheory/preorder.hpp"
#include "restheory/theory.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace restheory {

// Resources with their order, backed either by a theory (down(r) = free⊠r)
// or by a bare preorder. D-image maps for D other than the free set need a
// theory.
class OrderedResources {
 public:
  static OrderedResources from_theory(TheoryPtr theory);
  static OrderedResources from_theory(const ResourceTheory& theory);
  static OrderedResources from_preorder(FinitePreorder preorder);

  std::size_t size() const { return preorder_->size(); }
  const FinitePreorder& preorder() const { return *preorder_; }
  const std::vector<std::string>& labels() const { return preorder_->labels(); }
  // nullptr when preorder-backed.
  const ResourceTheory* theory() const { return theory_.get(); }
  const TheoryPtr& theory_ptr() const { return theory_; }
  const ResourceTheory& require_theory(const char* what) const;

  const ResourceSet& down(ResourceId r) const { return preorder_->down(r); }
  const ResourceSet& up(ResourceId r) const { return preorder_->up(r); }
  // The free set of a theory-backed context; nullopt when preorder-backed.
  std::optional<ResourceSet> free_set() const;

 private:
  TheoryPtr theory_;
  std::shared_ptr<const FinitePreorder> preorder_;
};

// Total function between finite carriers.
struct MapBetweenCarriers {
  std::size_t target_size = 0;
  std::vector<ResourceId> image;
};

// Total set-valued function: every source element maps to a target subset.
struct SetValuedMap {
  std::size_t target_size = 0;
  std::vector<ResourceSet> image;
};

ResourceSet down_closure(const OrderedResources& ctx, const ResourceSet& s);
ResourceSet up_closure(const OrderedResources& ctx, const ResourceSet& s);
bool is_downward_closed(const OrderedResources& ctx, const ResourceSet& s);
bool is_upward_closed(const OrderedResources& ctx, const ResourceSet& s);
// Smallest member of the closure missing from s.
std::optional<ResourceId> downward_escape(const OrderedResources& ctx, const ResourceSet& s);
std::optional<ResourceId> upward_escape(const OrderedResources& ctx, const ResourceSet& s);

ResourceSet down_closure(const FinitePreorder& pre, const ResourceSet& s);
ResourceSet up_closure(const FinitePreorder& pre, const ResourceSet& s);

// D ⊠ {r}
ResourceSet d_image(const ResourceTheory& theory, const ResourceSet& d, ResourceId r);
// {s : r ∈ D ⊠ s}
ResourceSet d_preimage(const ResourceTheory& theory, const ResourceSet& d, ResourceId r);
ResourceSet d_image(const ResourceTheory& theory, const ResourceSet& d, const ResourceSet& s);
ResourceSet d_preimage(const ResourceTheory& theory, const ResourceSet& d, const ResourceSet& s);

struct ComposeFailure {
  std::string identity;  // "image" or "preimage"
  ResourceId at = 0;
};

// ↓_S∘↓_T = ↓_{S⊠T} and ↑_S∘↑_T = ↑_{T⊠S}, pointwise on the carrier.
std::optional<ComposeFailure> check_compose_images(const ResourceTheory& theory, const ResourceSet& s,
                                                   const ResourceSet& t);

// First (lexicographic) pair a ≽ a' with f(a) ⋡ f(a'), if any.
std::optional<std::pair<ResourceId, ResourceId>> order_violation(const MapBetweenCarriers& f,
                                                                 const FinitePreorder& a,
                                                                 const FinitePreorder& b);
bool is_order_preserving(const MapBetweenCarriers& f, const FinitePreorder& a, const FinitePreorder& b);

struct Partition {
  std::vector<std::vector<ResourceId>> classes;  // ordered by least member
  std::vector<ResourceId> class_of;
};

// a ∼ a' iff f(a) ∼_B f(a')
Partition kernel(const MapBetweenCarriers& f, const FinitePreorder& b);

// Checks that the canonical map A/∼_f → f(A)/∼_B is an order isomorphism,
// where A/∼_f carries the preorder generated by ≽_A. Throws
// NotOrderPreserving if f is not order-preserving.
bool first_isomorphism_check(const MapBetweenCarriers& f, const FinitePreorder& a, const FinitePreorder& b);

struct RemovingArrowsFailure {
  std::string identity;  // "down-up-down" or "up-down-up"
  ResourceId at = 0;
};

// ↓(↑S ∩ ↓T) = ↓(↑S ∩ T) and ↑(↓S ∩ ↑T) = ↑(↓S ∩ T)
std::optional<RemovingArrowsFailure> removing_arrows_check(const FinitePreorder& pre, const ResourceSet& s,
                                                           const ResourceSet& t);

// All downward (upward) closed subsets; carrier <= 20 and at most `cap` sets.
std::vector<ResourceSet> enumerate_downward_closed(const OrderedResources& ctx, std::size_t cap = 1000000);
std::vector<ResourceSet> enumerate_upward_closed(const OrderedResources& ctx, std::size_t cap = 1000000);

}  // namespace restheory
