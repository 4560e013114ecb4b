#pragma once

#include "restheory/monotone.hpp"
#include "restheory/order.hpp"

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <string>
#include <vector>

namespace restheory {

// A set of ordered pairs of carrier elements.
class InterestingRelation {
 public:
  explicit InterestingRelation(std::size_t n = 0) : n_(n), bits_(n * n) {}

  std::size_t carrier_size() const { return n_; }
  bool contains(ResourceId a, ResourceId b) const { return bits_.test(std::size_t{a} * n_ + b); }
  void insert(ResourceId a, ResourceId b) { bits_.set(std::size_t{a} * n_ + b); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  std::vector<OrderPair> pairs() const;
  // First pair of other missing from this relation.
  std::optional<OrderPair> first_missing(const InterestingRelation& other) const;

  friend bool operator==(const InterestingRelation& a, const InterestingRelation& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t n_;
  boost::dynamic_bitset<std::uint64_t> bits_;
};

// {(a, b) : f(a) < f(b)}
InterestingRelation interesting_pairs(const std::vector<ExtRational>& f, const FinitePreorder& pre);
// {(r, s) ∈ W×W : f(r) < f(s) and r ⋡ s}
InterestingRelation interesting_pairs_partial(const PartialValuation& fw, const FinitePreorder& pre);

enum class InformMode { monotone, partial };

// f ⊒ g: the interesting relation of f contains that of g. Monotone mode
// needs total valuations.
bool more_informative(const PartialValuation& f, const PartialValuation& g, const FinitePreorder& pre,
                      InformMode mode);
std::optional<OrderPair> informativeness_gap(const PartialValuation& f, const PartialValuation& g,
                                             const FinitePreorder& pre, InformMode mode);

struct RelationCheck {
  std::string name;
  bool holds = false;
  std::optional<OrderPair> witness;  // pair of the smaller relation missing from the larger
};

struct InformReport {
  std::vector<RelationCheck> relations;  // f⊒g, g⊒f, Yield_f⊒Yield_g, Cost_f⊒Cost_g
  bool premise = false;                  // f ⊒ g
  bool forward_yield = true;             // premise ⟹ yields ordered
  bool forward_cost = true;
  bool biconditional_checked = false;
  bool biconditional_yield = true;
  bool biconditional_cost = true;

  bool holds() const { return forward_yield && forward_cost && biconditional_yield && biconditional_cost; }
};

// Forward implications for any downward-closed D; the biconditionals only
// when D is the free set, W = W' and both valuations are monotone on W.
InformReport prop_informative_yield_cost_check(const PartialValuation& fw, const PartialValuation& gw,
                                               const std::optional<ResourceSet>& d, const OrderedResources& ctx);

struct CounterexampleInstance {
  FinitePreorder order;          // r1 ≽ r2, s1 ≽ s2
  PartialValuation valuation;    // (0, 1, 0, 1)
  std::vector<OrderPair> expected_pairs;
  ExtRational expected_yield;
  ExtRational expected_cost;
};

CounterexampleInstance builtin_counterexample();

// Order-preserving maps from the preorder into {0, ..., levels-1}.
std::vector<std::vector<ExtRational>> enumerate_monotones(const FinitePreorder& pre, unsigned levels);

// Rank valuation on W: the number of W-elements strictly below.
PartialValuation rank_valuation(const FinitePreorder& pre, const ResourceSet& w);
// Throws WNotAChain.
bool chain_most_informative_check(const OrderedResources& ctx, const ResourceSet& w, std::size_t samples = 50,
                                  std::uint64_t seed = 0);

}  // namespace restheory
