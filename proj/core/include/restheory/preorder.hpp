#pragma once

#include "restheory/resource_set.hpp"

#include <string>
#include <utility>
#include <vector>

namespace restheory {

// Reflexive, transitive relation on a labeled finite carrier. Row a holds
// {b : a ≽ b}; the transposed rows are cached as up-sets.
class FinitePreorder {
 public:
  FinitePreorder() = default;
  // Throws NotAPreorder if the rows are not reflexive and transitive.
  FinitePreorder(std::vector<std::string> labels, std::vector<ResourceSet> down_rows);

  // Reflexive-transitive closure of the given rows.
  static FinitePreorder closure_of(std::vector<std::string> labels, std::vector<ResourceSet> rows);
  // Pairs (a, b) mean a ≽ b; the relation must already be a preorder.
  static FinitePreorder from_pairs(std::vector<std::string> labels,
                                   const std::vector<std::pair<ResourceId, ResourceId>>& pairs);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(ResourceId a) const { return labels_[a]; }

  bool geq(ResourceId a, ResourceId b) const { return down_[a].contains(b); }
  bool equivalent(ResourceId a, ResourceId b) const { return geq(a, b) && geq(b, a); }
  const ResourceSet& down(ResourceId a) const { return down_[a]; }
  const ResourceSet& up(ResourceId a) const { return up_[a]; }

  bool is_partial_order() const;
  // Every pair of elements comparable, within the subset W.
  bool is_chain_on(const ResourceSet& w) const;
  std::vector<std::pair<ResourceId, ResourceId>> pairs() const;

  friend bool operator==(const FinitePreorder& a, const FinitePreorder& b) {
    return a.labels_ == b.labels_ && a.down_ == b.down_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<ResourceSet> down_;
  std::vector<ResourceSet> up_;
};

struct Quotient {
  std::vector<std::vector<ResourceId>> classes;  // ordered by least member
  std::vector<ResourceId> class_of;
  FinitePreorder order;                           // a partial order on classes
};

Quotient quotient(const FinitePreorder& pre);

// Cover relation of a partial order: (a, b) with a ≻ b and nothing strictly between.
std::vector<std::pair<ResourceId, ResourceId>> hasse_edges(const FinitePreorder& partial_order);

// Quotient Hasse diagram with nodes and edges sorted by label.
std::string to_dot(const FinitePreorder& pre, const std::string& graph_name = "order");

}  // namespace restheory
