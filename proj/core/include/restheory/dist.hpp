#pragma once

#include "restheory/monotone.hpp"
#include "restheory/translate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace restheory {

// A theory whose every combination is a single resource.
class DeterministicTheory {
 public:
  // Throws BaseNotDeterministic.
  explicit DeterministicTheory(TheoryPtr theory);
  explicit DeterministicTheory(const ResourceTheory& theory);

  const ResourceTheory& theory() const { return *theory_; }
  const TheoryPtr& ptr() const { return theory_; }
  std::size_t size() const { return theory_->size(); }
  ResourceId combine(ResourceId r, ResourceId s) const { return table_[r * size() + s]; }

 private:
  TheoryPtr theory_;
  std::vector<ResourceId> table_;
};

// k-tuples over a deterministic base, combined componentwise; free tuples are
// the constant ones (of free base elements when constrained). Tuple indices
// are mixed-radix with the first component most significant.
class TupleTheory {
 public:
  const DeterministicTheory& base() const { return base_; }
  std::size_t k() const { return k_; }
  bool constrained() const { return constrained_; }
  const ResourceTheory& theory() const { return *theory_; }
  const TheoryPtr& ptr() const { return theory_; }
  std::size_t size() const { return theory_->size(); }

  ResourceId encode(const std::vector<ResourceId>& components) const;
  std::vector<ResourceId> decode(ResourceId tuple) const;
  ResourceId component(ResourceId tuple, std::size_t axis) const;  // axis is 0-based
  ResourceId constant(ResourceId r) const;

 private:
  friend TupleTheory build_k_dist(const DeterministicTheory&, std::size_t, bool, std::size_t);
  TupleTheory(DeterministicTheory base, std::size_t k, bool constrained, TheoryPtr theory)
      : base_(std::move(base)), k_(k), constrained_(constrained), theory_(std::move(theory)) {}

  DeterministicTheory base_;
  std::size_t k_;
  bool constrained_;
  TheoryPtr theory_;
};

std::string tuple_label(const std::vector<std::string>& names);

// Throws CarrierTooLarge if n^k > cap, BadParameters if k < 2,
// AxiomViolation if the base is not a valid theory.
TupleTheory build_k_dist(const DeterministicTheory& base, std::size_t k, bool constrained,
                         std::size_t cap = 1000000);

// 1 when the components are not all equal, else 0.
PartialValuation difference_indicator(const TupleTheory& tt);
// 1 when all components are equal, else 0.
PartialValuation equality_indicator(const TupleTheory& tt);

// Monotonicity under the unconstrained tuple order; f must be total.
std::optional<OrderPair> contraction_violation(const PartialValuation& f, const TupleTheory& tt);
bool is_k_contraction(const PartialValuation& f, const TupleTheory& tt);

// First (t, r) with t free and Φ(t⊠r) ≠ t⊠Φ(r).
std::optional<OrderPair> commuting_violation(const DeterministicTheory& base, const std::vector<ResourceId>& phi);
bool commuting_map_check(const DeterministicTheory& base, const std::vector<ResourceId>& phi);

// Proof that f is a k-contraction on an unconstrained tuple theory.
class ContractionCertificate {
 public:
  static std::optional<ContractionCertificate> certify(PartialValuation f, const TupleTheory& tt);
  // Skips the check; constructions still verify their output.
  static ContractionCertificate force(PartialValuation f, const TupleTheory& tt);

  const PartialValuation& function() const { return f_; }
  const TupleTheory& tuples() const { return tt_; }
  bool forced() const { return forced_; }

 private:
  ContractionCertificate(PartialValuation f, TupleTheory tt, bool forced)
      : f_(std::move(f)), tt_(std::move(tt)), forced_(forced) {}

  PartialValuation f_;
  TupleTheory tt_;
  bool forced_;
};

class CommutingCertificate {
 public:
  static std::optional<CommutingCertificate> certify(std::vector<ResourceId> phi, const DeterministicTheory& base);
  static CommutingCertificate force(std::vector<ResourceId> phi, const DeterministicTheory& base);

  const std::vector<ResourceId>& map() const { return phi_; }
  bool forced() const { return forced_; }

 private:
  CommutingCertificate(std::vector<ResourceId> phi, bool forced) : phi_(std::move(phi)), forced_(forced) {}

  std::vector<ResourceId> phi_;
  bool forced_;
};

// M(r) = f(r, Φ(r))
MonotoneFn monotone_from_commuting(const DeterministicTheory& base, const ContractionCertificate& f,
                                   const CommutingCertificate& phi);
// M(r) = inf over s ∈ R_dc of f(r, s)
MonotoneFn min_distinguishability(const DeterministicTheory& base, const ContractionCertificate& f,
                                  const ResourceSet& r_dc);
// M(r) = inf of f over tuples in W_dc whose component `axis` (0-based) is r.
MonotoneFn contraction_monotone(const DeterministicTheory& base, const ContractionCertificate& f, std::size_t axis,
                                const ResourceSet& w_dc);

// S_1 × ... × S_k as a set of tuple indices.
ResourceSet product_set(const TupleTheory& tt, const std::vector<ResourceSet>& factors);
// Factors whose product is exactly the set, if it is a product.
std::optional<std::vector<ResourceSet>> product_factors(const TupleTheory& tt, const ResourceSet& set);

struct ProductClosureReport {
  bool dc_premise = false;     // every factor downward closed in the base
  bool dc_conclusion = false;  // product downward closed in the constrained tuple theory
  bool uc_premise = false;
  bool uc_conclusion = false;

  bool holds() const { return (!dc_premise || dc_conclusion) && (!uc_premise || uc_conclusion); }
};

ProductClosureReport product_dc_check(const DeterministicTheory& base, const std::vector<ResourceSet>& factors);

// Component projection Q → R along axis (0-based).
std::vector<ResourceId> projection(const TupleTheory& tt, std::size_t axis);
// r ↦ Π_axis⁻¹(r) with the given codomain order; records the projection.
MediatingMap tuple_embedding(const TupleTheory& tt, std::size_t axis,
                             SubsetOrderKind kind = SubsetOrderKind::degradation);

}  // namespace restheory
