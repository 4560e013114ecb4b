#include "restheory/theory.hpp"

#include "restheory/errors.hpp"
#include "restheory/rng.hpp"

#include <algorithm>

namespace restheory {

namespace detail {

class CombineTable {
 public:
  virtual ~CombineTable() = default;
  virtual void accumulate(ResourceId r, ResourceId s, ResourceSet& acc) const = 0;
  virtual bool deterministic() const = 0;
  virtual bool is_explicit() const = 0;
  virtual const std::vector<TheoryPtr>& factors() const {
    static const std::vector<TheoryPtr> none;
    return none;
  }
};

namespace {

std::size_t tri_index(ResourceId r, ResourceId s) {
  if (r > s) std::swap(r, s);
  return static_cast<std::size_t>(s) * (s + 1) / 2 + r;
}

class ExplicitTable final : public CombineTable {
 public:
  explicit ExplicitTable(std::vector<ResourceSet> entries) : entries_(std::move(entries)) {
    deterministic_ = std::all_of(entries_.begin(), entries_.end(),
                                 [](const ResourceSet& e) { return e.count() == 1; });
  }

  void accumulate(ResourceId r, ResourceId s, ResourceSet& acc) const override {
    acc |= entries_[tri_index(r, s)];
  }
  bool deterministic() const override { return deterministic_; }
  bool is_explicit() const override { return true; }

  const std::vector<ResourceSet>& entries() const { return entries_; }

 private:
  std::vector<ResourceSet> entries_;
  bool deterministic_ = false;
};

class ProductTable final : public CombineTable {
 public:
  explicit ProductTable(std::vector<TheoryPtr> factors) : factors_(std::move(factors)) {
    size_ = 1;
    for (const auto& f : factors_) size_ *= f->size();
    deterministic_ = std::all_of(factors_.begin(), factors_.end(),
                                 [](const TheoryPtr& f) { return f->is_deterministic(); });
  }

  void accumulate(ResourceId r, ResourceId s, ResourceSet& acc) const override {
    const std::size_t k = factors_.size();
    std::vector<std::vector<ResourceId>> parts(k);
    std::size_t rr = r;
    std::size_t ss = s;
    for (std::size_t i = k; i-- > 0;) {
      const std::size_t n = factors_[i]->size();
      parts[i] = factors_[i]->combine(static_cast<ResourceId>(rr % n), static_cast<ResourceId>(ss % n)).members();
      if (parts[i].empty()) return;
      rr /= n;
      ss /= n;
    }
    std::vector<std::size_t> pos(k, 0);
    while (true) {
      std::size_t code = 0;
      for (std::size_t i = 0; i < k; ++i) code = code * factors_[i]->size() + parts[i][pos[i]];
      acc.insert(static_cast<ResourceId>(code));
      std::size_t i = k;
      while (i > 0) {
        --i;
        if (++pos[i] < parts[i].size()) break;
        pos[i] = 0;
        if (i == 0) return;
      }
    }
  }
  bool deterministic() const override { return deterministic_; }
  bool is_explicit() const override { return false; }
  const std::vector<TheoryPtr>& factors() const override { return factors_; }
  std::size_t size() const { return size_; }

 private:
  std::vector<TheoryPtr> factors_;
  std::size_t size_ = 0;
  bool deterministic_ = false;
};

}  // namespace
}  // namespace detail

namespace {

void check_names(const std::vector<std::string>& names) {
  for (const auto& n : names) {
    if (n.empty()) throw Error(ErrorKind::BadParameters, "empty resource name");
    if (n.find(',') != std::string::npos) {
      throw Error(ErrorKind::BadParameters, "resource name contains ',': " + n);
    }
  }
}

}  // namespace

ResourceTheory::ResourceTheory(std::vector<std::string> names, std::shared_ptr<const detail::CombineTable> table,
                               ResourceSet free, ResourceSet neutral)
    : names_(std::move(names)), table_(std::move(table)), free_(std::move(free)), neutral_(std::move(neutral)) {
  check_names(names_);
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<ResourceId>(i)).second) {
      throw Error(ErrorKind::BadParameters, "duplicate resource name: " + names_[i]);
    }
  }
  if (free_.universe() != names_.size() || neutral_.universe() != names_.size()) {
    throw Error(ErrorKind::BadParameters, "free/neutral universe differs from carrier");
  }
}

ResourceTheory ResourceTheory::from_entries(std::vector<std::string> names,
                                            const std::map<PairKey, ResourceSet>& entries, ResourceSet free,
                                            ResourceSet neutral) {
  const std::size_t n = names.size();
  std::vector<ResourceSet> table(n * (n + 1) / 2, ResourceSet(n));
  for (const auto& [key, value] : entries) {
    if (key.first >= n || key.second >= n || value.universe() != n) {
      throw Error(ErrorKind::BadParameters, "combine entry outside the carrier");
    }
    table[detail::tri_index(key.first, key.second)] = value;
  }
  return ResourceTheory(std::move(names), std::make_shared<detail::ExplicitTable>(std::move(table)),
                        std::move(free), std::move(neutral));
}

ResourceTheory ResourceTheory::from_function(std::vector<std::string> names,
                                             const std::function<ResourceSet(ResourceId, ResourceId)>& fn,
                                             ResourceSet free, ResourceSet neutral) {
  const std::size_t n = names.size();
  std::vector<ResourceSet> table(n * (n + 1) / 2);
  for (ResourceId s = 0; s < n; ++s) {
    for (ResourceId r = 0; r <= s; ++r) {
      ResourceSet value = fn(r, s);
      if (value.universe() != n) throw Error(ErrorKind::BadParameters, "combine value outside the carrier");
      table[detail::tri_index(r, s)] = std::move(value);
    }
  }
  return ResourceTheory(std::move(names), std::make_shared<detail::ExplicitTable>(std::move(table)),
                        std::move(free), std::move(neutral));
}

ResourceTheory ResourceTheory::product(std::vector<TheoryPtr> factors, std::vector<std::string> names,
                                       ResourceSet free, ResourceSet neutral) {
  if (factors.empty()) throw Error(ErrorKind::BadParameters, "product of no factors");
  auto table = std::make_shared<detail::ProductTable>(std::move(factors));
  if (table->size() != names.size()) throw Error(ErrorKind::BadParameters, "product carrier size mismatch");
  return ResourceTheory(std::move(names), std::move(table), std::move(free), std::move(neutral));
}

std::optional<ResourceId> ResourceTheory::find(const std::string& name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ResourceId ResourceTheory::id(const std::string& name) const {
  if (auto r = find(name)) return *r;
  throw Error(ErrorKind::BadParameters, "unknown resource: " + name);
}

ResourceSet ResourceTheory::combine(ResourceId r, ResourceId s) const {
  ResourceSet out(size());
  table_->accumulate(r, s, out);
  return out;
}

void ResourceTheory::accumulate(ResourceId r, ResourceId s, ResourceSet& acc) const {
  table_->accumulate(r, s, acc);
}

bool ResourceTheory::is_deterministic() const { return table_->deterministic(); }
bool ResourceTheory::is_explicit() const { return table_->is_explicit(); }
const std::vector<TheoryPtr>& ResourceTheory::factors() const { return table_->factors(); }

ResourceTheory ResourceTheory::with_free(ResourceSet free) const {
  return ResourceTheory(names_, table_, std::move(free), neutral_);
}

ResourceTheory ResourceTheory::with_neutral(ResourceSet neutral) const {
  return ResourceTheory(names_, table_, free_, std::move(neutral));
}

ResourceTheory ResourceTheory::with_entry(ResourceId r, ResourceId s, ResourceSet value) const {
  const ResourceId lo = std::min(r, s);
  const ResourceId hi = std::max(r, s);
  return from_function(
      names_,
      [&](ResourceId a, ResourceId b) { return (a == lo && b == hi) ? value : combine(a, b); },
      free_, neutral_);
}

ResourceSet ResourceTheory::set_of(const std::vector<std::string>& names) const {
  ResourceSet s(size());
  for (const auto& n : names) s.insert(id(n));
  return s;
}

std::vector<std::string> ResourceTheory::names_of(const ResourceSet& s) const {
  std::vector<std::string> out;
  s.for_each([&](ResourceId r) { out.push_back(names_[r]); });
  return out;
}

ResourceSet combine_sets(const ResourceTheory& theory, const ResourceSet& s, const ResourceSet& t) {
  ResourceSet out(theory.size());
  s.for_each([&](ResourceId a) { t.for_each([&](ResourceId b) { theory.accumulate(a, b, out); }); });
  return out;
}

ResourceSet free_image(const ResourceTheory& theory, const ResourceSet& s) {
  return combine_sets(theory, theory.free(), s);
}

namespace {

// r ⊠ s for every ordered pair, materialized once per validation.
class PairCache {
 public:
  explicit PairCache(const ResourceTheory& t) : n_(t.size()), cells_(n_ * n_) {
    for (ResourceId r = 0; r < n_; ++r) {
      for (ResourceId s = r; s < n_; ++s) {
        cells_[r * n_ + s] = t.combine(r, s);
        cells_[s * n_ + r] = cells_[r * n_ + s];
      }
    }
  }
  const ResourceSet& at(ResourceId r, ResourceId s) const { return cells_[std::size_t{r} * n_ + s]; }

 private:
  std::size_t n_;
  std::vector<ResourceSet> cells_;
};

bool associative_at(const ResourceTheory& t, ResourceId r, ResourceId s, ResourceId u) {
  ResourceSet left(t.size());
  t.combine(r, s).for_each([&](ResourceId x) { t.accumulate(x, u, left); });
  ResourceSet right(t.size());
  t.combine(s, u).for_each([&](ResourceId y) { t.accumulate(r, y, right); });
  return left == right;
}

ResourceSet neutral_action(const ResourceTheory& t, ResourceId r) {
  ResourceSet out(t.size());
  t.neutral().for_each([&](ResourceId z) { t.accumulate(z, r, out); });
  return out;
}

}  // namespace

ValidationReport validate(const ResourceTheory& theory, const ValidationOptions& options) {
  ValidationReport report;
  const std::size_t n = theory.size();
  std::map<std::string, bool> seen;
  const auto add = [&](const char* name, std::vector<ResourceId> witness) {
    if (!options.all_witnesses && seen[name]) return;
    seen[name] = true;
    report.violations.push_back({name, std::move(witness)});
  };

  if (theory.neutral().empty()) add(axiom::neutral_nonempty, {});
  if (theory.free().empty()) add(axiom::free_nonempty, {});
  (theory.neutral() - theory.free()).for_each([&](ResourceId z) { add(axiom::neutral_subset_free, {z}); });
  if (!theory.neutral().empty()) {
    for (ResourceId r = 0; r < n; ++r) {
      if (neutral_action(theory, r) != ResourceSet::singleton(n, r)) add(axiom::neutral_law, {r});
    }
  }
  const ResourceSet ff = combine_sets(theory, theory.free(), theory.free());
  theory.free().for_each([&](ResourceId a) {
    theory.free().for_each([&](ResourceId b) {
      if (a <= b && !theory.combine(a, b).is_subset_of(theory.free())) add(axiom::free_closure, {a, b});
    });
  });
  (theory.free() - ff).for_each([&](ResourceId a) { add(axiom::free_closure, {a}); });

  report.triples_total = static_cast<std::uint64_t>(n) * n * n;
  if (n <= options.cap) {
    const PairCache cache(theory);
    ResourceSet left(n);
    ResourceSet right(n);
    for (ResourceId r = 0; r < n; ++r) {
      for (ResourceId s = 0; s < n; ++s) {
        for (ResourceId u = 0; u < n; ++u) {
          left.clear();
          right.clear();
          cache.at(r, s).for_each([&](ResourceId x) { left |= cache.at(x, u); });
          cache.at(s, u).for_each([&](ResourceId y) { right |= cache.at(r, y); });
          if (left != right) add(axiom::associativity, {r, s, u});
        }
      }
    }
    report.triples_checked = report.triples_total;
  } else {
    report.exhaustive = false;
    Rng rng(options.seed);
    for (std::uint64_t i = 0; i < options.samples; ++i) {
      const auto r = static_cast<ResourceId>(rng.below(n));
      const auto s = static_cast<ResourceId>(rng.below(n));
      const auto u = static_cast<ResourceId>(rng.below(n));
      if (!associative_at(theory, r, s, u)) add(axiom::associativity, {r, s, u});
    }
    report.triples_checked = options.samples;
  }

  if (options.strict) {
    for (ResourceId r = 0; r < n; ++r) {
      for (ResourceId s = r; s < n; ++s) {
        if (theory.combine(r, s).empty()) report.warnings.push_back({axiom::incompatible_pair, {r, s}});
      }
    }
  }
  return report;
}

bool witness_violates(const ResourceTheory& t, const Violation& v) {
  const std::size_t n = t.size();
  const auto& w = v.witness;
  if (v.axiom == axiom::neutral_nonempty) return t.neutral().empty();
  if (v.axiom == axiom::free_nonempty) return t.free().empty();
  if (v.axiom == axiom::neutral_subset_free) {
    return w.size() == 1 && t.neutral().contains(w[0]) && !t.free().contains(w[0]);
  }
  if (v.axiom == axiom::neutral_law) {
    return w.size() == 1 && neutral_action(t, w[0]) != ResourceSet::singleton(n, w[0]);
  }
  if (v.axiom == axiom::free_closure) {
    if (w.size() == 2) {
      return t.free().contains(w[0]) && t.free().contains(w[1]) && !t.combine(w[0], w[1]).is_subset_of(t.free());
    }
    return w.size() == 1 && t.free().contains(w[0]) &&
           !combine_sets(t, t.free(), t.free()).contains(w[0]);
  }
  if (v.axiom == axiom::associativity) return w.size() == 3 && !associative_at(t, w[0], w[1], w[2]);
  if (v.axiom == axiom::incompatible_pair) return w.size() == 2 && t.combine(w[0], w[1]).empty();
  return false;
}

FinitePreorder resource_order(const ResourceTheory& theory) {
  const std::size_t n = theory.size();
  std::vector<ResourceSet> rows;
  rows.reserve(n);
  for (ResourceId r = 0; r < n; ++r) rows.push_back(free_image(theory, ResourceSet::singleton(n, r)));
  try {
    return FinitePreorder(theory.names(), std::move(rows));
  } catch (const Error& e) {
    throw Error(ErrorKind::AxiomViolation, std::string("derived resource order: ") + e.what());
  }
}

bool set_order(const ResourceTheory& theory, const ResourceSet& s, const ResourceSet& t) {
  return t.is_subset_of(free_image(theory, s));
}

}  // namespace restheory
