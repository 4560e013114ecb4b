#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace restheory {

using ResourceId = std::uint32_t;

// Subset of a carrier {0, ..., universe-1}. Equality is extensional and
// requires equal universes.
class ResourceSet {
 public:
  ResourceSet() = default;
  explicit ResourceSet(std::size_t universe) : bits_(universe) {}
  ResourceSet(std::size_t universe, std::initializer_list<ResourceId> members);
  ResourceSet(std::size_t universe, const std::vector<ResourceId>& members);

  static ResourceSet full(std::size_t universe);
  static ResourceSet singleton(std::size_t universe, ResourceId r);
  // Members are the set bits of mask; requires universe <= 64.
  static ResourceSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return bits_.size(); }
  bool contains(ResourceId r) const { return bits_.test(r); }
  void insert(ResourceId r) { bits_.set(r); }
  void erase(ResourceId r) { bits_.reset(r); }
  void clear() { bits_.reset(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool is_full() const { return bits_.all(); }

  bool is_subset_of(const ResourceSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const ResourceSet& other) const { return bits_.intersects(other.bits_); }
  std::uint64_t mask() const;

  std::vector<ResourceId> members() const;
  // Smallest member not in other, if any.
  std::optional<ResourceId> first_not_in(const ResourceSet& other) const;

  template <class F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
      f(static_cast<ResourceId>(i));
    }
  }

  ResourceSet& operator|=(const ResourceSet& o) { bits_ |= o.bits_; return *this; }
  ResourceSet& operator&=(const ResourceSet& o) { bits_ &= o.bits_; return *this; }
  ResourceSet& operator-=(const ResourceSet& o) { bits_ -= o.bits_; return *this; }
  friend ResourceSet operator|(ResourceSet a, const ResourceSet& b) { return a |= b; }
  friend ResourceSet operator&(ResourceSet a, const ResourceSet& b) { return a &= b; }
  friend ResourceSet operator-(ResourceSet a, const ResourceSet& b) { return a -= b; }
  ResourceSet complement() const;

  friend bool operator==(const ResourceSet& a, const ResourceSet& b) { return a.bits_ == b.bits_; }
  // Lexicographic order on sorted member lists; used for deterministic output.
  friend bool lex_less(const ResourceSet& a, const ResourceSet& b);

  std::size_t hash() const;

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  Bits bits_;
};

struct ResourceSetHash {
  std::size_t operator()(const ResourceSet& s) const { return s.hash(); }
};

}  // namespace restheory
