#include "restheory/resource_set.hpp"

#include "restheory/errors.hpp"

#include <boost/container_hash/hash.hpp>

#include <optional>

namespace restheory {

ResourceSet::ResourceSet(std::size_t universe, std::initializer_list<ResourceId> members)
    : bits_(universe) {
  for (ResourceId r : members) bits_.set(r);
}

ResourceSet::ResourceSet(std::size_t universe, const std::vector<ResourceId>& members)
    : bits_(universe) {
  for (ResourceId r : members) bits_.set(r);
}

ResourceSet ResourceSet::full(std::size_t universe) {
  ResourceSet s(universe);
  s.bits_.set();
  return s;
}

ResourceSet ResourceSet::singleton(std::size_t universe, ResourceId r) {
  ResourceSet s(universe);
  s.insert(r);
  return s;
}

ResourceSet ResourceSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw Error(ErrorKind::CarrierTooLarge, "mask encoding needs a carrier of at most 64");
  ResourceSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) {
    if ((mask >> i) & 1U) s.bits_.set(i);
  }
  return s;
}

std::uint64_t ResourceSet::mask() const {
  if (universe() > 64) throw Error(ErrorKind::CarrierTooLarge, "mask encoding needs a carrier of at most 64");
  std::uint64_t m = 0;
  for_each([&](ResourceId r) { m |= std::uint64_t{1} << r; });
  return m;
}

std::vector<ResourceId> ResourceSet::members() const {
  std::vector<ResourceId> out;
  out.reserve(count());
  for_each([&](ResourceId r) { out.push_back(r); });
  return out;
}

std::optional<ResourceId> ResourceSet::first_not_in(const ResourceSet& other) const {
  const Bits diff = bits_ - other.bits_;
  const auto i = diff.find_first();
  if (i == Bits::npos) return std::nullopt;
  return static_cast<ResourceId>(i);
}

ResourceSet ResourceSet::complement() const {
  ResourceSet s = *this;
  s.bits_.flip();
  return s;
}

bool lex_less(const ResourceSet& a, const ResourceSet& b) {
  auto i = a.bits_.find_first();
  auto j = b.bits_.find_first();
  while (i != ResourceSet::Bits::npos && j != ResourceSet::Bits::npos) {
    if (i != j) return i < j;
    i = a.bits_.find_next(i);
    j = b.bits_.find_next(j);
  }
  return i == ResourceSet::Bits::npos && j != ResourceSet::Bits::npos;
}

std::size_t ResourceSet::hash() const {
  std::size_t seed = bits_.size();
  for_each([&](ResourceId r) { boost::hash_combine(seed, r); });
  return seed;
}

}  // namespace restheory
