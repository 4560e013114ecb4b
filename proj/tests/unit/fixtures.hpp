#pragma once

#include "restheory/gen.hpp"
#include "restheory/order.hpp"
#include "restheory/theory.hpp"

#include <memory>
#include <string>
#include <vector>

namespace restheory::test {

inline TheoryPtr shared(const std::string& builtin) {
  return std::make_shared<const ResourceTheory>(builtin_theory(builtin));
}

inline ResourceSet names(const ResourceTheory& t, const std::vector<std::string>& members) {
  return t.set_of(members);
}

inline std::vector<ExtRational> ext(std::initializer_list<long long> xs) {
  std::vector<ExtRational> out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace restheory::test
