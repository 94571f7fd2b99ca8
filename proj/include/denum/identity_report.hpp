#pragma once

#include <string>
#include <utility>
#include <vector>

#include "denum/exact_arith.hpp"

namespace denum {

// Both sides of one checked identity plus the intermediate values that
// produced them, in insertion order.
struct IdentityReport {
  std::string name;
  ExactInt lhs;
  ExactInt rhs;
  bool holds = false;
  std::vector<std::pair<std::string, ExactInt>> context;

  IdentityReport& with(std::string key, ExactInt value) {
    context.emplace_back(std::move(key), std::move(value));
    return *this;
  }

  const ExactInt* find(std::string_view key) const {
    for (const auto& [k, v] : context)
      if (k == key) return &v;
    return nullptr;
  }
};

inline IdentityReport make_report(std::string name, ExactInt lhs, ExactInt rhs) {
  IdentityReport r;
  r.name = std::move(name);
  r.holds = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

}  // namespace denum
