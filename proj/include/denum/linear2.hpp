#pragma once

// Two-variable counts for ax + by = n.
//
// With gcd(a, b) = 1, a1 = n/a (mod b) and b1 = n/b (mod a), both in
// [0, modulus), the count is 1 + (n - a*a1 - b*b1)/(ab), the division being
// exact. Every n in [(a-1)(b-1), ab) has exactly one solution and the
// largest n with none is ab - a - b.

#include <cstdint>
#include <utility>
#include <vector>

#include "denum/errors.hpp"
#include "denum/exact_arith.hpp"

namespace denum {

inline constexpr std::uint64_t kMaxSieveLength = 100'000'000;

struct Instance2 {
  ExactInt a, b, n;
  ExactInt a1;  // in [0, b)
  ExactInt b1;  // in [0, a)
};

inline Instance2 make_instance2(const ExactInt& a, const ExactInt& b, const ExactInt& n) {
  if (a < 1 || b < 1) throw invalid_argument("coefficients a, b must be >= 1");
  if (n < 0) throw invalid_argument("right-hand side n must be >= 0");
  if (gcd(a, b) != 1) throw invalid_argument("make_instance2: requires gcd(a, b) = 1");
  Instance2 inst{a, b, n, floor_mod(n * mod_inverse(a, b), b), floor_mod(n * mod_inverse(b, a), a)};
  detail::ensure(floor_mod(a * inst.a1 + b * inst.b1 - n, a * b) == 0,
                 "a*a1 + b*b1 = n (mod ab)");
  return inst;
}

inline ExactInt count2(const ExactInt& a, const ExactInt& b, const ExactInt& n) {
  if (a < 1 || b < 1) throw invalid_argument("coefficients a, b must be >= 1");
  if (n < 0) throw invalid_argument("right-hand side n must be >= 0");
  const ExactInt g = gcd(a, b);
  if (n % g != 0) return 0;
  const Instance2 inst = make_instance2(a / g, b / g, n / g);
  const ExactInt ab = inst.a * inst.b;
  const ExactInt numerator = inst.n - inst.a * inst.a1 - inst.b * inst.b1;
  detail::ensure(numerator % ab == 0, "ab divides n - a*a1 - b*b1");
  ExactInt count = 1 + numerator / ab;
  detail::ensure(count >= 0, "two-variable count is non-negative");
  return count;
}

inline ExactInt count2_oracle_enum(const ExactInt& a, const ExactInt& b, const ExactInt& n,
                                   std::uint64_t budget = 1'000'000'000) {
  if (a < 1 || b < 1 || n < 0) throw invalid_argument("count2_oracle_enum: bad instance");
  if (n / b + 1 > budget) throw resource_limit("count2_oracle_enum: budget exceeded");
  const std::int64_t nn = to_int64(n, "count2_oracle_enum");
  const std::int64_t aa = a > n ? nn + 1 : static_cast<std::int64_t>(a);
  const std::int64_t bb = b > n ? nn + 1 : static_cast<std::int64_t>(b);
  std::uint64_t count = 0;
  for (std::int64_t rest = nn; rest >= 0; rest -= bb)
    if (rest % aa == 0) ++count;
  return count;
}

namespace detail {
inline void require_coprime_generators(const ExactInt& a, const ExactInt& b, const char* who) {
  if (a < 2 || b < 2) throw invalid_argument(std::string(who) + ": requires a, b >= 2");
  if (gcd(a, b) != 1) throw invalid_argument(std::string(who) + ": requires gcd(a, b) = 1");
}
}  // namespace detail

// Half-open range [lo, hi) of right-hand sides with exactly one solution.
inline std::pair<ExactInt, ExactInt> unique_window(const ExactInt& a, const ExactInt& b) {
  detail::require_coprime_generators(a, b, "unique_window");
  return {(a - 1) * (b - 1), a * b};
}

inline ExactInt frobenius2(const ExactInt& a, const ExactInt& b) {
  detail::require_coprime_generators(a, b, "frobenius2");
  return a * b - a - b;
}

inline ExactInt nonrepresentable_count(const ExactInt& p, const ExactInt& q) {
  detail::require_coprime_generators(p, q, "nonrepresentable_count");
  return (p - 1) * (q - 1) / 2;
}

// Positive integers with no representation p*x + q*y, found by marking
// reachable values in [0, pq]. Independent of count2.
inline std::vector<ExactInt> nonrepresentable_set(const ExactInt& p, const ExactInt& q) {
  if (p < 1 || q < 1) throw invalid_argument("nonrepresentable_set: requires p, q >= 1");
  if (gcd(p, q) != 1) throw invalid_argument("nonrepresentable_set: requires gcd(p, q) = 1");
  const ExactInt limit = p * q;
  if (limit > kMaxSieveLength)
    throw resource_limit("nonrepresentable_set: pq exceeds the sieve limit");
  const auto len = static_cast<std::size_t>(limit) + 1;
  const auto pp = static_cast<std::size_t>(p);
  const auto qq = static_cast<std::size_t>(q);
  std::vector<bool> reachable(len, false);
  reachable[0] = true;
  std::vector<ExactInt> out;
  for (std::size_t v = 1; v < len; ++v) {
    reachable[v] = (v >= pp && reachable[v - pp]) || (v >= qq && reachable[v - qq]);
    if (!reachable[v]) out.emplace_back(v);
  }
  return out;
}

}  // namespace denum
