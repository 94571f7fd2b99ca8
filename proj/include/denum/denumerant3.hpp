#pragma once

// Number of non-negative solutions of ax + by + cz = n.
//
// For pairwise coprime a, b, c the count is
//
//   N1/(2abc) + S(b1'-1, c1', a) + S(c2'-1, a2', b) + S(a3'-1, b3', c) - 2
//
// where S is the floor sum of floor_sum.hpp, the primed symbols are
// residues taken in [1, modulus]
//
//   b1' = -n/b (mod a)   c1' = b/c (mod a)
//   c2' = -n/c (mod b)   a2' = c/a (mod b)
//   a3' = -n/a (mod c)   b3' = a/b (mod c)
//
// and N1 = n(n+a+b+c) + cb*b1'(a+1-c1'(b1'-1)) + ac*c2'(b+1-a2'(c2'-1))
//                     + ba*a3'(c+1-b3'(a3'-1)).
//
// count3 handles arbitrary positive coefficients by way of reduction.hpp.
// Two oracles are provided: direct enumeration and the coefficient of x^n
// in 1/((1-x^a)(1-x^b)(1-x^c)) by prefix accumulation.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "denum/errors.hpp"
#include "denum/exact_arith.hpp"
#include "denum/floor_sum.hpp"
#include "denum/reduction.hpp"

namespace denum {

inline constexpr std::uint64_t kDefaultOracleBudget = 1'000'000'000;
inline constexpr std::uint64_t kMaxDpLength = 100'000'000;

struct TheoremSymbols {
  ExactInt b1p, c1p;  // modulo a
  ExactInt c2p, a2p;  // modulo b
  ExactInt a3p, b3p;  // modulo c
  ExactInt n1;        // may be negative

  // The three floor-sum queries the closed form needs.
  std::array<FloorSumQuery, 3> queries(const ExactInt& a, const ExactInt& b,
                                       const ExactInt& c) const {
    return {FloorSumQuery{b1p - 1, c1p, a}, FloorSumQuery{c2p - 1, a2p, b},
            FloorSumQuery{a3p - 1, b3p, c}};
  }
};

struct CountResult {
  Instance3 instance;
  ExactInt count;
  std::optional<ReductionWitness> witness;  // absent for the closed form alone
                                            // or when gcd(a,b,c) does not divide n
  std::optional<TheoremSymbols> symbols;    // absent when no closed form was needed
  std::array<ExactInt, 3> floor_sums{};
};

inline TheoremSymbols theorem_symbols(const ExactInt& a, const ExactInt& b, const ExactInt& c,
                                      const ExactInt& n) {
  validate(Instance3{a, b, c, n});
  if (!pairwise_coprime(a, b, c))
    throw invalid_argument("theorem_symbols: coefficients must be pairwise coprime");

  TheoremSymbols s;
  s.b1p = residue_one_based(-n * mod_inverse(b, a), a);
  s.c1p = residue_one_based(b * mod_inverse(c, a), a);
  s.c2p = residue_one_based(-n * mod_inverse(c, b), b);
  s.a2p = residue_one_based(c * mod_inverse(a, b), b);
  s.a3p = residue_one_based(-n * mod_inverse(a, c), c);
  s.b3p = residue_one_based(a * mod_inverse(b, c), c);
  s.n1 = n * (n + a + b + c) + c * b * s.b1p * (a + 1 - s.c1p * (s.b1p - 1)) +
         a * c * s.c2p * (b + 1 - s.a2p * (s.c2p - 1)) +
         b * a * s.a3p * (c + 1 - s.b3p * (s.a3p - 1));
  return s;
}

inline CountResult count3_closed(const ExactInt& a, const ExactInt& b, const ExactInt& c,
                                 const ExactInt& n) {
  CountResult r;
  r.instance = {a, b, c, n};
  r.symbols = theorem_symbols(a, b, c, n);
  const auto queries = r.symbols->queries(a, b, c);
  for (std::size_t i = 0; i < 3; ++i) r.floor_sums[i] = floor_sum_fast(queries[i]);

  const ExactInt denom = 2 * a * b * c;
  detail::ensure(r.symbols->n1 % denom == 0, "2abc divides N1");
  r.count = r.symbols->n1 / denom + r.floor_sums[0] + r.floor_sums[1] + r.floor_sums[2] - 2;
  detail::ensure(r.count >= 0, "solution count is non-negative");
  return r;
}

inline CountResult count3(const ExactInt& a, const ExactInt& b, const ExactInt& c,
                          const ExactInt& n) {
  const Instance3 inst{a, b, c, n};
  validate(inst);
  CountResult r;
  r.instance = inst;
  r.witness = reduce(inst);
  if (!r.witness || !r.witness->n_nonneg) {
    r.count = 0;
    return r;
  }
  const Instance3& red = r.witness->reduced;
  CountResult closed = count3_closed(red.a, red.b, red.c, red.n);
  r.count = std::move(closed.count);
  r.symbols = std::move(closed.symbols);
  r.floor_sums = std::move(closed.floor_sums);
  return r;
}

// Loop over z, then y, testing whether the remainder is a multiple of a.
// `budget` caps the number of inner iterations.
inline ExactInt count3_oracle_enum(const ExactInt& a, const ExactInt& b, const ExactInt& c,
                                   const ExactInt& n,
                                   std::uint64_t budget = kDefaultOracleBudget) {
  validate(Instance3{a, b, c, n});
  const ExactInt bound = (n / c + 1) * (n / b + 1);
  if (bound > budget)
    throw resource_limit("count3_oracle_enum: " + to_string(bound) +
                         " iterations exceed the budget of " + std::to_string(budget));
  const std::int64_t nn = to_int64(n, "count3_oracle_enum");
  // a, b, c larger than n only contribute the zero multiple.
  const std::int64_t aa = a > n ? nn + 1 : static_cast<std::int64_t>(a);
  const std::int64_t bb = b > n ? nn + 1 : static_cast<std::int64_t>(b);
  const std::int64_t cc = c > n ? nn + 1 : static_cast<std::int64_t>(c);
  std::uint64_t count = 0;
  for (std::int64_t rest_z = nn; rest_z >= 0; rest_z -= cc)
    for (std::int64_t rest_y = rest_z; rest_y >= 0; rest_y -= bb)
      if (rest_y % aa == 0) ++count;
  return count;
}

// Coefficients of x^0 .. x^n_max in 1/((1-x^a)(1-x^b)(1-x^c)).
//
// Each entry is at most the a = b = c = 1 value (m+1)(m+2)/2, which stays
// below 2^53 for n_max <= kMaxDpLength, so 64-bit accumulators are exact.
inline std::vector<std::uint64_t> count3_oracle_dp_table(const ExactInt& a, const ExactInt& b,
                                                         const ExactInt& c,
                                                         const ExactInt& n_max) {
  validate(Instance3{a, b, c, n_max});
  if (n_max > kMaxDpLength)
    throw resource_limit("count3_oracle_dp: n = " + to_string(n_max) + " exceeds the limit of " +
                         std::to_string(kMaxDpLength));
  const auto len = static_cast<std::size_t>(n_max) + 1;
  std::vector<std::uint64_t> coeff(len, 0);
  coeff[0] = 1;
  for (const ExactInt* k : {&a, &b, &c}) {
    if (*k >= len) continue;
    const auto step = static_cast<std::size_t>(*k);
    for (std::size_t i = step; i < len; ++i) coeff[i] += coeff[i - step];
  }
  return coeff;
}

inline ExactInt count3_oracle_dp(const ExactInt& a, const ExactInt& b, const ExactInt& c,
                                 const ExactInt& n) {
  return count3_oracle_dp_table(a, b, c, n).back();
}

}  // namespace denum
