#pragma once

// Reduction of ax + by + cz = n to an equivalent instance with pairwise
// coprime coefficients.
//
// After dividing out g = gcd(a, b, c), let g1 = gcd(b, c), g2 = gcd(c, a),
// g3 = gcd(a, b). These are pairwise coprime, and in any solution
//   a*x = n (mod g1),  b*y = n (mod g2),  c*z = n (mod g3),
// which pins x = n1 (mod g1), y = n2 (mod g2), z = n3 (mod g3) with the
// offsets n_i in [0, g_i). Writing x = n1 + g1*X etc. gives
//   A*X + B*Y + C*Z = N,  A = a/(g2 g3), B = b/(g3 g1), C = c/(g1 g2),
//   N = (n - a*n1 - b*n2 - c*n3) / (g1 g2 g3),
// and the substitution is a bijection between the two solution sets.
// N can come out negative, in which case neither equation has solutions.
//
// Offsets use the half-open range [0, g_i); the closed-form symbols in
// denumerant3.hpp use [1, m] instead.

#include <array>
#include <optional>

#include "denum/errors.hpp"
#include "denum/exact_arith.hpp"

namespace denum {

struct Instance3 {
  ExactInt a;
  ExactInt b;
  ExactInt c;
  ExactInt n;

  friend bool operator==(const Instance3&, const Instance3&) = default;
};

using Triple = std::array<ExactInt, 3>;

inline void validate(const Instance3& inst) {
  if (inst.a < 1 || inst.b < 1 || inst.c < 1)
    throw invalid_argument("coefficients a, b, c must be >= 1");
  if (inst.n < 0) throw invalid_argument("right-hand side n must be >= 0");
}

inline bool pairwise_coprime(const ExactInt& a, const ExactInt& b, const ExactInt& c) {
  return gcd(a, b) == 1 && gcd(b, c) == 1 && gcd(c, a) == 1;
}

// Divides through by gcd(a, b, c); nullopt when that gcd does not divide n.
inline std::optional<Instance3> normalize_gcd(const Instance3& inst) {
  validate(inst);
  const ExactInt g = gcd(inst.a, inst.b, inst.c);
  if (inst.n % g != 0) return std::nullopt;
  if (g == 1) return inst;
  return Instance3{inst.a / g, inst.b / g, inst.c / g, inst.n / g};
}

struct ReductionWitness {
  Instance3 original;    // as supplied by the caller
  ExactInt g;            // gcd of the original coefficients
  Instance3 normalized;  // original divided by g
  ExactInt g1, g2, g3;
  ExactInt n1, n2, n3;
  Instance3 reduced;     // (A, B, C; N); N may be negative
  bool n_nonneg = true;
};

inline ReductionWitness reduce_pairwise(const Instance3& inst) {
  validate(inst);
  if (gcd(inst.a, inst.b, inst.c) != 1)
    throw invalid_argument("reduce_pairwise: requires gcd(a, b, c) = 1");
  const auto& [a, b, c, n] = inst;

  ReductionWitness w;
  w.original = inst;
  w.g = 1;
  w.normalized = inst;
  w.g1 = gcd(b, c);
  w.g2 = gcd(c, a);
  w.g3 = gcd(a, b);
  detail::ensure(gcd(w.g1, w.g2) == 1 && gcd(w.g2, w.g3) == 1 && gcd(w.g3, w.g1) == 1,
                 "pairwise gcds of a gcd-1 triple are coprime");

  w.n1 = floor_mod(n * mod_inverse(a, w.g1), w.g1);
  w.n2 = floor_mod(n * mod_inverse(b, w.g2), w.g2);
  w.n3 = floor_mod(n * mod_inverse(c, w.g3), w.g3);

  const ExactInt big_a = a / (w.g2 * w.g3);
  const ExactInt big_b = b / (w.g3 * w.g1);
  const ExactInt big_c = c / (w.g1 * w.g2);
  detail::ensure(big_a * w.g2 * w.g3 == a && big_b * w.g3 * w.g1 == b &&
                     big_c * w.g1 * w.g2 == c,
                 "coefficients divisible by their gcd products");
  detail::ensure(pairwise_coprime(big_a, big_b, big_c), "reduced coefficients pairwise coprime");

  const ExactInt numerator = n - a * w.n1 - b * w.n2 - c * w.n3;
  const ExactInt modulus = w.g1 * w.g2 * w.g3;
  detail::ensure(numerator % modulus == 0, "g1*g2*g3 divides n - a*n1 - b*n2 - c*n3");
  w.reduced = {big_a, big_b, big_c, numerator / modulus};
  w.n_nonneg = w.reduced.n >= 0;
  return w;
}

// normalize_gcd followed by reduce_pairwise; nullopt when gcd(a, b, c) does
// not divide n.
inline std::optional<ReductionWitness> reduce(const Instance3& inst) {
  const auto normalized = normalize_gcd(inst);
  if (!normalized) return std::nullopt;
  ReductionWitness w = reduce_pairwise(*normalized);
  w.original = inst;
  w.g = gcd(inst.a, inst.b, inst.c);
  return w;
}

inline bool solves(const Instance3& inst, const Triple& s) {
  return s[0] >= 0 && s[1] >= 0 && s[2] >= 0 &&
         inst.a * s[0] + inst.b * s[1] + inst.c * s[2] == inst.n;
}

// Reduced solution -> solution of the original equation.
inline Triple lift_solution(const ReductionWitness& w, const Triple& reduced_solution) {
  if (!solves(w.reduced, reduced_solution))
    throw invalid_argument("lift_solution: not a non-negative solution of the reduced instance");
  Triple out{w.n1 + w.g1 * reduced_solution[0], w.n2 + w.g2 * reduced_solution[1],
             w.n3 + w.g3 * reduced_solution[2]};
  detail::ensure(solves(w.normalized, out), "lifted solution solves the original");
  return out;
}

// Original solution -> reduced solution; the inverse of lift_solution.
inline Triple project_solution(const ReductionWitness& w, const Triple& solution) {
  if (!solves(w.normalized, solution))
    throw invalid_argument("project_solution: not a non-negative solution of the instance");
  const ExactInt dx = solution[0] - w.n1;
  const ExactInt dy = solution[1] - w.n2;
  const ExactInt dz = solution[2] - w.n3;
  detail::ensure(dx % w.g1 == 0 && dy % w.g2 == 0 && dz % w.g3 == 0,
                 "solutions sit on the offset residue classes");
  Triple out{dx / w.g1, dy / w.g2, dz / w.g3};
  detail::ensure(solves(w.reduced, out), "projected solution solves the reduced instance");
  return out;
}

}  // namespace denum
