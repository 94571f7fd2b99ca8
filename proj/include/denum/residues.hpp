#pragma once

// Quadratic residues through floor sums and solution counts.
//
// For distinct odd primes p, q let t(p, q) = sum_{i=1}^{(p-1)/2} floor(iq/p).
// Eisenstein: (q/p) = (-1)^t(p, q). Gauss: t(p, q) + t(q, p) = (p-1)(q-1)/4.
//
// N_{p,q}, the number of solutions of px + qy + z = q(p-1)/2, equals
// (p+1)/2 + t(p, q). Counting px + qy + z = p(q-1)/2 + q(p-1)/2 in two ways
// ties t(p, q) + t(q, p) to the number N0 of positive integers that are not
// of the form px + qy:  N0 + 2(t(p, q) + t(q, p)) = (p-1)(q-1).

#include <cstdint>
#include <string>

#include "denum/denumerant3.hpp"
#include "denum/errors.hpp"
#include "denum/exact_arith.hpp"
#include "denum/floor_sum.hpp"
#include "denum/identity_report.hpp"
#include "denum/linear2.hpp"

namespace denum {

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace detail

// Deterministic Miller-Rabin for the full 64-bit range (first twelve
// prime bases).
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = detail::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline bool is_prime(const ExactInt& n) {
  if (n < 2 || n > std::numeric_limits<std::uint64_t>::max()) {
    if (n < 2) return false;
    throw invalid_argument("is_prime: only 64-bit inputs are supported");
  }
  return is_prime(static_cast<std::uint64_t>(n));
}

// Two distinct odd primes. Construction validates.
class PrimePair {
 public:
  PrimePair(ExactInt p, ExactInt q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_ == q_) throw invalid_argument("prime pair: p and q must be distinct");
    for (const ExactInt* v : {&p_, &q_}) {
      if (*v < 3 || *v % 2 == 0 || !is_prime(*v))
        throw invalid_argument("prime pair: " + to_string(*v) + " is not an odd prime");
    }
  }

  const ExactInt& p() const { return p_; }
  const ExactInt& q() const { return q_; }
  PrimePair swapped() const { return PrimePair(q_, p_, Unchecked{}); }

 private:
  struct Unchecked {};
  PrimePair(ExactInt p, ExactInt q, Unchecked) : p_(std::move(p)), q_(std::move(q)) {}

  ExactInt p_;
  ExactInt q_;
};

// t(p, q) = sum_{i=1}^{(p-1)/2} floor(iq/p).
inline ExactInt eisenstein_t(const PrimePair& pair) {
  return floor_sum_fast({(pair.p() - 1) / 2, pair.q(), pair.p()});
}

inline ExactInt eisenstein_t(const ExactInt& p, const ExactInt& q) {
  return eisenstein_t(PrimePair(p, q));
}

// (q/p) as (-1)^t(p, q).
inline int legendre(const ExactInt& q, const ExactInt& p) {
  return eisenstein_t(PrimePair(p, q)) % 2 == 0 ? 1 : -1;
}

// (q/p) as q^((p-1)/2) mod p.
inline int legendre_euler(const ExactInt& q, const ExactInt& p) {
  const PrimePair pair(p, q);
  const std::uint64_t m = static_cast<std::uint64_t>(p);
  const std::uint64_t base = static_cast<std::uint64_t>(q % p);
  const std::uint64_t r = detail::pow_mod(base, (m - 1) / 2, m);
  if (r == 1) return 1;
  detail::ensure(r == m - 1, "Euler criterion yields +-1 for a unit modulo an odd prime");
  return -1;
}

// Solutions of px + qy + z = q(p-1)/2, via the closed form with c = 1.
inline ExactInt npq_count(const PrimePair& pair) {
  return count3_closed(pair.p(), pair.q(), 1, pair.q() * (pair.p() - 1) / 2).count;
}

inline ExactInt npq_count(const ExactInt& p, const ExactInt& q) {
  return npq_count(PrimePair(p, q));
}

// Same count by fixing y and counting the admissible x.
inline ExactInt npq_count_direct(const PrimePair& pair) {
  const ExactInt& p = pair.p();
  const ExactInt& q = pair.q();
  const ExactInt target = q * (p - 1) / 2;
  ExactInt total = 0;
  for (ExactInt rest = target; rest >= 0; rest -= q) total += rest / p + 1;
  return total;
}

// N_{p,q} for q < p, by fixing x instead:
//   (p+1)/2 + (p-1)(q-1)/4 - sum_{i=1}^{(q-1)/2} floor(ip/q).
inline ExactInt lemma8_count(const ExactInt& p, const ExactInt& q) {
  const PrimePair pair(p, q);
  if (q >= p) throw invalid_argument("lemma8_count: requires q < p");
  return (p + 1) / 2 + (p - 1) * (q - 1) / 4 - floor_sum_fast({(q - 1) / 2, p, q});
}

// N_{p,q} - t(p, q) against (p+1)/2. The printed form of this relation uses
// (p-1)/2; it is carried in the context as `printed_constant`.
inline IdentityReport lemma5_relation(const PrimePair& pair) {
  const ExactInt npq = npq_count(pair);
  const ExactInt t = eisenstein_t(pair);
  IdentityReport r = make_report("lemma5", npq - t, (pair.p() + 1) / 2);
  r.with("p", pair.p()).with("q", pair.q()).with("N_pq", npq).with("t", t);
  r.with("printed_constant", (pair.p() - 1) / 2);
  return r;
}

// npq_count against lemma8_count (q < p) and the direct y-summation.
inline IdentityReport npq_agreement(const PrimePair& pair) {
  if (pair.q() >= pair.p()) throw invalid_argument("npq_agreement: requires q < p");
  const ExactInt closed = npq_count(pair);
  const ExactInt alternate = lemma8_count(pair.p(), pair.q());
  const ExactInt direct = npq_count_direct(pair);
  IdentityReport r = make_report("lemma8", closed, alternate);
  r.holds = r.holds && closed == direct;
  r.with("p", pair.p()).with("q", pair.q()).with("direct", direct);
  return r;
}

inline IdentityReport gauss_identity(const PrimePair& pair) {
  const ExactInt t1 = eisenstein_t(pair);
  const ExactInt t2 = eisenstein_t(pair.swapped());
  IdentityReport r = make_report("gauss", t1 + t2, (pair.p() - 1) * (pair.q() - 1) / 4);
  r.with("p", pair.p()).with("q", pair.q()).with("t1", t1).with("t2", t2);
  return r;
}

inline ExactInt sylvester_n0(const PrimePair& pair) {
  return static_cast<unsigned long long>(nonrepresentable_set(pair.p(), pair.q()).size());
}

// N0 + 2(t1 + t2) = (p-1)(q-1), with N0 from the sieve.
inline IdentityReport sylvester_gauss_equivalence(const PrimePair& pair) {
  const ExactInt n0 = sylvester_n0(pair);
  const ExactInt t1 = eisenstein_t(pair);
  const ExactInt t2 = eisenstein_t(pair.swapped());
  IdentityReport r =
      make_report("equivalence", n0 + 2 * (t1 + t2), (pair.p() - 1) * (pair.q() - 1));
  r.with("p", pair.p()).with("q", pair.q()).with("N0", n0).with("t1", t1).with("t2", t2);
  return r;
}

inline ExactInt lemma6_target(const PrimePair& pair) {
  return pair.p() * (pair.q() - 1) / 2 + pair.q() * (pair.p() - 1) / 2;
}

// Count of px + qy + z = p(q-1)/2 + q(p-1)/2 from the closed form, checked
// against target + 1 - N0.
inline ExactInt lemma6_count(const PrimePair& pair) {
  const ExactInt target = lemma6_target(pair);
  const ExactInt direct = count3_closed(pair.p(), pair.q(), 1, target).count;
  const ExactInt formula = target + 1 - sylvester_n0(pair);
  if (direct != formula)
    detail::fail_invariant("lemma6: closed-form count " + to_string(direct) +
                           " != target + 1 - N0 = " + to_string(formula));
  return direct;
}

// Same count by the four-case split: 2(N_{p,q} + N_{q,p}) - ((p+1)/2 + (q+1)/2 + 1).
inline ExactInt lemma7_count(const PrimePair& pair) {
  return 2 * (npq_count(pair) + npq_count(pair.swapped())) -
         ((pair.p() + 1) / 2 + (pair.q() + 1) / 2 + 1);
}

// All three evaluations of that count side by side.
inline IdentityReport three_way_count(const PrimePair& pair) {
  const ExactInt target = lemma6_target(pair);
  const ExactInt direct = count3_closed(pair.p(), pair.q(), 1, target).count;
  const ExactInt n0 = sylvester_n0(pair);
  const ExactInt formula = target + 1 - n0;
  const ExactInt four_case = lemma7_count(pair);
  IdentityReport r = make_report("lemma67", formula, four_case);
  r.holds = r.holds && direct == formula;
  r.with("p", pair.p()).with("q", pair.q()).with("target", target).with("N0", n0);
  r.with("direct", direct);
  return r;
}

// sum_{i=h-j}^{h} floor(ip/q) = ((p-1)/2)(j+1), h = (q-1)/2, j = floor((q-p)/(2p)).
inline IdentityReport byproduct_sum(const PrimePair& pair) {
  const ExactInt& p = pair.p();
  const ExactInt& q = pair.q();
  if (p >= q) throw invalid_argument("byproduct_sum: requires p < q");
  const ExactInt h = (q - 1) / 2;
  const ExactInt j = (q - p) / (2 * p);
  const ExactInt lower = h - j;
  detail::ensure(lower >= 1, "by-product summation range starts at 1 or above");
  const ExactInt lhs = floor_sum_fast({h, p, q}) - floor_sum_fast({lower - 1, p, q});
  IdentityReport r = make_report("byproduct", lhs, (p - 1) / 2 * (j + 1));
  r.with("p", p).with("q", q).with("lower", lower).with("upper", h).with("j", j);
  return r;
}

// Parity of the count of px + qy + z = k, k = (p-1)/2 + p((q-1)/2)p^{-1}
// (p^{-1} modulo q), against
//   (k+1)(k+p+q)/2 + ((q^2-1)/8)(1+p^{-1}) + (p-1)(q-1)/4.
// lhs and rhs are the two parities.
inline IdentityReport parity_theorem(const PrimePair& pair) {
  const ExactInt& p = pair.p();
  const ExactInt& q = pair.q();
  const ExactInt p_inv = mod_inverse(p, q);
  const ExactInt k = (p - 1) / 2 + p * ((q - 1) / 2) * p_inv;
  const ExactInt count = count3_closed(p, q, 1, k).count;
  const ExactInt product = (k + 1) * (k + p + q);
  detail::ensure(product % 2 == 0, "(k+1)(k+p+q) is even");
  const ExactInt formula =
      product / 2 + (q * q - 1) / 8 * (1 + p_inv) + (p - 1) * (q - 1) / 4;
  IdentityReport r = make_report("parity", count % 2, formula % 2);
  r.with("p", p).with("q", q).with("p_inv", p_inv).with("k", k).with("count", count);
  r.with("formula", formula);
  return r;
}

// (q/p) both ways.
inline IdentityReport legendre_agreement(const PrimePair& pair) {
  const int by_floor_sum = legendre(pair.q(), pair.p());
  const int by_euler = legendre_euler(pair.q(), pair.p());
  IdentityReport r = make_report("legendre", by_floor_sum, by_euler);
  r.with("p", pair.p()).with("q", pair.q()).with("t", eisenstein_t(pair));
  return r;
}

}  // namespace denum
