#pragma once

// Exhaustive and randomized identity sweeps used by `denum verify` and the
// acceptance suite. Pair sweeps keep one report per pair; the large
// sweeps (lemma4, oracle, floorsum) keep only the failing cases.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "denum/denumerant3.hpp"
#include "denum/floor_sum.hpp"
#include "denum/identity_report.hpp"
#include "denum/linear2.hpp"
#include "denum/residues.hpp"

namespace denum {

struct SweepOptions {
  std::int64_t limit = 50;
  std::int64_t n_max = 400;  // oracle sweep only
  std::uint64_t seed = 1;    // floorsum sweep only
  std::uint64_t budget = kDefaultOracleBudget;
};

struct SweepResult {
  std::string identity;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<IdentityReport> reports;

  void add(IdentityReport r, bool keep) {
    ++checked;
    if (!r.holds) ++failures;
    if (keep || !r.holds) reports.push_back(std::move(r));
  }
};

inline std::vector<std::int64_t> odd_primes_below(std::int64_t limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = 3; v < limit; v += 2)
    if (is_prime(static_cast<std::uint64_t>(v))) out.push_back(v);
  return out;
}

inline const std::vector<std::string_view>& sweep_names() {
  static const std::vector<std::string_view> names = {
      "gauss",  "sylvester", "equivalence", "legendre", "lemma4",   "lemma5",
      "lemma8", "lemma67",   "byproduct",   "parity",   "window",   "oracle",
      "floorsum"};
  return names;
}

namespace detail {

inline void sweep_oracle(SweepResult& out, const SweepOptions& opt) {
  const std::int64_t top = opt.limit;
  for (std::int64_t a = 1; a <= top; ++a)
    for (std::int64_t b = 1; b <= top; ++b)
      for (std::int64_t c = 1; c <= top; ++c) {
        if (!pairwise_coprime(a, b, c)) continue;
        const auto table = count3_oracle_dp_table(a, b, c, opt.n_max);
        for (std::int64_t n = 0; n <= opt.n_max; ++n) {
          const ExactInt closed = count3_closed(a, b, c, n).count;
          const ExactInt enumerated = count3_oracle_enum(a, b, c, n, opt.budget);
          IdentityReport r = make_report("oracle", closed, ExactInt(table[n]));
          r.holds = r.holds && closed == enumerated;
          r.with("a", a).with("b", b).with("c", c).with("n", n).with("enum", enumerated);
          out.add(std::move(r), false);
        }
      }
}

inline void sweep_floorsum(SweepResult& out, const SweepOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  const std::uint64_t mask = (std::uint64_t{1} << 60) - 1;
  for (std::int64_t i = 0; i < opt.limit; ++i) {
    ExactInt a = (rng() & mask) | 2;
    ExactInt b = ExactInt(rng()) % a;
    ExactInt c;
    do c = ExactInt(rng()) % a;
    while (gcd(a, c) != 1);
    const FloorSumQuery q{b, c, a};
    const FloorSumTrace t = floor_sum_trace(q);
    const ExactInt generic = floor_sum_generic(q);
    IdentityReport r = make_report("floorsum", t.value, generic);
    const std::size_t bound = reciprocity_step_bound(a, c);
    r.holds = r.holds && t.reciprocity_steps() <= bound && floor_sum_fast(q) == t.value;
    r.with("b", b).with("c", c).with("a", a).with("steps", t.reciprocity_steps()).with("bound",
                                                                                        bound);
    out.add(std::move(r), false);
  }
}

}  // namespace detail

// Throws invalid_argument for an unknown identity name.
inline SweepResult run_sweep(std::string_view identity, const SweepOptions& opt) {
  SweepResult out;
  out.identity = std::string(identity);
  const std::int64_t limit = opt.limit;
  const auto primes = odd_primes_below(limit);

  auto each_unordered = [&](auto&& fn) {
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (std::size_t j = i + 1; j < primes.size(); ++j) fn(PrimePair(primes[i], primes[j]));
  };
  auto each_ordered = [&](auto&& fn) {
    for (auto p : primes)
      for (auto q : primes)
        if (p != q) fn(PrimePair(p, q));
  };

  if (identity == "gauss") {
    each_unordered([&](const PrimePair& pr) { out.add(gauss_identity(pr), true); });
  } else if (identity == "equivalence") {
    each_unordered([&](const PrimePair& pr) { out.add(sylvester_gauss_equivalence(pr), true); });
  } else if (identity == "legendre") {
    each_ordered([&](const PrimePair& pr) { out.add(legendre_agreement(pr), true); });
  } else if (identity == "lemma5") {
    each_ordered([&](const PrimePair& pr) { out.add(lemma5_relation(pr), true); });
  } else if (identity == "lemma8") {
    each_ordered([&](const PrimePair& pr) {
      if (pr.q() < pr.p()) out.add(npq_agreement(pr), true);
    });
  } else if (identity == "lemma67") {
    each_unordered([&](const PrimePair& pr) { out.add(three_way_count(pr), true); });
  } else if (identity == "byproduct") {
    each_unordered([&](const PrimePair& pr) { out.add(byproduct_sum(pr), true); });
  } else if (identity == "parity") {
    each_ordered([&](const PrimePair& pr) { out.add(parity_theorem(pr), true); });
  } else if (identity == "sylvester") {
    for (std::int64_t p = 2; p <= limit; ++p)
      for (std::int64_t q = p + 1; q <= limit; ++q) {
        if (gcd(ExactInt(p), ExactInt(q)) != 1) continue;
        const ExactInt size = nonrepresentable_set(p, q).size();
        IdentityReport r = make_report("sylvester", size, nonrepresentable_count(p, q));
        r.with("p", p).with("q", q);
        out.add(std::move(r), true);
      }
  } else if (identity == "window") {
    for (std::int64_t a = 2; a <= limit; ++a)
      for (std::int64_t b = a + 1; b <= limit; ++b) {
        if (gcd(ExactInt(a), ExactInt(b)) != 1) continue;
        const auto [lo, hi] = unique_window(a, b);
        std::int64_t ones = 0;
        for (ExactInt n = lo; n < hi; ++n)
          if (count2(a, b, n) == 1) ++ones;
        const ExactInt frob = frobenius2(a, b);
        // lhs: window values with exactly one solution, plus solutions at
        // the Frobenius number; rhs: window length.
        IdentityReport r = make_report("window", ones + count2(a, b, frob), hi - lo);
        r.with("a", a).with("b", b).with("lo", lo).with("hi", hi).with("frobenius", frob);
        out.add(std::move(r), true);
      }
  } else if (identity == "lemma4") {
    for (std::int64_t a = 1; a <= limit; ++a)
      for (std::int64_t c = 0; c < a; ++c) {
        if (gcd(ExactInt(a), ExactInt(c)) != 1) continue;
        for (std::int64_t b = 0; b < a; ++b) out.add(lemma4_check(a, b, c), false);
      }
  } else if (identity == "oracle") {
    detail::sweep_oracle(out, opt);
  } else if (identity == "floorsum") {
    detail::sweep_floorsum(out, opt);
  } else {
    throw invalid_argument("unknown identity '" + std::string(identity) + "'");
  }
  return out;
}

}  // namespace denum
