#pragma once

// Sums of the form S(b, c, a) = sum_{i=1}^{b} floor(i*c/a).
//
// Three evaluators live here:
//   floor_sum_naive    direct iteration, the oracle;
//   floor_sum_fast     reciprocity recursion: the identity
//                        S(b, c, a) + S(K, a, c) = b*K,  K = floor(b*c/a)
//                      (valid for b < a, c < a, gcd(a, c) = 1) alternated
//                      with a division step a = q*c + r turning S(K, a, c)
//                      into q*K(K+1)/2 + S(K, r, c);
//   floor_sum_generic  an unrelated Euclid-like evaluator with no
//                      coprimality requirement, used as a cross-check.
//
// floor_sum_trace runs the same recursion as floor_sum_fast and records
// every step, so a derivation can be replayed and printed.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "denum/errors.hpp"
#include "denum/exact_arith.hpp"
#include "denum/identity_report.hpp"

namespace denum {

struct FloorSumQuery {
  ExactInt b;  // number of terms
  ExactInt c;  // numerator multiplier
  ExactInt a;  // denominator

  friend bool operator==(const FloorSumQuery&, const FloorSumQuery&) = default;
};

inline void validate(const FloorSumQuery& q) {
  if (q.a < 1) throw invalid_argument("floor sum: denominator must be >= 1");
  if (q.b < 0 || q.c < 0) throw invalid_argument("floor sum: b and c must be >= 0");
}

enum class StepKind {
  period,       // b >= a: complete periods of length a split off
  reciprocity,  // S(b, c, a) = b*K - S(K, a, c)
  division,     // S(K, a, c) = q*K(K+1)/2 + S(K, a mod c, c)
};

struct FloorSumStep {
  StepKind kind;
  ExactInt factor;    // m for period, K for reciprocity, q for division
  ExactInt constant;  // term emitted by the step
  int sign;           // sign of `constant` in the total
  FloorSumQuery next;
};

struct FloorSumTrace {
  FloorSumQuery query;
  std::vector<FloorSumStep> steps;
  FloorSumQuery terminal;     // query left when the recursion stopped
  ExactInt terminal_value;    // its value, evaluated directly
  int terminal_sign = 1;
  ExactInt value;

  // Number of reciprocity applications; each is paired with at most one
  // division step, so steps.size() <= 2 * reciprocity_steps() + 2.
  std::size_t reciprocity_steps() const {
    std::size_t n = 0;
    for (const auto& s : steps)
      if (s.kind == StepKind::reciprocity) ++n;
    return n;
  }

  // Total rebuilt from the recorded constants and a value for the terminal
  // query supplied by the caller.
  ExactInt replay(const ExactInt& terminal_sum) const {
    ExactInt total = 0;
    for (const auto& s : steps) total += s.sign * s.constant;
    total += terminal_sign * terminal_sum;
    return total;
  }
};

inline ExactInt floor_sum_naive(const FloorSumQuery& q) {
  validate(q);
  // Machine-word path: quotient and remainder of i*c/a are carried
  // incrementally, and the running total is at most b*b*c/a <= 2^62.
  constexpr std::int64_t kWordLimit = std::int64_t{1} << 20;
  if (q.b < kWordLimit && q.c < kWordLimit && q.a < kWordLimit) {
    const auto b = static_cast<std::int64_t>(q.b);
    const auto a = static_cast<std::int64_t>(q.a);
    const auto c = static_cast<std::int64_t>(q.c);
    const std::int64_t step_q = c / a, step_r = c % a;
    std::int64_t quot = 0, rem = 0, sum = 0;
    for (std::int64_t i = 1; i <= b; ++i) {
      quot += step_q;
      rem += step_r;
      if (rem >= a) {
        rem -= a;
        ++quot;
      }
      sum += quot;
    }
    return sum;
  }
  ExactInt total = 0;
  ExactInt numerator = 0;
  for (ExactInt i = 1; i <= q.b; ++i) {
    numerator += q.c;
    total += numerator / q.a;
  }
  return total;
}

// sum_{i=0}^{n-1} floor((step*i + offset)/m) by repeated swapping of the
// roles of slope and modulus.
inline ExactInt linear_floor_sum(ExactInt n, ExactInt m, ExactInt step, ExactInt offset) {
  if (n < 0 || m < 1 || step < 0 || offset < 0)
    throw invalid_argument("linear_floor_sum: need n >= 0, m >= 1, step >= 0, offset >= 0");
  ExactInt ans = 0;
  while (true) {
    if (step >= m) {
      ans += n * (n - 1) / 2 * (step / m);
      step %= m;
    }
    if (offset >= m) {
      ans += n * (offset / m);
      offset %= m;
    }
    const ExactInt y_max = step * n + offset;
    if (y_max < m) break;
    n = y_max / m;
    offset = y_max % m;
    std::swap(m, step);
  }
  return ans;
}

inline ExactInt floor_sum_generic(const FloorSumQuery& q) {
  validate(q);
  return linear_floor_sum(q.b, q.a, q.c, q.c);
}

namespace detail {

struct NullRecorder {
  void step(StepKind, const ExactInt&, const ExactInt&, int, const ExactInt&, const ExactInt&,
            const ExactInt&) {}
  void finish(const ExactInt&, const ExactInt&, const ExactInt&, const ExactInt&, int) {}
};

struct TraceRecorder {
  FloorSumTrace* trace;

  void step(StepKind kind, const ExactInt& factor, const ExactInt& constant, int sign,
            const ExactInt& b, const ExactInt& c, const ExactInt& a) {
    trace->steps.push_back({kind, factor, constant, sign, {b, c, a}});
  }
  void finish(const ExactInt& b, const ExactInt& c, const ExactInt& a, const ExactInt& value,
              int sign) {
    trace->terminal = {b, c, a};
    trace->terminal_value = value;
    trace->terminal_sign = sign;
  }
};

// The reciprocity recursion proper. Requires b < a, c < a, gcd(a, c) = 1.
// `sign` is the sign the sum carries in the caller's total.
template <class Recorder>
ExactInt reciprocity_core(ExactInt b, ExactInt c, ExactInt a, int sign, Recorder& rec) {
  ExactInt total = 0;
  while (true) {
    if (b == 0 || c == 0) {
      rec.finish(b, c, a, 0, sign);
      return total;
    }
    const ExactInt k = b * c / a;
    const ExactInt bk = b * k;
    rec.step(StepKind::reciprocity, k, bk, sign, k, a, c);
    total += sign * bk;
    sign = -sign;
    // Now evaluating S(k, a, c) with a > c.
    if (k <= 1) {
      const ExactInt tail = k * (a / c);
      rec.finish(k, a, c, tail, sign);
      total += sign * tail;
      return total;
    }
    const ExactInt q = a / c;
    ExactInt r = a % c;
    const ExactInt tri = q * k * (k + 1) / 2;
    rec.step(StepKind::division, q, tri, sign, k, r, c);
    total += sign * tri;
    b = k;
    a = c;
    c = std::move(r);
  }
}

template <class Recorder>
ExactInt floor_sum_dispatch(const FloorSumQuery& query, Recorder& rec) {
  validate(query);
  ExactInt b = query.b, c = query.c, a = query.a;
  if (b == 0 || c == 0) {
    rec.finish(b, c, a, 0, 1);
    return 0;
  }
  const ExactInt g = gcd(a, c);
  if (g != 1) {
    a /= g;
    c /= g;
  }
  ExactInt total = 0;
  if (c >= a) {
    const ExactInt q = c / a;
    const ExactInt tri = q * b * (b + 1) / 2;
    c %= a;
    rec.step(StepKind::division, q, tri, 1, b, c, a);
    total += tri;
    if (c == 0) {
      rec.finish(b, c, a, 0, 1);
      return total;
    }
  }
  if (b >= a) {
    const ExactInt m = b / a;
    const ExactInt r = b % a;
    const ExactInt period = (a - 1) * (c - 1) / 2 + c;
    const ExactInt constant = a * c * m * (m - 1) / 2 + m * period + r * m * c;
    rec.step(StepKind::period, m, constant, 1, r, c, a);
    total += constant;
    b = r;
  }
  total += reciprocity_core(std::move(b), std::move(c), std::move(a), 1, rec);
  return total;
}

}  // namespace detail

// Entry point for queries that already satisfy the reciprocity hypotheses.
// Reaching it with gcd(a, c) != 1 means the caller skipped normalization.
inline ExactInt floor_sum_reciprocity(const FloorSumQuery& q) {
  validate(q);
  if (q.b >= q.a || q.c >= q.a)
    throw invalid_argument("floor_sum_reciprocity: requires b < a and c < a");
  if (q.c != 0 && gcd(q.a, q.c) != 1)
    detail::fail_invariant("reciprocity recursion reached with gcd(a, c) != 1");
  detail::NullRecorder rec;
  return detail::reciprocity_core(q.b, q.c, q.a, 1, rec);
}

inline ExactInt floor_sum_fast(const FloorSumQuery& q) {
  detail::NullRecorder rec;
  return detail::floor_sum_dispatch(q, rec);
}

inline FloorSumTrace floor_sum_trace(const FloorSumQuery& q) {
  FloorSumTrace trace;
  trace.query = q;
  detail::TraceRecorder rec{&trace};
  trace.value = detail::floor_sum_dispatch(q, rec);
  return trace;
}

// Upper bound on reciprocity applications for a query with these operands.
inline std::size_t reciprocity_step_bound(const ExactInt& a, const ExactInt& c) {
  const ExactInt top = a > c ? a : c;
  std::size_t ceil_log2 = 0;
  if (top > 1) ceil_log2 = boost::multiprecision::msb(ExactInt(top - 1)) + 1;
  return 2 * ceil_log2 + 4;
}

// One line per step, then the value of the whole sum:
//   RECIP K=<k> const=<v> | DIV q=<q> const=<v> | PERIOD m=<m> const=<v>
//   BASE value=<v>
inline std::string render_trace(const FloorSumTrace& trace) {
  std::string out;
  for (const auto& s : trace.steps) {
    switch (s.kind) {
      case StepKind::reciprocity: out += "RECIP K="; break;
      case StepKind::division: out += "DIV q="; break;
      case StepKind::period: out += "PERIOD m="; break;
    }
    out += to_string(s.factor) + " const=" + to_string(s.constant) + "\n";
  }
  out += "BASE value=" + to_string(trace.value) + "\n";
  return out;
}

// Both sides of the reciprocity identity, each evaluated by direct summation.
inline IdentityReport lemma4_check(const ExactInt& a, const ExactInt& b, const ExactInt& c) {
  if (a < 1 || b < 0 || c < 0 || b >= a || c >= a)
    throw invalid_argument("lemma4_check: requires 0 <= b < a and 0 <= c < a");
  if (gcd(a, c) != 1) throw invalid_argument("lemma4_check: requires gcd(a, c) = 1");
  const ExactInt k = b * c / a;
  const ExactInt forward = floor_sum_naive({b, c, a});
  const ExactInt backward = k == 0 ? ExactInt(0) : floor_sum_naive({k, a, c});
  IdentityReport r = make_report("lemma4", forward + backward, b * k);
  r.with("a", a).with("b", b).with("c", c).with("K", k).with("sum_b", forward).with("sum_K",
                                                                                     backward);
  return r;
}

}  // namespace denum
