// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria (capped at 125).

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "denum/denumerant3.hpp"
#include "denum/floor_sum.hpp"
#include "denum/linear2.hpp"
#include "denum/reduction.hpp"
#include "denum/residues.hpp"
#include "denum/sweeps.hpp"

namespace {

using denum::ExactInt;

struct Verdict {
  bool pass;
  std::string detail;
};

template <class Fn>
double seconds(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <class Fn>
double median_seconds(Fn&& fn, int runs) {
  std::vector<double> t;
  for (int i = 0; i < runs; ++i) t.push_back(seconds(fn));
  std::nth_element(t.begin(), t.begin() + runs / 2, t.end());
  return t[runs / 2];
}

std::string ms(double s) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed << s * 1e3 << " ms";
  return o.str();
}

std::string sweep_line(const denum::SweepResult& r) {
  return r.identity + " " + std::to_string(r.checked) + " cases, " +
         std::to_string(r.failures) + " failures";
}

denum::SweepResult sweep(const char* name, std::int64_t limit, std::int64_t n_max = 400) {
  denum::SweepOptions opt;
  opt.limit = limit;
  opt.n_max = n_max;
  return denum::run_sweep(name, opt);
}

Verdict c1_floor_sums() {
  struct Case {
    denum::FloorSumQuery q;
    int expected;
  };
  const Case cases[] = {{{129, 281, 742}, 3111}, {{539, 621, 803}, 112277}, {{335, 602, 663}, 50934}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    ExactInt fast;
    const double t = median_seconds([&] { fast = denum::floor_sum_fast(c.q); }, 11);
    const ExactInt naive = denum::floor_sum_naive(c.q);
    ok = ok && fast == c.expected && naive == c.expected && t < 1e-3;
    detail += denum::to_string(fast) + " (" + ms(t) + ") ";
  }
  return {ok, detail + "naive agrees"};
}

Verdict c2_example_count() {
  const ExactInt closed = denum::count3_closed(742, 803, 663, 128598).count;
  ExactInt dp;
  const double t = seconds([&] { dp = denum::count3_oracle_dp(742, 803, 663, 128598); });
  return {closed == 22 && dp == 22 && t < 1.0,
          "closed " + denum::to_string(closed) + ", dp " + denum::to_string(dp) + " in " + ms(t)};
}

Verdict c3_reduction() {
  const denum::Instance3 inst{4452, 8030, 9945, 3857942};
  ExactInt dp;
  const double t = seconds([&] { dp = denum::count3_oracle_dp(inst.a, inst.b, inst.c, inst.n); });
  const denum::CountResult r = denum::count3(inst.a, inst.b, inst.c, inst.n);
  const ExactInt reduced_n = r.witness ? r.witness->reduced.n : ExactInt(-1);
  // The published reduced right-hand side 128598 has a different count.
  const ExactInt published = denum::count3_oracle_dp(742, 803, 663, 128598);
  return {r.count == dp,
          "pipeline " + denum::to_string(r.count) + " = dp " + denum::to_string(dp) + " (" +
              ms(t) + "); reduced n " + denum::to_string(reduced_n) + "; 128598 gives " +
              denum::to_string(published) + ", not the original count"};
}

Verdict c4_trace() {
  const std::string full =
      "RECIP K=48 const=6192\n"
      "DIV q=2 const=2352\n"
      "RECIP K=30 const=1440\n"
      "DIV q=1 const=465\n"
      "RECIP K=16 const=480\n"
      "DIV q=1 const=136\n"
      "RECIP K=12 const=192\n"
      "DIV q=1 const=78\n"
      "RECIP K=3 const=36\n"
      "DIV q=3 const=18\n"
      "RECIP K=1 const=3\n";
  struct Sub {
    denum::FloorSumQuery q;
    std::size_t skip_lines;
    int value;
  };
  const Sub subs[] = {{{129, 281, 742}, 0, 3111}, {{48, 180, 281}, 2, 729}, {{30, 101, 180}, 4, 246},
                      {{16, 79, 101}, 6, 98},     {{12, 22, 79}, 8, 16},    {{3, 13, 22}, 10, 2}};
  bool ok = true;
  for (const auto& s : subs) {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < s.skip_lines; ++i) pos = full.find('\n', pos) + 1;
    const std::string expected = full.substr(pos) + "BASE value=" + std::to_string(s.value) + "\n";
    ok = ok && denum::render_trace(denum::floor_sum_trace(s.q)) == expected;
  }
  // Paired constants: reciprocity constant less the following division constant.
  const denum::FloorSumTrace t = denum::floor_sum_trace({129, 281, 742});
  std::vector<ExactInt> combined;
  for (std::size_t i = 2; i + 1 < t.steps.size(); i += 2)
    combined.push_back(t.steps[i].constant - t.steps[i + 1].constant);
  ok = ok && combined == std::vector<ExactInt>{975, 344, 114, 18};
  ok = ok && t.terminal_value == 1 && t.value == 3111;
  return {ok, "6 chains byte-exact; paired constants 975 344 114 18; base 2"};
}

Verdict c5_oracle_sweep() {
  const denum::SweepResult r = sweep("oracle", 25, 400);
  return {r.failures == 0 && r.checked > 0, sweep_line(r)};
}

Verdict c6_lemma4() {
  const denum::SweepResult r = sweep("lemma4", 300);
  return {r.failures == 0 && r.checked > 0, sweep_line(r)};
}

Verdict c7_gauss() {
  const denum::SweepResult r = sweep("gauss", 200);
  const auto a = denum::gauss_identity(denum::PrimePair(3, 5));
  const auto b = denum::gauss_identity(denum::PrimePair(3, 7));
  const bool anchors = a.holds && a.lhs == 2 && b.holds && b.lhs == 3;
  return {r.failures == 0 && anchors, sweep_line(r) + "; (3,5) -> 2, (3,7) -> 3"};
}

Verdict c8_sylvester() {
  const denum::SweepResult r = sweep("sylvester", 60);
  const bool anchors = denum::nonrepresentable_set(3, 5).size() == 4 &&
                       denum::nonrepresentable_set(3, 7).size() == 6;
  return {r.failures == 0 && anchors, sweep_line(r) + "; (3,5) -> 4, (3,7) -> 6"};
}

Verdict c9_equivalence() {
  const denum::SweepResult r = sweep("equivalence", 200);
  const auto a = denum::sylvester_gauss_equivalence(denum::PrimePair(3, 5));
  const bool anchor = a.holds && *a.find("N0") == 4 && a.lhs == 8;
  return {r.failures == 0 && anchor, sweep_line(r) + "; (3,5): 4 + 4 = 8"};
}

Verdict c10_legendre() {
  const denum::SweepResult r = sweep("legendre", 500);
  const bool anchors = denum::legendre(3, 7) == -1 && denum::legendre(5, 11) == 1;
  return {r.failures == 0 && anchors, sweep_line(r) + "; (3/7) = -1, (5/11) = +1"};
}

Verdict c11_npq() {
  const denum::SweepResult l8 = sweep("lemma8", 200);
  const denum::SweepResult l5 = sweep("lemma5", 200);
  const bool anchors = denum::npq_count(3, 5) == 3 && denum::npq_count(5, 3) == 4 &&
                       denum::count3_oracle_enum(3, 5, 1, 5) == 3 &&
                       denum::count3_oracle_enum(5, 3, 1, 6) == 4;
  return {l8.failures == 0 && l5.failures == 0 && anchors,
          sweep_line(l8) + "; " + sweep_line(l5) + "; N(3,5) = 3, N(5,3) = 4"};
}

Verdict c12_byproduct() {
  const denum::SweepResult r = sweep("byproduct", 300);
  const auto a = denum::byproduct_sum(denum::PrimePair(23, 739));
  return {r.failures == 0 && a.holds && a.lhs == 176, sweep_line(r) + "; (23,739) -> 176"};
}

Verdict c13_parity() {
  const denum::SweepResult r = sweep("parity", 100);
  const auto a = denum::parity_theorem(denum::PrimePair(3, 5));
  const auto b = denum::parity_theorem(denum::PrimePair(5, 3));
  const bool anchors = a.holds && *a.find("count") == 10 && *a.find("formula") == 158 &&
                       b.holds && *b.find("count") == 9 && *b.find("formula") == 135;
  std::string first;
  for (const auto& rep : r.reports)
    if (!rep.holds) {
      first = "; first counterexample (" + denum::to_string(*rep.find("p")) + "," +
              denum::to_string(*rep.find("q")) + "): count " + denum::to_string(*rep.find("count")) +
              ", formula " + denum::to_string(*rep.find("formula"));
      break;
    }
  return {r.failures == 0 && anchors,
          sweep_line(r) + "; anchors " + (anchors ? "hold" : "fail") + first};
}

Verdict c14_window() {
  const denum::SweepResult r = sweep("window", 20);
  return {r.failures == 0 && denum::frobenius2(3, 5) == 7, sweep_line(r) + "; frobenius(3,5) = 7"};
}

Verdict c15_performance() {
  std::mt19937_64 rng(2024);
  const std::uint64_t mask = (std::uint64_t{1} << 60) - 1;
  auto draw = [&] { return ExactInt((rng() & mask) | (std::uint64_t{1} << 59)); };
  std::vector<double> times;
  std::size_t worst_steps = 0, worst_bound = 0;
  bool steps_ok = true;
  for (int i = 0; i < 1000; ++i) {
    ExactInt a, b, c;
    do {
      a = draw();
      b = draw();
      c = draw();
    } while (!denum::pairwise_coprime(a, b, c));
    const ExactInt n = (ExactInt(rng()) << 6) ^ ExactInt(rng() & 63);  // below 2^70
    denum::CountResult r;
    times.push_back(seconds([&] { r = denum::count3(a, b, c, n); }));
    const auto& red = r.witness->reduced;
    for (const auto& q : r.symbols->queries(red.a, red.b, red.c)) {
      const denum::FloorSumTrace t = denum::floor_sum_trace(q);
      const std::size_t bound = denum::reciprocity_step_bound(q.a, q.c);
      steps_ok = steps_ok && t.reciprocity_steps() <= bound && t.value == denum::floor_sum_generic(q);
      if (t.reciprocity_steps() > worst_steps) {
        worst_steps = t.reciprocity_steps();
        worst_bound = bound;
      }
    }
    if (i % 10 == 0) {
      // Permutation changes every symbol but not the count.
      steps_ok = steps_ok && denum::count3(c, a, b, n).count == r.count;
    }
  }
  std::nth_element(times.begin(), times.begin() + 500, times.end());
  const double median = times[500];
  // Linear-time oracle at small n, for contrast.
  std::string table;
  for (std::int64_t n : {10'000, 1'000'000, 10'000'000}) {
    ExactInt dp, fast;
    const double td = seconds([&] { dp = denum::count3_oracle_dp(742, 803, 663, n); });
    const double tf = median_seconds([&] { fast = denum::count3(742, 803, 663, n).count; }, 11);
    steps_ok = steps_ok && dp == fast;
    table += " n=" + std::to_string(n) + " fast " + ms(tf) + " dp " + ms(td) + ";";
  }
  return {steps_ok && median < 1e-3,
          "median " + ms(median) + ", max steps " + std::to_string(worst_steps) + " (bound " +
              std::to_string(worst_bound) + ");" + table};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"floor sums of the worked example", c1_floor_sums},
      {"worked example count 22 vs dp", c2_example_count},
      {"reduction adjudication", c3_reduction},
      {"trace fidelity", c4_trace},
      {"closed form = enum = dp sweep", c5_oracle_sweep},
      {"reciprocity identity, a <= 300", c6_lemma4},
      {"Gauss identity, primes < 200", c7_gauss},
      {"Sylvester count, 2 <= p < q <= 60", c8_sylvester},
      {"Gauss-Sylvester equivalence, primes < 200", c9_equivalence},
      {"Legendre vs Euler, primes < 500", c10_legendre},
      {"N_pq counts and (p+1)/2 relation", c11_npq},
      {"by-product sum", c12_byproduct},
      {"parity statement, primes < 100", c13_parity},
      {"two-variable window and Frobenius", c14_window},
      {"performance on 60-bit inputs", c15_performance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": "
              << v.detail << std::endl;
  }
  return std::min(failed, 125);
}
