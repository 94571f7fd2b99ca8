#pragma once

// The `denum` command line. Exit status: 0 success, 1 invalid input,
// 2 an internal cross-check failed (oracle mismatch, identity failure,
// broken invariant).

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "denum/denumerant3.hpp"
#include "denum/floor_sum.hpp"
#include "denum/linear2.hpp"
#include "denum/reduction.hpp"
#include "denum/render.hpp"
#include "denum/residues.hpp"
#include "denum/sweeps.hpp"

namespace denum::cli {

enum ExitStatus : int { kOk = 0, kInvalidInput = 1, kCheckFailed = 2 };

inline std::uint64_t oracle_budget_from_env() {
  const char* raw = std::getenv("DENUM_ORACLE_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultOracleBudget;
  const auto parsed = parse_exact(raw);
  if (!parsed || *parsed < 1 || *parsed > std::numeric_limits<std::uint64_t>::max())
    throw invalid_argument("DENUM_ORACLE_BUDGET must be a positive integer");
  return static_cast<std::uint64_t>(*parsed);
}

namespace detail {

struct Options {
  bool json = false;
  bool oracle = false;
  std::int64_t limit = 50;
  std::int64_t n_max = 400;
  std::uint64_t seed = 1;
  std::int64_t samples = 1000;
  std::vector<std::string> args;
  std::string identity;
  std::string trace_kind;
};

inline std::vector<ExactInt> parse_args(const std::vector<std::string>& raw, std::size_t arity,
                                        const char* usage) {
  if (raw.size() != arity)
    throw invalid_argument(std::string("expected ") + std::to_string(arity) +
                           " integer arguments: " + usage);
  std::vector<ExactInt> out;
  for (const auto& s : raw) {
    auto v = parse_exact(s);
    if (!v) throw invalid_argument("not an integer: '" + s + "'");
    out.push_back(std::move(*v));
  }
  return out;
}

// Picks the cheapest oracle that fits the budget.
inline std::pair<std::string, ExactInt> count3_oracle(const Instance3& inst,
                                                      std::uint64_t budget) {
  if (inst.n <= kMaxDpLength && inst.n < budget)
    return {"dp", count3_oracle_dp(inst.a, inst.b, inst.c, inst.n)};
  return {"enum", count3_oracle_enum(inst.a, inst.b, inst.c, inst.n, budget)};
}

inline int cmd_count3(const Options& o, std::ostream& out) {
  const auto v = parse_args(o.args, 4, "count3 a b c n");
  const CountResult r = count3(v[0], v[1], v[2], v[3]);
  std::optional<std::pair<std::string, ExactInt>> check;
  if (o.oracle) check = count3_oracle(r.instance, oracle_budget_from_env());
  const bool agree = !check || check->second == r.count;
  if (o.json) {
    Json j = to_json(r);
    if (check) {
      j["oracle"] = Json{{"method", check->first},
                         {"count", to_string(check->second)},
                         {"agrees", agree}};
    }
    out << j.dump() << "\n";
  } else {
    out << "N(" << v[0] << ", " << v[1] << ", " << v[2] << "; " << v[3] << ") = " << r.count
        << "\n";
    if (check)
      out << "oracle (" << check->first << "): " << check->second
          << (agree ? " [agrees]" : " [MISMATCH]") << "\n";
  }
  return agree ? kOk : kCheckFailed;
}

inline int cmd_count2(const Options& o, std::ostream& out) {
  const auto v = parse_args(o.args, 3, "count2 a b n");
  const ExactInt count = count2(v[0], v[1], v[2]);
  std::optional<ExactInt> check;
  if (o.oracle) check = count2_oracle_enum(v[0], v[1], v[2], oracle_budget_from_env());
  const bool agree = !check || *check == count;
  if (o.json) {
    Json j{{"a", to_string(v[0])}, {"b", to_string(v[1])}, {"n", to_string(v[2])},
           {"count", to_string(count)}};
    if (check) j["oracle"] = Json{{"count", to_string(*check)}, {"agrees", agree}};
    out << j.dump() << "\n";
  } else {
    out << "N(" << v[0] << ", " << v[1] << "; " << v[2] << ") = " << count << "\n";
    if (check) out << "oracle (enum): " << *check << (agree ? " [agrees]" : " [MISMATCH]") << "\n";
  }
  return agree ? kOk : kCheckFailed;
}

inline int cmd_floorsum(const Options& o, std::ostream& out) {
  const auto v = parse_args(o.args, 3, "floorsum b c a");
  const FloorSumQuery q{v[0], v[1], v[2]};
  const ExactInt value = floor_sum_fast(q);
  std::optional<ExactInt> naive, generic;
  if (o.oracle) {
    if (q.b > oracle_budget_from_env())
      throw resource_limit("floorsum oracle: b exceeds DENUM_ORACLE_BUDGET");
    naive = floor_sum_naive(q);
    generic = floor_sum_generic(q);
  }
  const bool agree = !naive || (*naive == value && *generic == value);
  if (o.json) {
    Json j{{"query", to_json(q)}, {"value", to_string(value)}};
    if (naive)
      j["oracle"] = Json{{"naive", to_string(*naive)},
                         {"generic", to_string(*generic)},
                         {"agrees", agree}};
    out << j.dump() << "\n";
  } else {
    out << "sum_{i=1}^{" << q.b << "} floor(" << q.c << "*i/" << q.a << ") = " << value << "\n";
    if (naive)
      out << "oracle naive: " << *naive << ", generic: " << *generic
          << (agree ? " [agrees]" : " [MISMATCH]") << "\n";
  }
  return agree ? kOk : kCheckFailed;
}

inline void print_witness(const ReductionWitness& w, std::ostream& out) {
  out << "gcd(a,b,c) = " << w.g << "\n"
      << "g1, g2, g3 = " << w.g1 << ", " << w.g2 << ", " << w.g3 << "\n"
      << "n1, n2, n3 = " << w.n1 << ", " << w.n2 << ", " << w.n3 << "\n"
      << "reduced: " << w.reduced.a << "x + " << w.reduced.b << "y + " << w.reduced.c
      << "z = " << w.reduced.n << (w.n_nonneg ? "" : "  (negative: no solutions)") << "\n";
}

inline int cmd_reduce(const Options& o, std::ostream& out) {
  const auto v = parse_args(o.args, 4, "reduce a b c n");
  const Instance3 inst{v[0], v[1], v[2], v[3]};
  const auto w = reduce(inst);
  if (o.json) {
    out << (w ? to_json(*w) : Json{{"original", to_json(inst)}, {"no_solution", true}}).dump()
        << "\n";
  } else if (!w) {
    out << "gcd(a,b,c) = " << gcd(inst.a, inst.b, inst.c) << " does not divide n: no solutions\n";
  } else {
    print_witness(*w, out);
  }
  return kOk;
}

inline int cmd_legendre(const Options& o, std::ostream& out) {
  const auto v = parse_args(o.args, 2, "legendre q p");
  const ExactInt& q = v[0];
  const ExactInt& p = v[1];
  const PrimePair pair(p, q);
  const ExactInt t = eisenstein_t(pair);
  const int symbol = legendre(q, p);
  std::optional<int> euler;
  if (o.oracle) euler = legendre_euler(q, p);
  const bool agree = !euler || *euler == symbol;
  if (o.json) {
    Json j{{"q", to_string(q)}, {"p", to_string(p)}, {"t", to_string(t)},
           {"symbol", std::to_string(symbol)}};
    if (euler) j["oracle"] = Json{{"euler", std::to_string(*euler)}, {"agrees", agree}};
    out << j.dump() << "\n";
  } else {
    out << "(" << q << "/" << p << ") = " << (symbol > 0 ? "+1" : "-1") << "  (t = " << t
        << ")\n";
    if (euler)
      out << "oracle (Euler): " << (*euler > 0 ? "+1" : "-1")
          << (agree ? " [agrees]" : " [MISMATCH]") << "\n";
  }
  return agree ? kOk : kCheckFailed;
}

inline int cmd_frobenius(const Options& o, std::ostream& out) {
  const auto v = parse_args(o.args, 2, "frobenius a b");
  const ExactInt f = frobenius2(v[0], v[1]);
  const auto [lo, hi] = unique_window(v[0], v[1]);
  std::optional<ExactInt> largest;
  if (o.oracle) {
    const auto gaps = nonrepresentable_set(v[0], v[1]);
    largest = gaps.empty() ? ExactInt(-1) : gaps.back();
  }
  const bool agree = !largest || *largest == f;
  if (o.json) {
    Json j{{"a", to_string(v[0])}, {"b", to_string(v[1])}, {"frobenius", to_string(f)},
           {"window", Json{{"lo", to_string(lo)}, {"hi", to_string(hi)}}}};
    if (largest) j["oracle"] = Json{{"largest_gap", to_string(*largest)}, {"agrees", agree}};
    out << j.dump() << "\n";
  } else {
    out << "frobenius(" << v[0] << ", " << v[1] << ") = " << f << "\n"
        << "unique-solution window: [" << lo << ", " << hi << ")\n";
    if (largest)
      out << "oracle largest gap: " << *largest << (agree ? " [agrees]" : " [MISMATCH]") << "\n";
  }
  return agree ? kOk : kCheckFailed;
}

inline int cmd_sylvester(const Options& o, std::ostream& out) {
  const auto v = parse_args(o.args, 2, "sylvester p q");
  const ExactInt count = nonrepresentable_count(v[0], v[1]);
  std::optional<std::vector<ExactInt>> gaps;
  if (o.oracle) gaps = nonrepresentable_set(v[0], v[1]);
  const bool agree = !gaps || ExactInt(gaps->size()) == count;
  if (o.json) {
    Json j{{"p", to_string(v[0])}, {"q", to_string(v[1])}, {"count", to_string(count)}};
    if (gaps) {
      Json set = Json::array();
      for (const auto& g : *gaps) set.push_back(to_string(g));
      j["oracle"] = Json{{"set", std::move(set)}, {"agrees", agree}};
    }
    out << j.dump() << "\n";
  } else {
    out << "non-representable count(" << v[0] << ", " << v[1] << ") = " << count << "\n";
    if (gaps) {
      out << "oracle set:";
      for (const auto& g : *gaps) out << " " << g;
      out << (agree ? " [agrees]" : " [MISMATCH]") << "\n";
    }
  }
  return agree ? kOk : kCheckFailed;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  SweepOptions opt;
  opt.limit = o.limit;
  opt.n_max = o.n_max;
  opt.seed = o.seed;
  opt.budget = oracle_budget_from_env();
  if (opt.limit < 0 || opt.n_max < 0) throw invalid_argument("--limit and --nmax must be >= 0");
  const SweepResult r = run_sweep(o.identity, opt);
  if (o.json) {
    out << sweep_json(r.reports, r.failures).dump() << "\n";
  } else {
    for (const auto& rep : r.reports)
      if (!rep.holds) out << "FAIL " << render_json(rep) << "\n";
    out << r.identity << ": " << r.checked << " cases, " << r.failures << " failures\n";
  }
  return r.failures == 0 ? kOk : kCheckFailed;
}

inline int cmd_trace(const Options& o, std::ostream& out) {
  if (o.trace_kind == "floorsum") {
    const auto v = parse_args(o.args, 3, "trace floorsum b c a");
    const FloorSumTrace t = floor_sum_trace({v[0], v[1], v[2]});
    out << (o.json ? to_json(t).dump() + "\n" : render_trace(t));
    return kOk;
  }
  if (o.trace_kind == "count3") {
    const auto v = parse_args(o.args, 4, "trace count3 a b c n");
    const CountResult r = count3(v[0], v[1], v[2], v[3]);
    std::vector<FloorSumTrace> traces;
    if (r.symbols) {
      const Instance3& red = r.witness->reduced;
      for (const auto& q : r.symbols->queries(red.a, red.b, red.c))
        traces.push_back(floor_sum_trace(q));
    }
    if (o.json) {
      Json j = to_json(r);
      Json ts = Json::array();
      for (const auto& t : traces) ts.push_back(to_json(t));
      j["traces"] = std::move(ts);
      out << j.dump() << "\n";
      return kOk;
    }
    if (!r.witness) {
      out << "gcd(a,b,c) does not divide n: no solutions\ncount = 0\n";
      return kOk;
    }
    print_witness(*r.witness, out);
    if (r.symbols) {
      const TheoremSymbols& s = *r.symbols;
      const Instance3& red = r.witness->reduced;
      out << "b1' c1' = " << s.b1p << " " << s.c1p << "\n"
          << "c2' a2' = " << s.c2p << " " << s.a2p << "\n"
          << "a3' b3' = " << s.a3p << " " << s.b3p << "\n"
          << "N1 = " << s.n1 << ", N1/(2abc) - 2 = "
          << s.n1 / (2 * red.a * red.b * red.c) - 2 << "\n";
      for (const auto& t : traces) {
        out << "sum_{i=1}^{" << t.query.b << "} floor(" << t.query.c << "i/" << t.query.a
            << ")\n"
            << render_trace(t);
      }
    }
    out << "count = " << r.count << "\n";
    return kOk;
  }
  throw invalid_argument("trace: expected 'floorsum' or 'count3'");
}

template <class Fn>
double time_us(Fn&& fn, int repeats = 1) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < repeats; ++i) fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::micro>(stop - start).count() / repeats;
}

inline int cmd_bench(const Options& o, std::ostream& out) {
  const ExactInt a = 742, b = 803, c = 663;
  Json rows = Json::array();
  bool agree = true;
  if (!o.json) out << std::left << std::setw(12) << "n" << std::setw(14) << "count"
                   << std::setw(14) << "fast_us" << "dp_us\n";
  for (std::int64_t n = 1000; n <= 10'000'000; n *= 10) {
    ExactInt fast, dp;
    const double fast_us = time_us([&] { fast = count3(a, b, c, n).count; }, 20);
    const double dp_us = time_us([&] { dp = count3_oracle_dp(a, b, c, n); });
    agree = agree && fast == dp;
    if (o.json) {
      rows.push_back(Json{{"n", std::to_string(n)}, {"count", to_string(fast)},
                          {"fast_us", fast_us}, {"dp_us", dp_us}});
    } else {
      out << std::setw(12) << n << std::setw(14) << fast << std::setw(14) << std::fixed
          << std::setprecision(1) << fast_us << dp_us << (fast == dp ? "" : "  MISMATCH")
          << "\n";
    }
  }

  // Random pairwise coprime 60-bit triples with n below 2^70.
  std::mt19937_64 rng(o.seed);
  const std::uint64_t top_bit = std::uint64_t{1} << 59;
  std::vector<double> times;
  std::size_t worst_steps = 0, worst_bound = 0;
  const std::int64_t samples = std::max<std::int64_t>(o.samples, 1);
  for (std::int64_t i = 0; i < samples; ++i) {
    ExactInt x, y, z;
    do {
      x = (rng() >> 5) | top_bit;
      y = (rng() >> 5) | top_bit;
      z = (rng() >> 5) | top_bit;
    } while (!pairwise_coprime(x, y, z));
    const ExactInt n = (ExactInt(rng() & 63) << 64) | ExactInt(rng());
    CountResult r;
    times.push_back(time_us([&] { r = count3(x, y, z, n); }));
    const Instance3& red = r.witness->reduced;
    if (r.symbols) {
      const auto qs = r.symbols->queries(red.a, red.b, red.c);
      for (const auto& q : qs) {
        const std::size_t steps = floor_sum_trace(q).reciprocity_steps();
        if (steps > worst_steps) {
          worst_steps = steps;
          worst_bound = reciprocity_step_bound(q.a, q.c);
        }
      }
    }
  }
  std::sort(times.begin(), times.end());
  const double median = times[times.size() / 2];
  if (o.json) {
    out << Json{{"scaling", std::move(rows)},
                {"random", Json{{"samples", std::to_string(samples)},
                                {"median_us", median},
                                {"max_us", times.back()},
                                {"max_recip_steps", std::to_string(worst_steps)},
                                {"bound_at_max", std::to_string(worst_bound)}}}}
               .dump()
        << "\n";
  } else {
    out << "random 60-bit triples: " << samples << " samples, median " << std::fixed
        << std::setprecision(1) << median << " us, max " << times.back()
        << " us, max reciprocity steps " << worst_steps << " (bound " << worst_bound << ")\n";
  }
  return agree ? kOk : kCheckFailed;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Exact counts for ax+by+cz=n and related floor-sum identities", "denum"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool with_oracle) {
    sub->add_flag("--json", o.json, "machine-readable output");
    if (with_oracle) sub->add_flag("--oracle", o.oracle, "cross-check against an oracle");
  };
  auto positional = [&](CLI::App* sub, const char* help) {
    sub->add_option("args", o.args, help)->allow_extra_args();
  };

  auto* count3_cmd = app.add_subcommand("count3", "solutions of ax+by+cz=n");
  positional(count3_cmd, "a b c n");
  add_common(count3_cmd, true);
  auto* count2_cmd = app.add_subcommand("count2", "solutions of ax+by=n");
  positional(count2_cmd, "a b n");
  add_common(count2_cmd, true);
  auto* floorsum_cmd = app.add_subcommand("floorsum", "sum_{i=1}^{b} floor(ic/a)");
  positional(floorsum_cmd, "b c a");
  add_common(floorsum_cmd, true);
  auto* reduce_cmd = app.add_subcommand("reduce", "pairwise coprime reduction witness");
  positional(reduce_cmd, "a b c n");
  add_common(reduce_cmd, false);
  auto* legendre_cmd = app.add_subcommand("legendre", "Legendre symbol (q/p)");
  positional(legendre_cmd, "q p");
  add_common(legendre_cmd, true);
  auto* frobenius_cmd = app.add_subcommand("frobenius", "Frobenius number of {a, b}");
  positional(frobenius_cmd, "a b");
  add_common(frobenius_cmd, true);
  auto* sylvester_cmd = app.add_subcommand("sylvester", "count of non-representable integers");
  positional(sylvester_cmd, "p q");
  add_common(sylvester_cmd, true);

  auto* verify_cmd = app.add_subcommand("verify", "identity sweep");
  verify_cmd->add_option("identity", o.identity, "identity to sweep")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(sweep_names().begin(), sweep_names().end())));
  verify_cmd->add_option("--limit", o.limit, "sweep bound (or sample count for floorsum)");
  verify_cmd->add_option("--nmax", o.n_max, "largest n for the oracle sweep");
  verify_cmd->add_option("--seed", o.seed, "seed for randomized sweeps");
  add_common(verify_cmd, false);

  auto* trace_cmd = app.add_subcommand("trace", "step-by-step derivation");
  trace_cmd->add_option("kind", o.trace_kind, "floorsum | count3")->required();
  positional(trace_cmd, "integers");
  add_common(trace_cmd, false);

  auto* bench_cmd = app.add_subcommand("bench", "timing: closed form vs linear-time oracle");
  bench_cmd->add_option("--seed", o.seed, "seed for random instances");
  bench_cmd->add_option("--limit", o.samples, "number of random 60-bit instances");
  add_common(bench_cmd, false);

  // CLI11 consumes the argument vector back to front.
  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (count3_cmd->parsed()) return detail::cmd_count3(o, out);
    if (count2_cmd->parsed()) return detail::cmd_count2(o, out);
    if (floorsum_cmd->parsed()) return detail::cmd_floorsum(o, out);
    if (reduce_cmd->parsed()) return detail::cmd_reduce(o, out);
    if (legendre_cmd->parsed()) return detail::cmd_legendre(o, out);
    if (frobenius_cmd->parsed()) return detail::cmd_frobenius(o, out);
    if (sylvester_cmd->parsed()) return detail::cmd_sylvester(o, out);
    if (verify_cmd->parsed()) return detail::cmd_verify(o, out);
    if (trace_cmd->parsed()) return detail::cmd_trace(o, out);
    if (bench_cmd->parsed()) return detail::cmd_bench(o, out);
  } catch (const invariant_violation& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const resource_limit& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace denum::cli
