#pragma once

// Exact integer primitives shared by the rest of the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "denum/errors.hpp"

namespace denum {

using ExactInt = boost::multiprecision::cpp_int;

struct Bezout {
  ExactInt g;
  ExactInt x;
  ExactInt y;
};

inline std::string to_string(const ExactInt& v) { return v.str(); }

// Parses an optionally signed decimal literal. Rejects anything else,
// including empty strings, whitespace, and exponents.
inline std::optional<ExactInt> parse_exact(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) return std::nullopt;
  ExactInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch < '0' || ch > '9') return std::nullopt;
    value *= 10;
    value += ch - '0';
  }
  return negative ? ExactInt(-value) : value;
}

inline ExactInt gcd(ExactInt a, ExactInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

inline ExactInt gcd(const ExactInt& a, const ExactInt& b, const ExactInt& c) {
  return gcd(gcd(a, b), c);
}

// Remainder in [0, m) for any sign of v.
inline ExactInt floor_mod(const ExactInt& v, const ExactInt& m) {
  if (m < 1) throw invalid_argument("floor_mod: modulus must be >= 1");
  ExactInt r = v % m;  // truncated; carries the sign of v
  if (r < 0) r += m;
  return r;
}

// Floor division for a positive divisor.
inline ExactInt floor_div(const ExactInt& v, const ExactInt& m) {
  if (m < 1) throw invalid_argument("floor_div: divisor must be >= 1");
  ExactInt q = v / m;
  if (q * m > v) --q;
  return q;
}

// Iterative extended Euclid. For a, b >= 0 not both zero, returns g > 0 and
// (x, y) with a*x + b*y = g.
inline Bezout egcd(const ExactInt& a, const ExactInt& b) {
  if (a < 0 || b < 0) throw invalid_argument("egcd: arguments must be non-negative");
  if (a == 0 && b == 0) throw invalid_argument("egcd: gcd(0, 0) is undefined");
  ExactInt old_r = a, r = b;
  ExactInt old_s = 1, s = 0;
  ExactInt old_t = 0, t = 1;
  while (r != 0) {
    ExactInt q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  return {old_r, old_s, old_t};
}

// Inverse of x modulo m in [0, m). The inverse modulo 1 is 0.
inline ExactInt mod_inverse(const ExactInt& x, const ExactInt& m) {
  if (m < 1) throw invalid_argument("mod_inverse: modulus must be >= 1");
  if (m == 1) return 0;
  const ExactInt reduced = floor_mod(x, m);
  const Bezout bz = egcd(reduced, m);
  if (bz.g != 1) {
    throw not_invertible("mod_inverse: " + to_string(x) + " is not invertible modulo " +
                         to_string(m));
  }
  return floor_mod(bz.x, m);
}

// Residue of v modulo m taken in [1, m]: a zero residue maps to m.
inline ExactInt residue_one_based(const ExactInt& v, const ExactInt& m) {
  if (m < 1) throw invalid_argument("residue_one_based: modulus must be >= 1");
  ExactInt r = floor_mod(v, m);
  return r == 0 ? m : r;
}

// Narrowing that fails loudly instead of wrapping.
inline std::int64_t to_int64(const ExactInt& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw resource_limit(std::string(what) + ": value does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

inline std::uint64_t to_uint64(const ExactInt& v, const char* what) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    throw resource_limit(std::string(what) + ": value does not fit in 64 unsigned bits");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace denum
