#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <limits>
#include <string>

#include "teleseq/error.hpp"

namespace teleseq {

// All arithmetic in this library is exact. Term values, c-products and
// constructed sequence entries overflow 64-bit ranges easily, so every
// quantity is an arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;

inline Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

// Non-negative remainder of a mod m, for m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// Inverse of a modulo m (m >= 1, gcd(a, m) = 1), by extended Euclid.
inline Int mod_inverse(const Int& a, const Int& m) {
  Int old_r = mod_floor(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return mod_floor(old_s, m);
}

// Quotient a / b that is known to be exact; a failed division here means
// a broken invariant upstream, not bad user input.
inline Int exact_div(const Int& a, const Int& b, const char* context) {
  if (b == 0 || a % b != 0) {
    throw Error("InternalInvariant",
                std::string("inexact division in ") + context);
  }
  return a / b;
}

// The brute-force oracles materialize tables indexed by integer value.
// Values beyond this many table slots are refused rather than letting an
// allocation blow up.
inline constexpr std::size_t kOracleTableCap = std::size_t{1} << 26;

inline std::size_t to_table_index(const Int& n) {
  if (n < 0 || n > Int(kOracleTableCap)) {
    throw Error("OracleCapExceeded",
                "value " + n.str() + " exceeds the brute-force table cap");
  }
  return static_cast<std::size_t>(n);
}

}  // namespace teleseq
