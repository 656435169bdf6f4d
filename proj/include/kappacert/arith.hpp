#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "kappacert/error.hpp"

namespace kappacert {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

namespace arith {

// Overflow-checked 64-bit arithmetic. Wraparound is never silent.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_pow(Int base, Int exponent);

/// A residue class representative in [0, modulus).
struct Residue {
  Int value = 0;
  Int modulus = 1;

  friend bool operator==(const Residue&, const Residue&) = default;
};

struct GcdResult {
  Int g = 0;
  Int x = 0;
  Int y = 0;

  friend bool operator==(const GcdResult&, const GcdResult&) = default;
};

/// g = gcd(|a|, |b|) >= 0 together with Bezout coefficients a*x + b*y = g.
GcdResult ext_gcd(Int a, Int b);

/// The representative of c modulo q in [0, q); negative c is normalized.
Residue residue(Int c, Int q);

/// m = a*q - r with 0 < r < q.
struct MDecomposition {
  Int a = 0;
  Int r = 0;

  friend bool operator==(const MDecomposition&, const MDecomposition&) = default;
};

MDecomposition decompose_m(Int m, Int q);

/// a*m - c*q = 1 with a the least positive such coefficient.
struct Bezout {
  Int a = 0;
  Int c = 0;

  friend bool operator==(const Bezout&, const Bezout&) = default;
};

Bezout bezout_am_cq(Int m, Int q);

bool is_prime(Int n);

struct PrimePower {
  Int prime = 0;
  Int exponent = 0;
};

/// Returns (p, k) with q = p^k, k >= 1, or nullopt if q is not a prime power.
std::optional<PrimePower> as_prime_power(Int q);

}  // namespace arith
}  // namespace kappacert
