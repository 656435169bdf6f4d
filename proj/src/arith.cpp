#include "kappacert/arith.hpp"

#include <string>
#include <utility>

namespace kappacert {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NonPrimeP: return "NonPrimeP";
    case ErrorKind::GcdViolation: return "GcdViolation";
    case ErrorKind::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorKind::DegenerateCurve: return "DegenerateCurve";
    case ErrorKind::BadL: return "BadL";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

namespace arith {

Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    fail(ErrorKind::Overflow, "integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

Int checked_sub(Int a, Int b) {
  Int out = 0;
  if (__builtin_sub_overflow(a, b, &out)) {
    fail(ErrorKind::Overflow, "integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
  }
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    fail(ErrorKind::Overflow, "integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

Int checked_pow(Int base, Int exponent) {
  if (exponent < 0) fail(ErrorKind::InvalidInput, "negative exponent");
  Int out = 1;
  for (Int i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

GcdResult ext_gcd(Int a, Int b) {
  if (a == 0 && b == 0) fail(ErrorKind::InvalidInput, "ext_gcd(0, 0) is undefined");
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    const Int quot = old_r / r;
    old_r = checked_sub(old_r, checked_mul(quot, r));
    std::swap(old_r, r);
    old_s = checked_sub(old_s, checked_mul(quot, s));
    std::swap(old_s, s);
    old_t = checked_sub(old_t, checked_mul(quot, t));
    std::swap(old_t, t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Residue residue(Int c, Int q) {
  if (q <= 0) fail(ErrorKind::InvalidInput, "residue modulus must be positive, got " + std::to_string(q));
  Int v = c % q;
  if (v < 0) v += q;
  return {v, q};
}

MDecomposition decompose_m(Int m, Int q) {
  if (m < 1) fail(ErrorKind::InvalidInput, "decompose_m needs m >= 1");
  if (q < 2) fail(ErrorKind::InvalidInput, "decompose_m needs q >= 2");
  if (m % q == 0) {
    fail(ErrorKind::DegenerateInput,
         "q = " + std::to_string(q) + " divides m = " + std::to_string(m) + "; no decomposition with 0 < r < q");
  }
  const Int a = m / q + 1;
  const Int r = checked_sub(checked_mul(a, q), m);
  ensure(r > 0 && r < q, "decompose_m produced r outside (0, q)");
  return {a, r};
}

Bezout bezout_am_cq(Int m, Int q) {
  if (m < 1) fail(ErrorKind::InvalidInput, "bezout_am_cq needs m >= 1");
  if (q < 2) fail(ErrorKind::InvalidInput, "bezout_am_cq needs q >= 2");
  const GcdResult g = ext_gcd(m, q);
  if (g.g != 1) {
    fail(ErrorKind::InvalidInput, "gcd(" + std::to_string(m) + ", " + std::to_string(q) + ") != 1");
  }
  Int a = residue(g.x, q).value;
  if (a == 0) a = q;  // only reachable when q | 1, excluded above
  const Int am = checked_mul(a, m);
  ensure((am - 1) % q == 0, "bezout coefficient does not invert m");
  const Int c = (am - 1) / q;
  ensure(checked_sub(am, checked_mul(c, q)) == 1, "a*m - c*q != 1");
  return {a, c};
}

bool is_prime(Int n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> as_prime_power(Int q) {
  if (q < 2) return std::nullopt;
  Int p = 0;
  for (Int d = 2; d <= q / d; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{q, 1};
  Int k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{p, k};
}

}  // namespace arith
}  // namespace kappacert
