#include "kappacert/tango.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kappacert::tango {

using arith::checked_add;
using arith::checked_mul;
using arith::checked_sub;

namespace {

std::string show(const RuledSurfaceClass& c) {
  std::ostringstream os;
  os << "(" << c.t << ", " << c.dprime << ")";
  return os.str();
}

}  // namespace

RaynaudParams validate_params(Int p, Int e, Int l) {
  if (l < 2) fail(ErrorKind::BadL, "l must be at least 2, got " + std::to_string(l));
  if (!arith::is_prime(p)) fail(ErrorKind::NonPrimeP, "p = " + std::to_string(p) + " is not prime");
  if (e < 1) fail(ErrorKind::InvalidInput, "e must be positive, got " + std::to_string(e));
  if (e % p == 0) {
    fail(ErrorKind::GcdViolation, "p = " + std::to_string(p) + " divides e = " + std::to_string(e));
  }
  const Int p_plus_1 = checked_add(p, 1);
  if (e % l != 0 || p_plus_1 % l != 0) {
    fail(ErrorKind::DivisibilityViolation,
         "l = " + std::to_string(l) + " must divide both e = " + std::to_string(e) +
             " and p + 1 = " + std::to_string(p_plus_1));
  }
  const Int pe = checked_mul(p, e);
  if (pe - 3 <= 0) {
    fail(ErrorKind::DegenerateCurve, "pe - 3 = " + std::to_string(pe - 3) + " must be positive");
  }

  RaynaudParams out;
  out.p = p;
  out.e = e;
  out.l = l;
  out.r = p_plus_1 / l;
  out.qS = checked_sub(checked_sub(p, 1), out.r);
  out.degD = checked_mul(e, pe - 3);
  ensure(out.degD % l == 0, "deg D not divisible by l");
  out.degDprime = out.degD / l;
  const Int deg_canonical = checked_mul(pe, pe - 3);
  ensure(deg_canonical % 2 == 0, "deg K_C is odd");
  out.genusC = checked_add(deg_canonical / 2, 1);

  // Both derivations of the relative canonical exponent must agree.
  ensure(out.qS == checked_sub(checked_mul(l - 1, out.r), 2), "q_s != (l-1)r - 2");
  ensure(out.degD == checked_mul(l, out.degDprime), "deg D != l deg D'");
  return out;
}

CurveInvariants curve_invariants(const RaynaudParams& params) {
  const Int pe = checked_mul(params.p, params.e);
  CurveInvariants out;
  out.deg_canonical = checked_mul(pe, pe - 3);
  ensure(out.deg_canonical % 2 == 0, "deg K_C is odd");
  out.genus = out.deg_canonical / 2 + 1;
  out.degD = params.degD;
  out.degDprime = params.degDprime;
  return out;
}

bool check_KC_equals_pD(const RaynaudParams& params) {
  return curve_invariants(params).deg_canonical == checked_mul(params.p, params.degD);
}

RuledSurfaceClass class_T() { return {1, 0}; }
RuledSurfaceClass class_Dprime() { return {0, 1}; }
RuledSurfaceClass class_D(const RaynaudParams& params) { return params.l * class_Dprime(); }
// F ~ T + g^*D
RuledSurfaceClass class_F(const RaynaudParams& params) { return class_T() + class_D(params); }
// G ~ pF - p g^*D
RuledSurfaceClass class_G(const RaynaudParams& params) {
  return params.p * class_F(params) - params.p * class_D(params);
}
RuledSurfaceClass class_M(const RaynaudParams& params) {
  return params.r * class_T() + class_Dprime();
}
// K_{P/C} = -2T - g^*D
RuledSurfaceClass class_K_rel(const RaynaudParams& params) {
  return RuledSurfaceClass{} - 2 * class_T() - class_D(params);
}

Int intersect(const RuledSurfaceClass& a, const RuledSurfaceClass& b, const RaynaudParams& params) {
  const Int tt = checked_mul(checked_mul(a.t, b.t), -params.degD);
  const Int mixed = checked_mul(checked_add(checked_mul(a.t, b.dprime), checked_mul(a.dprime, b.t)),
                                params.degDprime);
  return checked_add(tt, mixed);
}

bool ClassIdentities::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
}

ClassIdentities class_identities(const RaynaudParams& params) {
  ClassIdentities out;
  const auto T = class_T();
  const auto Dp = class_Dprime();
  const auto D = class_D(params);
  const auto F = class_F(params);
  const auto G = class_G(params);
  const auto M = class_M(params);
  const auto K = class_K_rel(params);

  {
    const auto lhs = G + F;
    const auto rhs = params.l * M;
    out.checks.push_back({"branch_divisor", lhs == rhs, "G + F = " + show(lhs) + ", l*M = " + show(rhs)});
  }
  {
    const auto pT = params.p * T;
    out.checks.push_back({"frobenius_section", G == pT, "G = " + show(G) + ", p*T = " + show(pT)});
  }
  {
    const auto lhs = K + (params.l - 1) * M;
    const RuledSurfaceClass rhs{params.qS, -1};
    out.checks.push_back(
        {"relative_canonical", lhs == rhs, "K_P/C + (l-1)M = " + show(lhs) + ", (q_s, -1) = " + show(rhs)});
  }
  {
    // q_s T - D' + pD against q_s F + (p+l) D'
    const auto from_relative = params.qS * T - Dp + params.p * D;
    const auto from_F = params.qS * F + checked_add(params.p, params.l) * Dp;
    const RuledSurfaceClass expected{params.qS, checked_sub(checked_mul(params.p, params.l), 1)};
    out.checks.push_back({"canonical_class", from_relative == from_F && from_F == expected,
                          "q_s T - D' + pD = " + show(from_relative) + ", q_s F + (p+l)D' = " + show(from_F)});
  }
  {
    const Int f2 = intersect(F, F, params);
    out.checks.push_back({"F_squared", f2 == params.degD,
                          "F^2 = " + std::to_string(f2) + ", deg D = " + std::to_string(params.degD)});
  }
  {
    const Int tf = intersect(T, F, params);
    out.checks.push_back({"T_restricted_to_F", tf == 0, "T.F = " + std::to_string(tf)});
  }
  return out;
}

}  // namespace kappacert::tango
