#pragma once

#include <string>
#include <vector>

#include "kappacert/arith.hpp"

namespace kappacert::tango {

/// Validated parameters of the Tango-Raynaud curve and the cyclic l-cover
/// built over it.
///
/// The curve is y^{pe} - y = z^{pe-1} of degree pe, D = e(pe-3)*(inf) is the
/// divisor with K_C = pD, and D' = D/l. The relative canonical class of the
/// cover is (q_s) T - D' with q_s = p - 1 - r, r = (p+1)/l.
struct RaynaudParams {
  Int p = 0;
  Int e = 0;
  Int l = 0;
  Int r = 0;
  Int qS = 0;
  Int degD = 0;
  Int degDprime = 0;
  Int genusC = 0;

  friend bool operator==(const RaynaudParams&, const RaynaudParams&) = default;
};

/// Throws Error with kind BadL, NonPrimeP, InvalidInput, GcdViolation,
/// DivisibilityViolation or DegenerateCurve.
RaynaudParams validate_params(Int p, Int e, Int l);

struct CurveInvariants {
  Int deg_canonical = 0;
  Int genus = 0;
  Int degD = 0;
  Int degDprime = 0;

  friend bool operator==(const CurveInvariants&, const CurveInvariants&) = default;
};

CurveInvariants curve_invariants(const RaynaudParams& params);

/// deg K_C == p * deg D.
bool check_KC_equals_pD(const RaynaudParams& params);

/// A divisor class t*T + dprime*g^*D' in the rank-2 sublattice of Pic(P)
/// spanned by the tautological class and the pullback of D'.
struct RuledSurfaceClass {
  Int t = 0;
  Int dprime = 0;

  friend bool operator==(const RuledSurfaceClass&, const RuledSurfaceClass&) = default;
  friend RuledSurfaceClass operator+(const RuledSurfaceClass& a, const RuledSurfaceClass& b) {
    return {arith::checked_add(a.t, b.t), arith::checked_add(a.dprime, b.dprime)};
  }
  friend RuledSurfaceClass operator-(const RuledSurfaceClass& a, const RuledSurfaceClass& b) {
    return {arith::checked_sub(a.t, b.t), arith::checked_sub(a.dprime, b.dprime)};
  }
  friend RuledSurfaceClass operator*(Int k, const RuledSurfaceClass& a) {
    return {arith::checked_mul(k, a.t), arith::checked_mul(k, a.dprime)};
  }
};

// Named classes on P = P(E).
RuledSurfaceClass class_T();
RuledSurfaceClass class_Dprime();
RuledSurfaceClass class_D(const RaynaudParams& params);
RuledSurfaceClass class_F(const RaynaudParams& params);
RuledSurfaceClass class_G(const RaynaudParams& params);
RuledSurfaceClass class_M(const RaynaudParams& params);
RuledSurfaceClass class_K_rel(const RaynaudParams& params);

/// Intersection pairing with T^2 = -deg D, T . g^*D' = deg D', (g^*D')^2 = 0.
Int intersect(const RuledSurfaceClass& a, const RuledSurfaceClass& b, const RaynaudParams& params);

struct NamedCheck {
  std::string name;
  bool passed = false;
  std::string detail;

  friend bool operator==(const NamedCheck&, const NamedCheck&) = default;
};

struct ClassIdentities {
  std::vector<NamedCheck> checks;

  bool all_passed() const;
};

ClassIdentities class_identities(const RaynaudParams& params);

}  // namespace kappacert::tango
