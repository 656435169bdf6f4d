#include "kappacert/fano.hpp"

namespace kappacert::fano {

using arith::checked_mul;
using arith::checked_sub;

FanoParams FanoParams::make(Int p, Int rExp, Int m, Int n) {
  if (!arith::is_prime(p)) fail(ErrorKind::InvalidInput, "p = " + std::to_string(p) + " is not prime");
  if (rExp < 1) fail(ErrorKind::InvalidInput, "q = p^r needs r >= 1");
  if (m < 2) fail(ErrorKind::InvalidInput, "m must be at least 2");
  if (m % p == 0) fail(ErrorKind::InvalidInput, "p divides m");
  if (n < 1) fail(ErrorKind::InvalidInput, "n must be positive");
  return {p, rExp, arith::checked_pow(p, rExp), m, n};
}

Int anticanonical_coefficient(const FanoParams& fp) {
  return checked_sub(checked_sub(checked_sub(checked_mul(fp.m, fp.q), fp.m), fp.n), 1);
}

Int conductor(Int m, Int q) {
  const auto pp = arith::as_prime_power(q);
  if (!pp) fail(ErrorKind::InvalidInput, "q = " + std::to_string(q) + " is not a prime power");
  if (m < 1) fail(ErrorKind::InvalidInput, "m must be positive");
  if (m % pp->prime == 0) fail(ErrorKind::InvalidInput, "p divides m");
  return checked_mul(m, q - 1);
}

FanoResult is_fano(const FanoParams& fp) {
  FanoResult out;
  out.coefficient = anticanonical_coefficient(fp);
  out.conductor = conductor(fp.m, fp.q);
  const bool by_conductor = fp.n >= out.conductor;
  const bool by_sign = out.coefficient < 0;
  ensure(by_conductor == by_sign, "Fano tests disagree: n >= m(q-1) vs mq - m - n - 1 < 0");
  out.is_fano = by_conductor;
  if (out.is_fano) {
    out.singularities = quotient::classify_Y(fp.n, fp.m, fp.q);
    ensure(out.singularities->kind != quotient::SingularityKind::NotCanonical,
           "Fano Y(n, m, q) with non-canonical singularities");
  }
  return out;
}

MinDimension min_counterexample_dim(Int p) {
  if (!arith::is_prime(p)) fail(ErrorKind::InvalidInput, "p = " + std::to_string(p) + " is not prime");

  // dim = m(q-1) + 1 grows in both m and rExp; a small grid contains the optimum.
  std::optional<MinDimension> best;
  for (Int rExp = 1; rExp <= 3; ++rExp) {
    const Int q = arith::checked_pow(p, rExp);
    for (Int m = 2; m <= 2 * p + 3; ++m) {
      if (m % p == 0) continue;
      const Int n = conductor(m, q);
      if (n < 2) continue;
      const MinDimension cand{p, m, rExp, n, n + 1};
      if (!best || cand.dim < best->dim) best = cand;
    }
  }
  ensure(best.has_value(), "empty search grid");

  const MinDimension expected =
      p == 2 ? MinDimension{2, 3, 1, 3, 4} : MinDimension{p, 2, 1, 2 * (p - 1), 2 * p - 1};
  ensure(*best == expected, "grid optimum differs from the closed form");
  return *best;
}

CounterexampleReport assemble_counterexample_2(const FanoParams& fp) {
  const FanoResult fano = is_fano(fp);
  if (!fano.is_fano) {
    fail(ErrorKind::InvalidInput, "Y(n, m, q) is not Fano: n = " + std::to_string(fp.n) + " < m(q-1) = " +
                                      std::to_string(fano.conductor));
  }

  CounterexampleReport out;
  out.construction = Construction::FanoProduct;
  out.p = fp.p;
  out.parameters = {{"m", fp.m}, {"n", fp.n}, {"p", fp.p}, {"q", fp.q}, {"r", fp.rExp}};
  out.total_dim = fp.n + 1;
  out.base_dim = 1;
  out.fibre_dim = fp.n;

  out.kappa_total.bound = KappaBound::NegInfinity;
  out.kappa_total.evidence.push_back(Provenance::certified(
      "mq - m - n - 1 = " + std::to_string(fano.coefficient) + " < 0, so the generic fibre Y(" +
      std::to_string(fp.n) + ", " + std::to_string(fp.m) + ", " + std::to_string(fp.q) +
      ") is Fano with " + quotient::to_string(fano.singularities->kind) + " singularities"));
  out.kappa_total.evidence.push_back(Provenance::cited(
      "X^(n) has a birational model over C whose generic fibre is Y(n, m, q); its pluricanonical systems are empty"));

  out.kappa_base.bound = KappaBound::Exactly;
  out.kappa_base.value = 1;
  out.kappa_base.evidence.push_back(Provenance::cited("C is a smooth projective curve of genus ≥ 2"));

  out.kappa_fibre.bound = KappaBound::AtLeast;
  out.kappa_fibre.value = 0;
  out.kappa_fibre.evidence.push_back(Provenance::cited(
      "generic fibre of S → C has nonnegative Kodaira dimension"));

  out.check_invariants();
  return out;
}

}  // namespace kappacert::fano
