#include "kappacert/raynaud.hpp"

#include <algorithm>
#include <functional>

namespace kappacert::raynaud {

using arith::checked_add;
using arith::checked_mul;
using arith::checked_sub;

namespace {

BigInt factorial(Int k) {
  BigInt out = 1;
  for (Int i = 2; i <= k; ++i) out *= i;
  return out;
}

// coefficients of poly * (1 + x + ... + x^a)
std::vector<BigInt> times_geometric(const std::vector<BigInt>& poly, Int a) {
  std::vector<BigInt> prefix(poly.size() + 1);
  for (std::size_t i = 0; i < poly.size(); ++i) prefix[i + 1] = prefix[i] + poly[i];
  const auto len = static_cast<Int>(poly.size());
  std::vector<BigInt> out(static_cast<std::size_t>(len + a));
  for (Int k = 0; k < len + a; ++k) {
    const Int hi = std::min(k, len - 1) + 1;
    const Int lo = std::max<Int>(0, k - a);
    out[static_cast<std::size_t>(k)] = prefix[static_cast<std::size_t>(hi)] - prefix[static_cast<std::size_t>(lo)];
  }
  return out;
}

std::string subject_for(const RaynaudParams& params, Int m) {
  return "X^(" + std::to_string(m) + ") over the Tango-Raynaud curve with p=" + std::to_string(params.p) +
         ", e=" + std::to_string(params.e) + ", l=" + std::to_string(params.l);
}

}  // namespace

BigInt BundleTerm::rank() const {
  BigInt out = 1;
  for (Int a : sym_powers) out *= (a + 1);
  return out;
}

std::optional<BundleTerm> make_term(std::vector<Int> sym_powers, Int twist) {
  if (std::any_of(sym_powers.begin(), sym_powers.end(), [](Int a) { return a < 0; })) return std::nullopt;
  std::sort(sym_powers.begin(), sym_powers.end(), std::greater<>());
  return BundleTerm{std::move(sym_powers), twist};
}

void BundleSum::add(const BundleTerm& term, const BigInt& multiplicity) {
  if (multiplicity == 0) return;
  terms[term] += multiplicity;
}

BigInt BundleSum::summand_count() const {
  BigInt out = 0;
  for (const auto& [term, mult] : terms) out += mult;
  return out;
}

BigInt BundleSum::rank() const {
  BigInt out = 0;
  for (const auto& [term, mult] : terms) out += mult * term.rank();
  return out;
}

BigInt LineDegreeMultiset::cardinality() const {
  BigInt out = 0;
  for (const auto& [deg, mult] : degrees) out += mult;
  return out;
}

std::optional<Int> LineDegreeMultiset::max_degree() const {
  if (degrees.empty()) return std::nullopt;
  return degrees.rbegin()->first;
}

void LineDegreeMultiset::merge(const LineDegreeMultiset& other, const BigInt& times) {
  if (times == 0) return;
  for (const auto& [deg, mult] : other.degrees) degrees[deg] += mult * times;
}

BundleSum pushforward_surface(const RaynaudParams& params, Int n) {
  if (n < 1) fail(ErrorKind::InvalidInput, "n must be positive");
  BundleSum out;
  for (Int i = 0; i < params.l; ++i) {
    const Int a = checked_sub(checked_mul(n, params.qS), checked_mul(params.r, i));
    if (auto term = make_term({a}, -checked_add(n, i))) out.add(*term);
  }
  return out;
}

BundleSum pushforward_product(const RaynaudParams& params, Int m, Int n) {
  if (m < 1) fail(ErrorKind::InvalidInput, "m must be positive");
  if (n < 1) fail(ErrorKind::InvalidInput, "n must be positive");

  // Indices i whose exponent n q_s - r i is non-negative; the rest vanish.
  std::vector<Int> admissible;
  for (Int i = 0; i < params.l; ++i) {
    if (checked_sub(checked_mul(n, params.qS), checked_mul(params.r, i)) >= 0) admissible.push_back(i);
  }

  const Int base_twist = checked_sub(checked_mul(checked_mul(n, params.p), params.l), checked_mul(m, n));
  const BigInt m_factorial = factorial(m);

  BundleSum out;
  std::vector<Int> counts(admissible.size(), 0);
  // Distribute m factors among the admissible indices.
  std::function<void(std::size_t, Int)> recurse = [&](std::size_t slot, Int remaining) {
    if (slot + 1 == admissible.size()) {
      counts[slot] = remaining;
      std::vector<Int> powers;
      powers.reserve(static_cast<std::size_t>(m));
      Int index_sum = 0;
      BigInt denom = 1;
      for (std::size_t s = 0; s < admissible.size(); ++s) {
        const Int a = n * params.qS - params.r * admissible[s];
        powers.insert(powers.end(), static_cast<std::size_t>(counts[s]), a);
        index_sum = checked_add(index_sum, checked_mul(counts[s], admissible[s]));
        denom *= factorial(counts[s]);
      }
      auto term = make_term(std::move(powers), checked_sub(base_twist, index_sum));
      ensure(term.has_value(), "admissible exponent became negative");
      out.add(*term, m_factorial / denom);
      return;
    }
    for (Int c = 0; c <= remaining; ++c) {
      counts[slot] = c;
      recurse(slot + 1, remaining - c);
    }
  };
  // i = 0 is always admissible since n q_s >= 0.
  ensure(!admissible.empty(), "no admissible index");
  recurse(0, m);
  return out;
}

LineDegreeMultiset frobenius_split(const BundleTerm& term, const RaynaudParams& params) {
  std::vector<BigInt> poly{1};
  for (Int a : term.sym_powers) poly = times_geometric(poly, a);

  const Int pl = checked_mul(params.p, params.l);
  const Int pb = checked_mul(params.p, term.twist);
  LineDegreeMultiset out;
  out.unit_degree = params.degDprime;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (poly[k] == 0) continue;
    const Int deg = checked_sub(pb, checked_mul(pl, static_cast<Int>(k)));
    out.degrees[deg] += poly[k];
  }
  return out;
}

LineDegreeMultiset frobenius_split(const BundleSum& sum, const RaynaudParams& params) {
  LineDegreeMultiset out;
  out.unit_degree = params.degDprime;
  for (const auto& [term, mult] : sum.terms) out.merge(frobenius_split(term, params), mult);
  return out;
}

H0Status h0_status(const LineDegreeMultiset& split) {
  H0Status out;
  for (const auto& [deg, mult] : split.degrees) {
    if (deg >= 0) out.nonnegative.push_back(deg);
  }
  out.kind = out.nonnegative.empty() ? H0Kind::AllNegative : H0Kind::HasNonnegative;
  return out;
}

void KodairaCertificate::check_invariants() const {
  if (status == CertificateStatus::NegInfinityAllN) {
    ensure(!evidence.empty(), "NegInfinityAllN certificate without evidence");
    for (const auto& form : evidence) {
      ensure(form.negative_for_all_n(), "evidence form " + form.label + " is not negative for all n >= 1");
    }
  }
  if (status == CertificateStatus::VanishesUpToN) {
    ensure(checked_up_to >= 1, "VanishesUpToN needs a positive bound");
    for (const auto& check : numeric) {
      ensure(check.status.kind == H0Kind::AllNegative, "VanishesUpToN with a nonnegative degree");
    }
  }
}

KodairaCertificate certify_kappa_negative(const RaynaudParams& params, Int m, Int n_max) {
  if (m < 1) fail(ErrorKind::InvalidInput, "m must be positive");
  KodairaCertificate cert;
  cert.subject = subject_for(params, m);
  cert.m = m;
  cert.unit_degree = params.degDprime;

  const Int pl = checked_mul(params.p, params.l);
  if (m > pl) {
    // Every split degree is p(pl - m) n - p(Σi_j + l Σk_j). The indices and
    // choice vectors are non-negative, so Σi_j = Σk_j = 0 gives the largest
    // degree for each n.
    const Int alpha = checked_mul(params.p, checked_sub(pl, m));
    cert.evidence.push_back({alpha, 0, "sum_i=0,sum_k=0 (largest split degree)"});
    cert.status = cert.evidence.front().negative_for_all_n() ? CertificateStatus::NegInfinityAllN
                                                             : CertificateStatus::Inconclusive;
    cert.provenance = Provenance::certified(
        "every Frobenius-split summand of f_* ω^n has degree ≤ " + std::to_string(alpha) + "·n·deg D' < 0 for all n ≥ 1");
    cert.check_invariants();
    return cert;
  }

  if (n_max < 1) fail(ErrorKind::InvalidInput, "n_max must be positive when m <= pl");
  bool all_negative = true;
  for (Int n = 1; n <= n_max; ++n) {
    const BundleSum sum = pushforward_product(params, m, n);
    const LineDegreeMultiset split = frobenius_split(sum, params);
    NumericCheck check{n, sum.rank(), split.max_degree(), h0_status(split)};
    all_negative = all_negative && check.status.kind == H0Kind::AllNegative;
    cert.numeric.push_back(std::move(check));
    if (!all_negative) break;
  }
  cert.checked_up_to = cert.numeric.back().n;
  if (all_negative) {
    cert.status = CertificateStatus::VanishesUpToN;
    cert.provenance = Provenance::certified("all split degrees negative for n = 1.." + std::to_string(n_max));
  } else {
    cert.status = CertificateStatus::Inconclusive;
    cert.provenance = Provenance::certified("a split summand of nonnegative degree appears at n = " +
                                            std::to_string(cert.checked_up_to) +
                                            "; the Frobenius bound cannot decide vanishing");
  }
  cert.check_invariants();
  return cert;
}

SurfaceKappaResult kappa_surface(const RaynaudParams& params) {
  SurfaceKappaResult out;
  out.qS = params.qS;
  out.f_squared = tango::intersect(tango::class_F(params), tango::class_F(params), params);
  ensure(out.f_squared == params.degD && out.f_squared > 0, "F^2 != deg D > 0");
  ensure(params.qS >= 0, "q_s < 0 for valid parameters");

  const bool exceptional = (params.l == 2 && params.p == 3) || (params.l == 3 && params.p == 2);
  out.kind = params.qS > 0 ? SurfaceKappa::KSAmple : SurfaceKappa::KappaOne;
  ensure((out.kind == SurfaceKappa::KappaOne) == exceptional, "q_s = 0 must coincide with {l,p} = {2,3}");

  out.provenance.push_back(Provenance::certified(
      "K_S = π^*(q_s F + (p+l) g^*D') with q_s = " + std::to_string(params.qS) +
      " and F^2 = deg D = " + std::to_string(params.degD) + " > 0"));
  out.provenance.push_back(Provenance::cited(
      "K_S is ample when {l,p} ≠ {2,3}; otherwise q_s = 0 and κ(S) = 1"));
  return out;
}

M0Bounds m0_bounds(const RaynaudParams& params) {
  M0Bounds out;
  out.lower = 1;
  out.upper = checked_mul(params.p, params.l);
  out.lower_provenance = Provenance::cited("κ(S) ≥ 0 since K_S is ample or κ(S) = 1, so m_0 ≥ 1");
  out.upper_certificate = certify_kappa_negative(params, out.upper + 1);
  ensure(out.upper_certificate.status == CertificateStatus::NegInfinityAllN,
         "no -inf certificate at m = pl + 1");
  return out;
}

CounterexampleReport assemble_counterexample_1(const RaynaudParams& params, Int m) {
  const M0Bounds bounds = m0_bounds(params);
  if (m < 1 || m > bounds.upper) {
    fail(ErrorKind::InvalidInput,
         "m must lie in [1, " + std::to_string(bounds.upper) + "], got " + std::to_string(m));
  }
  const Int big_m = bounds.upper;

  CounterexampleReport out;
  out.construction = Construction::FibreProductRaynaud;
  out.p = params.p;
  out.parameters = {{"e", params.e}, {"l", params.l}, {"m", m}, {"m0_upper", big_m}, {"p", params.p}};
  // X^(k) has dimension k + 1.
  out.total_dim = big_m + 2;
  out.base_dim = m + 1;
  out.fibre_dim = big_m + 1 - m;

  out.kappa_total.bound = KappaBound::NegInfinity;
  out.kappa_total.evidence.push_back(bounds.upper_certificate.provenance);
  out.kappa_total.evidence.push_back(
      Provenance::cited("X^(m) is normal, so H^0(ω^n) = 0 for all n ≥ 1 gives κ = −∞"));

  out.kappa_base.bound = KappaBound::AtLeast;
  out.kappa_base.value = 0;
  out.kappa_base.evidence.push_back(Provenance::cited("κ(X^(m)) ≥ 0 for m ≤ m_0 by maximality of m_0"));

  out.kappa_fibre.bound = KappaBound::AtLeast;
  out.kappa_fibre.value = 0;
  out.kappa_fibre.evidence.push_back(Provenance::cited(
      "the generic fibre of X^(m_0+1) → X^(m) is a base change of the generic fibre of X^(m_0+1-m) → C and "
      "has nonnegative Kodaira dimension"));

  out.notes.push_back("the fibration is X^(m_0+1) → X^(m) with m ≤ m_0 ≤ pl; m_0 is replaced by its certified "
                      "upper bound pl, so total and fibre dimensions are upper bounds");
  out.notes.push_back("κ(X^(m)) ≥ 0 is unconditional only for m = 1; larger m assume m ≤ m_0");
  out.check_invariants();
  return out;
}

std::string to_string(H0Kind k) { return k == H0Kind::AllNegative ? "AllNegative" : "HasNonnegative"; }

std::string to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::NegInfinityAllN: return "NegInfinityAllN";
    case CertificateStatus::VanishesUpToN: return "VanishesUpToN";
    case CertificateStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(SurfaceKappa k) { return k == SurfaceKappa::KSAmple ? "KSAmple" : "KappaOne"; }

}  // namespace kappacert::raynaud
