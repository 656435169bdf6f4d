#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kappacert/arith.hpp"
#include "kappacert/report.hpp"
#include "kappacert/tango.hpp"

namespace kappacert::raynaud {

using tango::RaynaudParams;

/// (S^{a_1}E ⊗ ... ⊗ S^{a_k}E)(b D').
///
/// Exponents are kept sorted in descending order; the tensor product is
/// symmetric so this is the canonical form. Negative exponents never appear:
/// g_* O_P(aT) = 0 for a < 0, so such terms are dropped by make_term.
struct BundleTerm {
  std::vector<Int> sym_powers;
  Int twist = 0;

  BigInt rank() const;

  friend auto operator<=>(const BundleTerm&, const BundleTerm&) = default;
  friend bool operator==(const BundleTerm&, const BundleTerm&) = default;
};

std::optional<BundleTerm> make_term(std::vector<Int> sym_powers, Int twist);

/// A direct sum of BundleTerms, stored as term -> multiplicity.
struct BundleSum {
  std::map<BundleTerm, BigInt> terms;

  void add(const BundleTerm& term, const BigInt& multiplicity = 1);
  BigInt summand_count() const;
  BigInt rank() const;

  friend bool operator==(const BundleSum&, const BundleSum&) = default;
};

/// Degrees (as coefficients of D') of the line bundles a Frobenius pullback
/// splits into, with multiplicities. unit_degree = deg D'.
struct LineDegreeMultiset {
  std::map<Int, BigInt> degrees;
  Int unit_degree = 1;

  BigInt cardinality() const;
  std::optional<Int> max_degree() const;
  void merge(const LineDegreeMultiset& other, const BigInt& times = 1);

  friend bool operator==(const LineDegreeMultiset&, const LineDegreeMultiset&) = default;
};

/// f_* ω_{S/C}^n = ⊕_{i=0}^{l-1} S^{n q_s - r i}E(-(n+i)D').
BundleSum pushforward_surface(const RaynaudParams& params, Int n);

/// f^{(m)}_* ω_{X^{(m)}}^n for the m-fold fibre product over C, including
/// the ω_C^n = O(npl D') factor. Multi-indices that differ only by order give
/// the same term and are merged into one entry with a multinomial count.
BundleSum pushforward_product(const RaynaudParams& params, Int m, Int n);

/// F^*E = O ⊕ O(-p l D'), so S^a(F^*E) = ⊕_{k=0}^{a} O(-k p l D') and the
/// twist b becomes p b.
LineDegreeMultiset frobenius_split(const BundleTerm& term, const RaynaudParams& params);
LineDegreeMultiset frobenius_split(const BundleSum& sum, const RaynaudParams& params);

enum class H0Kind { AllNegative, HasNonnegative };

struct H0Status {
  H0Kind kind = H0Kind::AllNegative;
  std::vector<Int> nonnegative;  // ascending

  friend bool operator==(const H0Status&, const H0Status&) = default;
};

/// AllNegative certifies H^0 = 0 for the original bundle: sections inject
/// under Frobenius pullback and negative-degree line bundles have none.
H0Status h0_status(const LineDegreeMultiset& split);

/// alpha * n + beta, in units of D'.
struct LinearForm {
  Int n_coeff = 0;
  Int constant = 0;
  std::string label;

  bool negative_for_all_n() const { return n_coeff < 0 && n_coeff + constant < 0; }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

struct NumericCheck {
  Int n = 0;
  BigInt rank;
  std::optional<Int> max_degree;
  H0Status status;

  friend bool operator==(const NumericCheck&, const NumericCheck&) = default;
};

enum class CertificateStatus { NegInfinityAllN, VanishesUpToN, Inconclusive };

struct KodairaCertificate {
  std::string subject;
  Int m = 0;
  CertificateStatus status = CertificateStatus::Inconclusive;
  Int checked_up_to = 0;  // largest n checked numerically, 0 if none
  Int unit_degree = 1;
  std::vector<LinearForm> evidence;
  std::vector<NumericCheck> numeric;
  Provenance provenance;

  void check_invariants() const;

  friend bool operator==(const KodairaCertificate&, const KodairaCertificate&) = default;
};

/// For m > pl, every split degree is p((pl - m) n - Σi_j - l Σk_j) <= p(pl - m) n
/// and the status is NegInfinityAllN. Otherwise n = 1..n_max are checked
/// numerically.
KodairaCertificate certify_kappa_negative(const RaynaudParams& params, Int m, Int n_max = 20);

enum class SurfaceKappa { KSAmple, KappaOne };

struct SurfaceKappaResult {
  SurfaceKappa kind = SurfaceKappa::KSAmple;
  Int qS = 0;
  Int f_squared = 0;
  std::vector<Provenance> provenance;

  friend bool operator==(const SurfaceKappaResult&, const SurfaceKappaResult&) = default;
};

SurfaceKappaResult kappa_surface(const RaynaudParams& params);

/// 1 <= m_0 <= pl, where m_0 is the largest m with kappa(X^{(m)}) >= 0.
struct M0Bounds {
  Int lower = 1;
  Int upper = 0;
  Provenance lower_provenance;
  KodairaCertificate upper_certificate;

  friend bool operator==(const M0Bounds&, const M0Bounds&) = default;
};

M0Bounds m0_bounds(const RaynaudParams& params);

/// The fibration X^{(M+1)} -> X^{(m)} with M = pl the certified bound on m_0.
CounterexampleReport assemble_counterexample_1(const RaynaudParams& params, Int m);

std::string to_string(H0Kind k);
std::string to_string(CertificateStatus s);
std::string to_string(SurfaceKappa k);

}  // namespace kappacert::raynaud
