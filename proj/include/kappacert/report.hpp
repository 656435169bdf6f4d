#pragma once

#include <map>
#include <string>
#include <vector>

#include "kappacert/arith.hpp"

namespace kappacert {

/// Distinguishes facts this library verified by exact computation from facts
/// that are taken as given from the literature.
enum class ProvenanceKind { Certified, Cited };

struct Provenance {
  ProvenanceKind kind = ProvenanceKind::Certified;
  /// For Certified entries: what was computed. For Cited entries: the
  /// statement relied upon.
  std::string anchor;

  static Provenance certified(std::string what) { return {ProvenanceKind::Certified, std::move(what)}; }
  static Provenance cited(std::string statement) { return {ProvenanceKind::Cited, std::move(statement)}; }

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

enum class KappaBound { NegInfinity, Exactly, AtLeast };

struct KappaStatus {
  KappaBound bound = KappaBound::NegInfinity;
  Int value = 0;  // ignored for NegInfinity
  std::vector<Provenance> evidence;

  std::string render() const;
  bool has_certified_evidence() const;

  friend bool operator==(const KappaStatus&, const KappaStatus&) = default;
};

enum class Construction { FibreProductRaynaud, FanoProduct };

inline constexpr const char* kViolatedInequality = "κ(X) = −∞ < κ(Y) + κ(X_η)";

/// A fibration X -> Y whose Kodaira dimensions violate kappa(X) >= kappa(Y) + kappa(X_eta).
struct CounterexampleReport {
  Construction construction = Construction::FibreProductRaynaud;
  Int p = 0;
  std::map<std::string, Int> parameters;
  Int total_dim = 0;
  Int base_dim = 0;
  Int fibre_dim = 0;
  KappaStatus kappa_total;
  KappaStatus kappa_base;
  KappaStatus kappa_fibre;
  std::string violated_inequality = kViolatedInequality;
  std::vector<std::string> notes;

  /// Throws InternalInconsistency if the dimension or kappa invariants fail.
  void check_invariants() const;

  friend bool operator==(const CounterexampleReport&, const CounterexampleReport&) = default;
};

std::string to_string(Construction c);
std::string to_string(ProvenanceKind k);
std::string to_string(KappaBound b);

}  // namespace kappacert
