#include "kappacert/report.hpp"

#include <algorithm>

namespace kappacert {

std::string KappaStatus::render() const {
  switch (bound) {
    case KappaBound::NegInfinity: return "−∞";
    case KappaBound::Exactly: return "= " + std::to_string(value);
    case KappaBound::AtLeast: return "≥ " + std::to_string(value);
  }
  return "?";
}

bool KappaStatus::has_certified_evidence() const {
  return std::any_of(evidence.begin(), evidence.end(),
                     [](const Provenance& e) { return e.kind == ProvenanceKind::Certified; });
}

void CounterexampleReport::check_invariants() const {
  ensure(total_dim == base_dim + fibre_dim, "report: total_dim != base_dim + fibre_dim");
  ensure(total_dim > 0 && base_dim > 0 && fibre_dim > 0, "report: dimensions must be positive");
  ensure(kappa_total.bound == KappaBound::NegInfinity, "report: total space kappa must be -inf");
  ensure(kappa_total.has_certified_evidence(), "report: -inf claim lacks certified evidence");
}

std::string to_string(Construction c) {
  switch (c) {
    case Construction::FibreProductRaynaud: return "FibreProductRaynaud";
    case Construction::FanoProduct: return "FanoProduct";
  }
  return "?";
}

std::string to_string(ProvenanceKind k) {
  return k == ProvenanceKind::Certified ? "Certified" : "Cited";
}

std::string to_string(KappaBound b) {
  switch (b) {
    case KappaBound::NegInfinity: return "NegInfinity";
    case KappaBound::Exactly: return "Exactly";
    case KappaBound::AtLeast: return "AtLeast";
  }
  return "?";
}

}  // namespace kappacert
