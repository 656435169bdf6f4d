#include "kappacert/json_io.hpp"

#include <array>
#include <utility>

namespace kappacert {

namespace {

template <typename Enum, std::size_t N>
Enum parse_enum(const json& j, const std::array<Enum, N>& values, std::string (*name)(Enum)) {
  const auto s = j.get<std::string>();
  for (Enum v : values) {
    if (name(v) == s) return v;
  }
  fail(ErrorKind::InvalidInput, "unknown enumerator '" + s + "'");
}

template <typename T>
json optional_to_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

}  // namespace

std::string big_to_string(const BigInt& v) { return v.str(); }

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<Int>());
  return BigInt(j.get<std::string>());
}

void to_json(json& j, const Provenance& v) { j = json{{"kind", to_string(v.kind)}, {"anchor", v.anchor}}; }

void from_json(const json& j, Provenance& v) {
  v.kind = parse_enum(j.at("kind"), std::array{ProvenanceKind::Certified, ProvenanceKind::Cited},
                      static_cast<std::string (*)(ProvenanceKind)>(&to_string));
  v.anchor = j.at("anchor").get<std::string>();
}

void to_json(json& j, const KappaStatus& v) {
  j = json{{"bound", to_string(v.bound)}, {"rendered", v.render()}, {"evidence", v.evidence}};
  j["value"] = v.bound == KappaBound::NegInfinity ? json(nullptr) : json(v.value);
}

void from_json(const json& j, KappaStatus& v) {
  v.bound = parse_enum(j.at("bound"), std::array{KappaBound::NegInfinity, KappaBound::Exactly, KappaBound::AtLeast},
                       static_cast<std::string (*)(KappaBound)>(&to_string));
  v.value = j.at("value").is_null() ? 0 : j.at("value").get<Int>();
  v.evidence = j.at("evidence").get<std::vector<Provenance>>();
}

void to_json(json& j, const CounterexampleReport& v) {
  j = json{{"construction", to_string(v.construction)},
           {"p", v.p},
           {"parameters", v.parameters},
           {"total_dim", v.total_dim},
           {"base_dim", v.base_dim},
           {"fibre_dim", v.fibre_dim},
           {"kappa_total", v.kappa_total},
           {"kappa_base", v.kappa_base},
           {"kappa_fibre", v.kappa_fibre},
           {"violated_inequality", v.violated_inequality},
           {"notes", v.notes}};
}

void from_json(const json& j, CounterexampleReport& v) {
  v.construction =
      parse_enum(j.at("construction"), std::array{Construction::FibreProductRaynaud, Construction::FanoProduct},
                 static_cast<std::string (*)(Construction)>(&to_string));
  v.p = j.at("p").get<Int>();
  v.parameters = j.at("parameters").get<std::map<std::string, Int>>();
  v.total_dim = j.at("total_dim").get<Int>();
  v.base_dim = j.at("base_dim").get<Int>();
  v.fibre_dim = j.at("fibre_dim").get<Int>();
  v.kappa_total = j.at("kappa_total").get<KappaStatus>();
  v.kappa_base = j.at("kappa_base").get<KappaStatus>();
  v.kappa_fibre = j.at("kappa_fibre").get<KappaStatus>();
  v.violated_inequality = j.at("violated_inequality").get<std::string>();
  v.notes = j.at("notes").get<std::vector<std::string>>();
}

namespace tango {

void to_json(json& j, const RaynaudParams& v) {
  j = json{{"p", v.p},   {"e", v.e},       {"l", v.l},          {"r", v.r},
           {"qS", v.qS}, {"degD", v.degD}, {"degDprime", v.degDprime}, {"genusC", v.genusC}};
}

void from_json(const json& j, RaynaudParams& v) {
  v.p = j.at("p").get<Int>();
  v.e = j.at("e").get<Int>();
  v.l = j.at("l").get<Int>();
  v.r = j.at("r").get<Int>();
  v.qS = j.at("qS").get<Int>();
  v.degD = j.at("degD").get<Int>();
  v.degDprime = j.at("degDprime").get<Int>();
  v.genusC = j.at("genusC").get<Int>();
}

void to_json(json& j, const CurveInvariants& v) {
  j = json{{"deg_canonical", v.deg_canonical}, {"genus", v.genus}, {"degD", v.degD}, {"degDprime", v.degDprime}};
}

void from_json(const json& j, CurveInvariants& v) {
  v.deg_canonical = j.at("deg_canonical").get<Int>();
  v.genus = j.at("genus").get<Int>();
  v.degD = j.at("degD").get<Int>();
  v.degDprime = j.at("degDprime").get<Int>();
}

void to_json(json& j, const NamedCheck& v) {
  j = json{{"name", v.name}, {"passed", v.passed}, {"detail", v.detail}};
}

void from_json(const json& j, NamedCheck& v) {
  v.name = j.at("name").get<std::string>();
  v.passed = j.at("passed").get<bool>();
  v.detail = j.at("detail").get<std::string>();
}

}  // namespace tango

namespace raynaud {

void to_json(json& j, const BundleTerm& v) {
  j = json{{"sym_powers", v.sym_powers}, {"twist", v.twist}, {"rank", big_to_string(v.rank())}};
}

void from_json(const json& j, BundleTerm& v) {
  auto term = make_term(j.at("sym_powers").get<std::vector<Int>>(), j.at("twist").get<Int>());
  if (!term) fail(ErrorKind::InvalidInput, "bundle term with a negative symmetric power");
  v = *term;
}

void to_json(json& j, const BundleSum& v) {
  j = json::array();
  for (const auto& [term, mult] : v.terms) {
    json entry = term;
    entry["multiplicity"] = big_to_string(mult);
    j.push_back(std::move(entry));
  }
}

void from_json(const json& j, BundleSum& v) {
  v.terms.clear();
  for (const auto& entry : j) v.add(entry.get<BundleTerm>(), big_from_json(entry.at("multiplicity")));
}

void to_json(json& j, const LineDegreeMultiset& v) {
  json degrees = json::array();
  for (const auto& [deg, mult] : v.degrees) degrees.push_back({{"degree", deg}, {"multiplicity", big_to_string(mult)}});
  j = json{{"unit_degree", v.unit_degree}, {"degrees", std::move(degrees)}};
}

void from_json(const json& j, LineDegreeMultiset& v) {
  v.unit_degree = j.at("unit_degree").get<Int>();
  v.degrees.clear();
  for (const auto& entry : j.at("degrees")) {
    v.degrees[entry.at("degree").get<Int>()] += big_from_json(entry.at("multiplicity"));
  }
}

void to_json(json& j, const H0Status& v) {
  j = json{{"kind", to_string(v.kind)}, {"nonnegative", v.nonnegative}};
}

void from_json(const json& j, H0Status& v) {
  v.kind = parse_enum(j.at("kind"), std::array{H0Kind::AllNegative, H0Kind::HasNonnegative},
                      static_cast<std::string (*)(H0Kind)>(&to_string));
  v.nonnegative = j.at("nonnegative").get<std::vector<Int>>();
}

void to_json(json& j, const LinearForm& v) {
  j = json{{"n_coeff", v.n_coeff}, {"constant", v.constant}, {"label", v.label}};
}

void from_json(const json& j, LinearForm& v) {
  v.n_coeff = j.at("n_coeff").get<Int>();
  v.constant = j.at("constant").get<Int>();
  v.label = j.at("label").get<std::string>();
}

void to_json(json& j, const NumericCheck& v) {
  j = json{{"n", v.n}, {"rank", big_to_string(v.rank)}, {"max_degree", optional_to_json(v.max_degree)},
           {"status", v.status}};
}

void from_json(const json& j, NumericCheck& v) {
  v.n = j.at("n").get<Int>();
  v.rank = big_from_json(j.at("rank"));
  v.max_degree = optional_from_json<Int>(j.at("max_degree"));
  v.status = j.at("status").get<H0Status>();
}

void to_json(json& j, const KodairaCertificate& v) {
  j = json{{"subject", v.subject},         {"m", v.m},
           {"status", to_string(v.status)}, {"checked_up_to", v.checked_up_to},
           {"unit_degree", v.unit_degree}, {"evidence", v.evidence},
           {"numeric", v.numeric},         {"provenance", v.provenance}};
}

void from_json(const json& j, KodairaCertificate& v) {
  v.subject = j.at("subject").get<std::string>();
  v.m = j.at("m").get<Int>();
  v.status = parse_enum(j.at("status"),
                        std::array{CertificateStatus::NegInfinityAllN, CertificateStatus::VanishesUpToN,
                                   CertificateStatus::Inconclusive},
                        static_cast<std::string (*)(CertificateStatus)>(&to_string));
  v.checked_up_to = j.at("checked_up_to").get<Int>();
  v.unit_degree = j.at("unit_degree").get<Int>();
  v.evidence = j.at("evidence").get<std::vector<LinearForm>>();
  v.numeric = j.at("numeric").get<std::vector<NumericCheck>>();
  v.provenance = j.at("provenance").get<Provenance>();
}

void to_json(json& j, const SurfaceKappaResult& v) {
  j = json{{"kind", to_string(v.kind)}, {"qS", v.qS}, {"F_squared", v.f_squared}, {"provenance", v.provenance}};
}

void from_json(const json& j, SurfaceKappaResult& v) {
  v.kind = parse_enum(j.at("kind"), std::array{SurfaceKappa::KSAmple, SurfaceKappa::KappaOne},
                      static_cast<std::string (*)(SurfaceKappa)>(&to_string));
  v.qS = j.at("qS").get<Int>();
  v.f_squared = j.at("F_squared").get<Int>();
  v.provenance = j.at("provenance").get<std::vector<Provenance>>();
}

void to_json(json& j, const M0Bounds& v) {
  j = json{{"lower", v.lower},
           {"upper", v.upper},
           {"lower_provenance", v.lower_provenance},
           {"upper_certificate", v.upper_certificate}};
}

void from_json(const json& j, M0Bounds& v) {
  v.lower = j.at("lower").get<Int>();
  v.upper = j.at("upper").get<Int>();
  v.lower_provenance = j.at("lower_provenance").get<Provenance>();
  v.upper_certificate = j.at("upper_certificate").get<KodairaCertificate>();
}

}  // namespace raynaud

namespace quotient {

void to_json(json& j, const CyclicQuotient& v) { j = json{{"q", v.q()}, {"weights", v.weights()}}; }

CyclicQuotient cyclic_quotient_from_json(const json& j) {
  return CyclicQuotient(j.at("q").get<Int>(), j.at("weights").get<std::vector<Int>>());
}

void to_json(json& j, const SingularityClass& v) {
  j = json{{"class", to_string(v.kind)}, {"witness", optional_to_json(v.witness)}, {"min_sum", v.min_sum}};
}

void from_json(const json& j, SingularityClass& v) {
  v.kind = parse_enum(j.at("class"),
                      std::array{SingularityKind::NotCanonical, SingularityKind::CanonicalNotTerminal,
                                 SingularityKind::Terminal},
                      static_cast<std::string (*)(SingularityKind)>(&to_string));
  v.witness = optional_from_json<Int>(j.at("witness"));
  v.min_sum = j.at("min_sum").get<Int>();
}

}  // namespace quotient

namespace fano {

void to_json(json& j, const FanoParams& v) {
  j = json{{"p", v.p}, {"r", v.rExp}, {"q", v.q}, {"m", v.m}, {"n", v.n}};
}

void from_json(const json& j, FanoParams& v) {
  v = FanoParams::make(j.at("p").get<Int>(), j.at("r").get<Int>(), j.at("m").get<Int>(), j.at("n").get<Int>());
  if (v.q != j.at("q").get<Int>()) fail(ErrorKind::InvalidInput, "q != p^r");
}

void to_json(json& j, const FanoResult& v) {
  j = json{{"is_fano", v.is_fano},
           {"anticanonical_coefficient", v.coefficient},
           {"conductor", v.conductor},
           {"singularities", optional_to_json(v.singularities)}};
}

void from_json(const json& j, FanoResult& v) {
  v.is_fano = j.at("is_fano").get<bool>();
  v.coefficient = j.at("anticanonical_coefficient").get<Int>();
  v.conductor = j.at("conductor").get<Int>();
  v.singularities = optional_from_json<quotient::SingularityClass>(j.at("singularities"));
}

void to_json(json& j, const MinDimension& v) {
  j = json{{"p", v.p}, {"m", v.m}, {"r", v.rExp}, {"n", v.n}, {"dim", v.dim}};
}

void from_json(const json& j, MinDimension& v) {
  v.p = j.at("p").get<Int>();
  v.m = j.at("m").get<Int>();
  v.rExp = j.at("r").get<Int>();
  v.n = j.at("n").get<Int>();
  v.dim = j.at("dim").get<Int>();
}

}  // namespace fano

}  // namespace kappacert
