#pragma once

#include "json.hpp"

#include "kappacert/fano.hpp"
#include "kappacert/quotient.hpp"
#include "kappacert/raynaud.hpp"
#include "kappacert/report.hpp"
#include "kappacert/tango.hpp"

// JSON (de)serialization for every record the CLI emits. Arbitrary-precision
// values are written as decimal strings; object keys come out sorted, so equal
// values always serialize to identical bytes.

namespace kappacert {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

void to_json(json& j, const Provenance& v);
void from_json(const json& j, Provenance& v);
void to_json(json& j, const KappaStatus& v);
void from_json(const json& j, KappaStatus& v);
void to_json(json& j, const CounterexampleReport& v);
void from_json(const json& j, CounterexampleReport& v);

std::string big_to_string(const BigInt& v);
BigInt big_from_json(const json& j);

namespace tango {
void to_json(json& j, const RaynaudParams& v);
void from_json(const json& j, RaynaudParams& v);
void to_json(json& j, const CurveInvariants& v);
void from_json(const json& j, CurveInvariants& v);
void to_json(json& j, const NamedCheck& v);
void from_json(const json& j, NamedCheck& v);
}  // namespace tango

namespace raynaud {
void to_json(json& j, const BundleTerm& v);
void from_json(const json& j, BundleTerm& v);
void to_json(json& j, const BundleSum& v);
void from_json(const json& j, BundleSum& v);
void to_json(json& j, const LineDegreeMultiset& v);
void from_json(const json& j, LineDegreeMultiset& v);
void to_json(json& j, const H0Status& v);
void from_json(const json& j, H0Status& v);
void to_json(json& j, const LinearForm& v);
void from_json(const json& j, LinearForm& v);
void to_json(json& j, const NumericCheck& v);
void from_json(const json& j, NumericCheck& v);
void to_json(json& j, const KodairaCertificate& v);
void from_json(const json& j, KodairaCertificate& v);
void to_json(json& j, const SurfaceKappaResult& v);
void from_json(const json& j, SurfaceKappaResult& v);
void to_json(json& j, const M0Bounds& v);
void from_json(const json& j, M0Bounds& v);
}  // namespace raynaud

namespace quotient {
void to_json(json& j, const CyclicQuotient& v);
CyclicQuotient cyclic_quotient_from_json(const json& j);
void to_json(json& j, const SingularityClass& v);
void from_json(const json& j, SingularityClass& v);
}  // namespace quotient

namespace fano {
void to_json(json& j, const FanoParams& v);
void from_json(const json& j, FanoParams& v);
void to_json(json& j, const FanoResult& v);
void from_json(const json& j, FanoResult& v);
void to_json(json& j, const MinDimension& v);
void from_json(const json& j, MinDimension& v);
}  // namespace fano

}  // namespace kappacert
