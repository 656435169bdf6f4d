#include "doctest.h"
#include "kappacert/tango.hpp"

using namespace kappacert;
using namespace kappacert::tango;

namespace {

ErrorKind kind_of(Int p, Int e, Int l) {
  try {
    validate_params(p, e, l);
  } catch (const Error& err) {
    return err.kind();
  }
  FAIL("expected validation to fail");
  return ErrorKind::InternalInconsistency;
}

template <typename F>
void for_each_valid(Int p_max, Int e_max, F&& f) {
  for (Int p = 2; p <= p_max; ++p) {
    if (!arith::is_prime(p)) continue;
    for (Int e = 1; e <= e_max; ++e) {
      for (Int l = 2; l <= p + 1; ++l) {
        if (e % p == 0 || e % l != 0 || (p + 1) % l != 0) continue;
        f(validate_params(p, e, l));
      }
    }
  }
}

}  // namespace

TEST_CASE("validate_params derives the curve invariants") {
  const auto a = validate_params(2, 3, 3);
  CHECK(a.r == 1);
  CHECK(a.qS == 0);
  CHECK(a.degD == 9);
  CHECK(a.degDprime == 3);
  CHECK(a.genusC == 10);

  const auto b = validate_params(5, 2, 2);
  CHECK(b.r == 3);
  CHECK(b.qS == 1);
  CHECK(b.degD == 14);
  CHECK(b.degDprime == 7);
  CHECK(b.genusC == 36);
}

TEST_CASE("validate_params error kinds") {
  CHECK(kind_of(3, 3, 2) == ErrorKind::GcdViolation);
  CHECK(kind_of(4, 2, 2) == ErrorKind::NonPrimeP);
  CHECK(kind_of(5, 2, 1) == ErrorKind::BadL);
  CHECK(kind_of(5, 2, 3) == ErrorKind::DivisibilityViolation);  // 3 | 6 but 3 does not divide 2
  CHECK(kind_of(5, 3, 2) == ErrorKind::DivisibilityViolation);  // 2 | 6 but 2 does not divide 3
  CHECK(kind_of(5, 0, 2) == ErrorKind::InvalidInput);
}

TEST_CASE("curve_invariants") {
  CHECK(curve_invariants(validate_params(5, 2, 2)) == CurveInvariants{70, 36, 14, 7});
  CHECK(curve_invariants(validate_params(2, 3, 3)) == CurveInvariants{18, 10, 9, 3});
  const auto c = curve_invariants(validate_params(3, 2, 2));
  CHECK(c.deg_canonical == 18);
  CHECK(c.genus == 10);
}

TEST_CASE("K_C = pD") {
  CHECK(check_KC_equals_pD(validate_params(5, 2, 2)));
  CHECK(check_KC_equals_pD(validate_params(2, 3, 3)));
  CHECK(check_KC_equals_pD(validate_params(7, 2, 2)));
  CHECK(curve_invariants(validate_params(7, 2, 2)).deg_canonical == 154);
}

TEST_CASE("named divisor classes") {
  const auto params = validate_params(5, 2, 2);
  CHECK(class_F(params) == RuledSurfaceClass{1, 2});
  CHECK(class_G(params) == RuledSurfaceClass{5, 0});
  CHECK(class_M(params) == RuledSurfaceClass{3, 1});
  CHECK(class_K_rel(params) == RuledSurfaceClass{-2, -2});
  CHECK(class_G(params) + class_F(params) == RuledSurfaceClass{6, 2});
  CHECK(class_K_rel(params) + class_M(params) == RuledSurfaceClass{1, -1});

  const auto small = validate_params(2, 3, 3);
  CHECK(class_K_rel(small) + 2 * class_M(small) == RuledSurfaceClass{0, -1});
}

TEST_CASE("intersection pairing") {
  const auto params = validate_params(5, 2, 2);
  CHECK(intersect(class_T(), class_T(), params) == -14);
  CHECK(intersect(class_T(), class_Dprime(), params) == 7);
  CHECK(intersect(class_Dprime(), class_Dprime(), params) == 0);
  CHECK(intersect(class_F(params), class_F(params), params) == 14);
  // Symmetric and bilinear.
  const RuledSurfaceClass a{3, -2}, b{-1, 5};
  CHECK(intersect(a, b, params) == intersect(b, a, params));
  CHECK(intersect(a + b, b, params) == intersect(a, b, params) + intersect(b, b, params));
}

TEST_CASE("class_identities at the documented points") {
  for (auto [p, e, l] : {std::tuple{5, 2, 2}, std::tuple{2, 3, 3}, std::tuple{3, 2, 2}}) {
    const auto ids = class_identities(validate_params(p, e, l));
    CHECK(ids.all_passed());
    CHECK(ids.checks.size() == 6);
  }
}

TEST_CASE("identities hold over the full grid p <= 31, e <= 20") {
  int count = 0;
  for_each_valid(31, 20, [&](const RaynaudParams& params) {
    ++count;
    CHECK(check_KC_equals_pD(params));
    CHECK(class_identities(params).all_passed());
    CHECK(params.qS == (params.l - 1) * params.r - 2);
    CHECK(params.qS == params.p - 1 - params.r);
    CHECK(params.degD == params.l * params.degDprime);
    const Int pe = params.p * params.e;
    CHECK(2 * (params.genusC - 1) == pe * (pe - 3));
  });
  CHECK(count > 50);
}
