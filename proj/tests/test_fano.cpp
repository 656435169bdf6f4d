#include "doctest.h"
#include "kappacert/fano.hpp"

using namespace kappacert;
using namespace kappacert::fano;

namespace {

// Widest search that stays well inside int64.
MinDimension brute_min_dim(Int p) {
  std::optional<MinDimension> best;
  Int q = 1;
  for (Int rExp = 1; rExp <= 5; ++rExp) {
    q *= p;
    for (Int m = 2; m <= 60; ++m) {
      if (m % p == 0) continue;
      const Int n = m * (q - 1);
      if (n < 2) continue;
      if (!best || n + 1 < best->dim) best = MinDimension{p, m, rExp, n, n + 1};
    }
  }
  return *best;
}

}  // namespace

TEST_CASE("anticanonical_coefficient") {
  CHECK(anticanonical_coefficient(FanoParams::make(3, 1, 2, 4)) == -1);
  CHECK(anticanonical_coefficient(FanoParams::make(2, 1, 3, 3)) == -1);
  CHECK(anticanonical_coefficient(FanoParams::make(3, 1, 2, 3)) == 0);
}

TEST_CASE("conductor") {
  CHECK(conductor(2, 3) == 4);
  CHECK(conductor(1, 2) == 1);
  CHECK(conductor(3, 2) == 3);
  CHECK_THROWS_AS(conductor(2, 6), Error);
  CHECK_THROWS_AS(conductor(3, 9), Error);
}

TEST_CASE("is_fano") {
  const auto a = is_fano(FanoParams::make(3, 1, 2, 4));
  CHECK(a.is_fano);
  REQUIRE(a.singularities.has_value());
  CHECK(a.singularities->kind != quotient::SingularityKind::NotCanonical);

  const auto b = is_fano(FanoParams::make(3, 1, 2, 3));
  CHECK_FALSE(b.is_fano);
  CHECK_FALSE(b.singularities.has_value());

  CHECK(is_fano(FanoParams::make(2, 1, 3, 3)).is_fano);
}

TEST_CASE("FanoParams::make rejects bad input") {
  CHECK_THROWS_AS(FanoParams::make(4, 1, 3, 3), Error);
  CHECK_THROWS_AS(FanoParams::make(3, 0, 2, 3), Error);
  CHECK_THROWS_AS(FanoParams::make(3, 1, 1, 3), Error);
  CHECK_THROWS_AS(FanoParams::make(3, 1, 6, 3), Error);
  CHECK_THROWS_AS(FanoParams::make(3, 1, 2, 0), Error);
}

TEST_CASE("Fano iff n >= m(q-1), and then canonical") {
  for (Int p : {2, 3, 5, 7}) {
    for (Int rExp = 1; rExp <= 2; ++rExp) {
      for (Int m = 2; m <= 8; ++m) {
        if (m % p == 0) continue;
        const Int c = conductor(m, arith::checked_pow(p, rExp));
        for (Int n = 1; n <= c + 3 && n <= 60; ++n) {
          const auto r = is_fano(FanoParams::make(p, rExp, m, n));
          CHECK(r.is_fano == (n >= c));
          CHECK(r.is_fano == (r.coefficient < 0));
        }
      }
    }
  }
}

TEST_CASE("min_counterexample_dim") {
  CHECK(min_counterexample_dim(3).dim == 5);
  CHECK(min_counterexample_dim(2).dim == 4);
  CHECK(min_counterexample_dim(7).dim == 13);
  CHECK(min_counterexample_dim(2) == MinDimension{2, 3, 1, 3, 4});
  for (Int p = 2; p <= 31; ++p) {
    if (!arith::is_prime(p)) continue;
    CHECK(min_counterexample_dim(p) == brute_min_dim(p));
    if (p > 2) CHECK(min_counterexample_dim(p).dim == 2 * p - 1);
  }
  CHECK_THROWS_AS(min_counterexample_dim(9), Error);
}

TEST_CASE("assemble_counterexample_2") {
  const auto a = assemble_counterexample_2(FanoParams::make(3, 1, 2, 4));
  CHECK(a.total_dim == 5);
  CHECK(a.base_dim == 1);
  CHECK(a.fibre_dim == 4);
  CHECK(a.kappa_total.bound == KappaBound::NegInfinity);
  CHECK(a.kappa_total.has_certified_evidence());
  CHECK(a.kappa_base.bound == KappaBound::Exactly);
  CHECK(a.kappa_base.value == 1);
  CHECK(a.violated_inequality == kViolatedInequality);

  CHECK(assemble_counterexample_2(FanoParams::make(2, 1, 3, 3)).total_dim == 4);
  CHECK(assemble_counterexample_2(FanoParams::make(5, 1, 2, 8)).total_dim == 9);

  try {
    assemble_counterexample_2(FanoParams::make(3, 1, 2, 3));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
}
