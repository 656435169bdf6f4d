#pragma once

#include <optional>

#include "kappacert/arith.hpp"
#include "kappacert/quotient.hpp"
#include "kappacert/report.hpp"

namespace kappacert::fano {

/// Parameters of Y(n, m, q), the normalization of P^n in the function field
/// of G^n where G is the regular model of u^q = x^m + t over k(t).
struct FanoParams {
  Int p = 0;
  Int rExp = 0;
  Int q = 0;  // p^rExp
  Int m = 0;
  Int n = 0;

  /// Throws InvalidInput unless p is prime, rExp >= 1, m >= 2, p does not
  /// divide m and n >= 1.
  static FanoParams make(Int p, Int rExp, Int m, Int n);

  friend bool operator==(const FanoParams&, const FanoParams&) = default;
};

/// Coefficient of the pulled-back hyperplane in ν^*K: mq - m - n - 1.
Int anticanonical_coefficient(const FanoParams& fp);

/// m(q - 1). Requires q a prime power and p not dividing m.
Int conductor(Int m, Int q);

struct FanoResult {
  bool is_fano = false;
  Int coefficient = 0;
  Int conductor = 0;
  std::optional<quotient::SingularityClass> singularities;

  friend bool operator==(const FanoResult&, const FanoResult&) = default;
};

/// Fano iff n >= m(q-1); both that test and the sign of the anticanonical
/// coefficient are evaluated and must agree.
FanoResult is_fano(const FanoParams& fp);

struct MinDimension {
  Int p = 0;
  Int m = 0;
  Int rExp = 0;
  Int n = 0;
  Int dim = 0;

  friend bool operator==(const MinDimension&, const MinDimension&) = default;
};

/// Smallest total dimension m(q-1) + 1 over q = p^rExp and m >= 2 prime to p
/// with n = m(q-1) >= 2.
MinDimension min_counterexample_dim(Int p);

/// The fibration X^{(n)} -> C over a curve of genus >= 2.
CounterexampleReport assemble_counterexample_2(const FanoParams& fp);

}  // namespace kappacert::fano
