#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "kappacert/arith.hpp"

namespace kappacert::quotient {

using Rational = boost::rational<Int>;

/// The cyclic quotient singularity A^n / (1/q)(w_0, ..., w_{n-1}).
///
/// q must be a power of a prime p and every weight a unit mod q. Weights are
/// stored as residues in [1, q) in the order given.
class CyclicQuotient {
 public:
  /// Throws InvalidInput if q is not a prime power, the weight list is empty,
  /// or some weight is divisible by p.
  CyclicQuotient(Int q, std::vector<Int> weights);

  Int q() const { return q_; }
  Int p() const { return p_; }
  std::size_t dimension() const { return weights_.size(); }
  const std::vector<Int>& weights() const { return weights_; }

  /// Same singularity with weights sorted ascending.
  CyclicQuotient sorted() const;

  friend bool operator==(const CyclicQuotient&, const CyclicQuotient&) = default;

 private:
  Int q_;
  Int p_;
  std::vector<Int> weights_;
};

/// Ordered from worst to best.
enum class SingularityKind { NotCanonical, CanonicalNotTerminal, Terminal };

struct SingularityClass {
  SingularityKind kind = SingularityKind::Terminal;
  /// The smallest j in [1, q) attaining min_sum; present unless Terminal.
  std::optional<Int> witness;
  /// min over j of sum_i residue(j w_i, q).
  Int min_sum = 0;

  friend bool operator==(const SingularityClass&, const SingularityClass&) = default;
};

/// Canonical iff sum_i residue(j w_i, q) >= q for all j = 1..q-1, terminal iff > q.
SingularityClass reid_tai(const CyclicQuotient& cq);

/// min_j age(j), with age(j) = sum_i residue(j w_i, q) / q.
Rational min_age(const CyclicQuotient& cq);

/// Brute force over the nonzero points of the lattice Z^n + Z (1/q)(w) that lie
/// in the half-open unit box, comparing their coordinate sums with 1.
SingularityClass box_points_oracle(const CyclicQuotient& cq);

enum class ChartFlag { R, One };

/// Weights (1, m_1, ..., m_{n-1}) of the chart singularity for one flag
/// pattern: R gives r_i = r, m_i = 1; One gives r_i = 1, m_i = r, where
/// m = a q - r.
CyclicQuotient chart_weights(Int m, Int q, std::span<const ChartFlag> pattern);

/// Distinct chart singularities over all 2^(n-1) flag patterns, with weights
/// sorted ascending and the list sorted lexicographically.
std::vector<CyclicQuotient> enumerate_charts(Int n, Int m, Int q);

struct ChartClassification {
  CyclicQuotient chart;
  SingularityClass singularity;
};

std::vector<ChartClassification> classify_charts(Int n, Int m, Int q);

/// Worst class over all charts of Y(n, m, q).
SingularityClass classify_Y(Int n, Int m, Int q);

std::string to_string(SingularityKind k);
std::string to_string(ChartFlag f);

}  // namespace kappacert::quotient
