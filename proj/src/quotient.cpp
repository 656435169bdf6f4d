#include "kappacert/quotient.hpp"

#include <algorithm>
#include <set>

namespace kappacert::quotient {

using arith::checked_add;
using arith::checked_mul;

namespace {

SingularityKind kind_for(Int min_sum, Int q) {
  if (min_sum > q) return SingularityKind::Terminal;
  if (min_sum == q) return SingularityKind::CanonicalNotTerminal;
  return SingularityKind::NotCanonical;
}

arith::PrimePower require_prime_power(Int q) {
  auto pp = arith::as_prime_power(q);
  if (!pp) fail(ErrorKind::InvalidInput, "q = " + std::to_string(q) + " is not a prime power");
  return *pp;
}

void require_chart_inputs(Int m, Int q) {
  const auto pp = require_prime_power(q);
  if (m < 1) fail(ErrorKind::InvalidInput, "m must be positive");
  if (m % pp.prime == 0) {
    fail(ErrorKind::InvalidInput, "p = " + std::to_string(pp.prime) + " divides m = " + std::to_string(m));
  }
}

}  // namespace

CyclicQuotient::CyclicQuotient(Int q, std::vector<Int> weights) : q_(q), p_(0), weights_(std::move(weights)) {
  p_ = require_prime_power(q).prime;
  if (weights_.empty()) fail(ErrorKind::InvalidInput, "a cyclic quotient needs at least one weight");
  for (Int& w : weights_) {
    const Int original = w;
    w = arith::residue(w, q_).value;
    if (w % p_ == 0) {
      fail(ErrorKind::InvalidInput, "weight " + std::to_string(original) + " is not a unit modulo " +
                                        std::to_string(q_));
    }
  }
}

CyclicQuotient CyclicQuotient::sorted() const {
  auto w = weights_;
  std::sort(w.begin(), w.end());
  return CyclicQuotient(q_, std::move(w));
}

SingularityClass reid_tai(const CyclicQuotient& cq) {
  const Int q = cq.q();
  SingularityClass out;
  std::optional<Int> best;
  for (Int j = 1; j < q; ++j) {
    Int s = 0;
    for (Int w : cq.weights()) s = checked_add(s, arith::residue(checked_mul(j, w), q).value);
    if (!best || s < *best) {
      best = s;
      out.witness = j;
    }
  }
  // q >= 2, so the loop ran at least once.
  out.min_sum = *best;
  out.kind = kind_for(out.min_sum, q);
  if (out.kind == SingularityKind::Terminal) out.witness.reset();
  return out;
}

Rational min_age(const CyclicQuotient& cq) { return Rational(reid_tai(cq).min_sum, cq.q()); }

SingularityClass box_points_oracle(const CyclicQuotient& cq) {
  const Int q = cq.q();
  std::vector<Rational> generator;
  for (Int w : cq.weights()) generator.emplace_back(w, q);

  // Walk the cyclic group of box points by repeated addition modulo Z^n.
  const Rational zero(0), one(1);
  std::vector<Rational> point(generator.size(), zero);
  std::optional<Rational> best_age;
  std::optional<Int> best_index;
  for (Int k = 1; k < q; ++k) {
    Rational age(0);
    bool origin = true;
    for (std::size_t i = 0; i < point.size(); ++i) {
      point[i] += generator[i];
      if (point[i] >= one) point[i] -= one;
      ensure(point[i] >= zero && point[i] < one, "box point left the unit box");
      origin = origin && point[i] == zero;
      age += point[i];
    }
    ensure(!origin, "lattice generator has order below q");
    if (!best_age || age < *best_age) {
      best_age = age;
      best_index = k;
    }
  }

  SingularityClass out;
  if (*best_age > one) {
    out.kind = SingularityKind::Terminal;
  } else if (*best_age == one) {
    out.kind = SingularityKind::CanonicalNotTerminal;
    out.witness = best_index;
  } else {
    out.kind = SingularityKind::NotCanonical;
    out.witness = best_index;
  }
  const Rational scaled = *best_age * q;
  ensure(scaled.denominator() == 1, "minimal age times q is not an integer");
  out.min_sum = scaled.numerator();
  return out;
}

CyclicQuotient chart_weights(Int m, Int q, std::span<const ChartFlag> pattern) {
  require_chart_inputs(m, q);
  const Int r = arith::decompose_m(m, q).r;
  std::vector<Int> weights{1};
  for (ChartFlag flag : pattern) {
    const Int r_i = flag == ChartFlag::R ? r : 1;
    const Int m_i = flag == ChartFlag::R ? 1 : r;
    ensure(checked_add(m, checked_mul(r_i, m_i)) % q == 0, "q does not divide m + r_i m_i");
    weights.push_back(m_i);
  }
  return CyclicQuotient(q, std::move(weights));
}

std::vector<CyclicQuotient> enumerate_charts(Int n, Int m, Int q) {
  if (n < 2) fail(ErrorKind::InvalidInput, "enumerate_charts needs n >= 2");
  require_chart_inputs(m, q);
  const Int flags = n - 1;

  // Sorted weights depend only on how many flags are One, so one pattern per
  // count covers every multiset the 2^(n-1) patterns produce.
  std::set<std::vector<Int>> seen;
  for (Int ones = 0; ones <= flags; ++ones) {
    std::vector<ChartFlag> pattern(static_cast<std::size_t>(flags), ChartFlag::R);
    std::fill_n(pattern.begin(), ones, ChartFlag::One);
    seen.insert(chart_weights(m, q, pattern).sorted().weights());
  }
  std::vector<CyclicQuotient> out;
  for (const auto& w : seen) out.emplace_back(q, w);
  return out;
}

std::vector<ChartClassification> classify_charts(Int n, Int m, Int q) {
  std::vector<ChartClassification> out;
  for (auto& chart : enumerate_charts(n, m, q)) {
    auto cls = reid_tai(chart);
    out.push_back({std::move(chart), cls});
  }
  return out;
}

SingularityClass classify_Y(Int n, Int m, Int q) {
  const auto charts = classify_charts(n, m, q);
  const auto worst = std::min_element(charts.begin(), charts.end(), [](const auto& a, const auto& b) {
    return a.singularity.min_sum < b.singularity.min_sum;
  });
  const SingularityClass out = worst->singularity;
  if (n >= q) ensure(out.kind != SingularityKind::NotCanonical, "chart with n >= q is not canonical");
  if (n > q) ensure(out.kind == SingularityKind::Terminal, "chart with n > q is not terminal");
  return out;
}

std::string to_string(SingularityKind k) {
  switch (k) {
    case SingularityKind::NotCanonical: return "NotCanonical";
    case SingularityKind::CanonicalNotTerminal: return "CanonicalNotTerminal";
    case SingularityKind::Terminal: return "Terminal";
  }
  return "?";
}

std::string to_string(ChartFlag f) { return f == ChartFlag::R ? "R" : "One"; }

}  // namespace kappacert::quotient
