// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kappacert/cli.hpp"
#include "kappacert/fano.hpp"
#include "kappacert/quotient.hpp"
#include "kappacert/raynaud.hpp"
#include "kappacert/tango.hpp"

using namespace kappacert;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0 means no limit
  std::function<Verdict()> body;
};

std::vector<Int> prime_powers_up_to(Int bound) {
  std::vector<Int> out;
  for (Int q = 2; q <= bound; ++q) {
    if (arith::as_prime_power(q)) out.push_back(q);
  }
  return out;
}

std::vector<tango::RaynaudParams> valid_params(Int p_max, Int e_max) {
  std::vector<tango::RaynaudParams> out;
  for (Int p = 2; p <= p_max; ++p) {
    if (!arith::is_prime(p)) continue;
    for (Int e = 1; e <= e_max; ++e) {
      for (Int l = 2; l <= p + 1; ++l) {
        if (e % p != 0 && e % l == 0 && (p + 1) % l == 0) out.push_back(tango::validate_params(p, e, l));
      }
    }
  }
  return out;
}

std::string describe(const tango::RaynaudParams& params) {
  return "(p=" + std::to_string(params.p) + ", e=" + std::to_string(params.e) + ", l=" + std::to_string(params.l) + ")";
}

Verdict all_ones_law() {
  Verdict v;
  int cases = 0;
  for (Int q : prime_powers_up_to(64)) {
    for (Int n = 1; n <= 2 * q; ++n) {
      const auto s = quotient::reid_tai(quotient::CyclicQuotient(q, std::vector<Int>(n, 1)));
      const bool canonical = s.kind != quotient::SingularityKind::NotCanonical;
      const bool terminal = s.kind == quotient::SingularityKind::Terminal;
      v.require(canonical == (n >= q) && terminal == (n > q),
                "q=" + std::to_string(q) + " n=" + std::to_string(n) + " gave " + quotient::to_string(s.kind));
      ++cases;
    }
  }
  if (v.ok) v.detail = std::to_string(cases) + " cases";
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  std::mt19937_64 rng(1000);
  const auto qs = prime_powers_up_to(49);
  std::uniform_int_distribution<std::size_t> pick_q(0, qs.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_n(1, 6);
  int agree = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Int q = qs[pick_q(rng)];
    const Int p = arith::as_prime_power(q)->prime;
    std::uniform_int_distribution<Int> pick_w(1, q - 1);
    std::vector<Int> w;
    const std::size_t n = pick_n(rng);
    while (w.size() < n) {
      const Int x = pick_w(rng);
      if (x % p != 0) w.push_back(x);
    }
    const quotient::CyclicQuotient cq(q, w);
    const bool same = quotient::reid_tai(cq) == quotient::box_points_oracle(cq);
    v.require(same, "disagreement at q=" + std::to_string(q));
    agree += same;
  }
  if (v.ok) v.detail = std::to_string(agree) + "/1000 agree";
  return v;
}

Verdict min_dimensions() {
  Verdict v;
  for (Int p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    const Int dim = fano::min_counterexample_dim(p).dim;
    v.require(dim == 2 * p - 1, "p=" + std::to_string(p) + " gave " + std::to_string(dim));
  }
  const Int two = fano::min_counterexample_dim(2).dim;
  v.require(two == 4, "p=2 gave " + std::to_string(two));
  if (v.ok) v.detail = "2p-1 for 3..31, 4 for p=2";
  return v;
}

Verdict fano_boundary() {
  Verdict v;
  int cases = 0;
  for (Int q : prime_powers_up_to(32)) {
    const auto pp = *arith::as_prime_power(q);
    for (Int m = 1; m <= 15; ++m) {
      if (m % pp.prime == 0) continue;
      // m = 1 lies outside FanoParams::make; the coefficient formula is still defined.
      const fano::FanoParams fp{pp.prime, pp.exponent, q, m, fano::conductor(m, q)};
      v.require(fano::anticanonical_coefficient(fp) == -1,
                "m=" + std::to_string(m) + " q=" + std::to_string(q));
      ++cases;
    }
  }
  if (v.ok) v.detail = std::to_string(cases) + " cases";
  return v;
}

Verdict kappa_certificates() {
  Verdict v;
  for (auto [p, l, e] : {std::tuple{2, 3, 3}, std::tuple{3, 2, 2}, std::tuple{5, 2, 2}, std::tuple{7, 2, 2}}) {
    const auto params = tango::validate_params(p, e, l);
    const Int m = params.p * params.l + 1;
    const auto cert = raynaud::certify_kappa_negative(params, m);
    v.require(cert.status == raynaud::CertificateStatus::NegInfinityAllN, describe(params) + " not certified");
    for (Int n = 1; n <= 20; ++n) {
      const auto split = raynaud::frobenius_split(raynaud::pushforward_product(params, m, n), params);
      v.require(raynaud::h0_status(split).kind == raynaud::H0Kind::AllNegative,
                describe(params) + " has a nonnegative degree at n=" + std::to_string(n));
    }
  }
  if (v.ok) v.detail = "4 triples, n = 1..20";
  return v;
}

Verdict surface_branch() {
  Verdict v;
  int cases = 0;
  for (const auto& params : valid_params(13, 12)) {
    const bool exceptional = (params.p == 2 && params.l == 3) || (params.p == 3 && params.l == 2);
    const auto kind = raynaud::kappa_surface(params).kind;
    v.require((kind == raynaud::SurfaceKappa::KappaOne) == exceptional, describe(params));
    ++cases;
  }
  if (v.ok) v.detail = std::to_string(cases) + " triples";
  return v;
}

Verdict structural_conservation() {
  Verdict v;
  const auto all = valid_params(13, 12);
  std::mt19937_64 rng(500);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<Int> pick_m(1, 3), pick_n(1, 5);
  int full_regime = 0;
  constexpr int kTrials = 600;
  for (int trial = 0; trial < kTrials; ++trial) {
    const auto& params = all[pick(rng)];
    const Int m = pick_m(rng), n = pick_n(rng);
    const auto sum = raynaud::pushforward_product(params, m, n);
    const auto where = describe(params) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
    v.require(sum.rank() == raynaud::frobenius_split(sum, params).cardinality(), "rank mismatch at " + where);
    if (n * params.qS >= params.r * (params.l - 1)) {
      ++full_regime;
      v.require(sum.summand_count() == BigInt(arith::checked_pow(params.l, m)), "summand count at " + where);
    }
  }
  if (v.ok) v.detail = std::to_string(kTrials) + " instances, " + std::to_string(full_regime) + " in the l^m regime";
  return v;
}

Verdict class_lattice() {
  Verdict v;
  int cases = 0;
  for (const auto& params : valid_params(31, 20)) {
    v.require(tango::class_identities(params).all_passed(), "identity failed at " + describe(params));
    v.require(tango::check_KC_equals_pD(params), "K_C != pD at " + describe(params));
    ++cases;
  }
  if (v.ok) v.detail = std::to_string(cases) + " triples";
  return v;
}

Verdict cli_determinism() {
  Verdict v;
  const auto once = [](int jobs) {
    std::ostringstream out, err;
    const int code = cli::run({"search", "--p", "3,5,7", "--jobs", std::to_string(jobs)}, out, err);
    return std::pair{code, out.str()};
  };
  const auto first = once(1);
  v.require(first.first == 0, "search exited " + std::to_string(first.first));
  for (int jobs : {1, 2, 3, 4, 1}) v.require(once(jobs).second == first.second, "output changed with --jobs");

  const auto golden = std::filesystem::path(KAPPACERT_GOLDEN_DIR) / "search_3_5_7.json";
  std::ifstream in(golden, std::ios::binary);
  v.require(static_cast<bool>(in), "missing " + golden.string());
  std::ostringstream stored;
  stored << in.rdbuf();
  v.require(stored.str() == first.second, "differs from " + golden.filename().string());
  if (v.ok) v.detail = "6 runs byte-identical, golden matches";
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "all-ones Reid-Tai law", 1.0, all_ones_law},
      {2, "criterion vs box-point oracle", 5.0, oracle_equivalence},
      {3, "minimal counterexample dimensions", 1.0, min_dimensions},
      {4, "Fano boundary coefficient", 0.0, fano_boundary},
      {5, "kappa = -inf certificates", 10.0, kappa_certificates},
      {6, "surface Kodaira dimension branch", 0.0, surface_branch},
      {7, "rank and summand conservation", 0.0, structural_conservation},
      {8, "class lattice identities", 0.0, class_lattice},
      {9, "search determinism and golden file", 0.0, cli_determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.ok && c.limit_seconds > 0 && secs >= c.limit_seconds) {
      v.ok = false;
      v.detail = "over the " + std::to_string(c.limit_seconds).substr(0, 4) + " s limit";
    }
    failures += !v.ok;
    std::printf("[%s] %d. %-36s %7.3f s  %s\n", v.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
