#include "kappacert/cli.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

namespace kappacert::cli {

namespace {

json envelope(const std::string& command, json inputs) {
  return json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"results", json::object()},
              {"provenance", json::array()}};
}

bool is_provenance(const json& j) {
  return j.is_object() && j.size() == 2 && j.contains("kind") && j.contains("anchor") && j["kind"].is_string() &&
         (j["kind"] == "Certified" || j["kind"] == "Cited");
}

void collect_provenance(const json& node, const std::string& path, json& out) {
  if (is_provenance(node)) {
    out.push_back({{"fact", path}, {"kind", node["kind"]}, {"anchor", node["anchor"]}});
    return;
  }
  if (node.is_object()) {
    for (const auto& [key, child] : node.items()) collect_provenance(child, path + "." + key, out);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      collect_provenance(node[i], path + "[" + std::to_string(i) + "]", out);
    }
  }
}

// Fills the top-level provenance list from every provenance record in results.
void finalize(json& doc) {
  json prov = json::array();
  collect_provenance(doc["results"], "results", prov);
  std::sort(prov.begin(), prov.end(), [](const json& a, const json& b) { return a["fact"] < b["fact"]; });
  doc["provenance"] = std::move(prov);
}

Outcome guarded(const std::string& command, json inputs, const std::function<int(json&)>& body) {
  Outcome out{envelope(command, std::move(inputs)), kVerified};
  try {
    out.exit_code = body(out.document["results"]);
  } catch (const Error& e) {
    out.document["results"] = json{{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
    out.exit_code = e.is_internal() ? kInconsistent : kInvalidParameters;
  }
  finalize(out.document);
  return out;
}

tango::RaynaudParams canonical_raynaud_params(Int p) {
  const Int l = p == 2 ? 3 : 2;
  for (Int e = l;; e += l) {
    if (e % p != 0 && p * e >= 4) return tango::validate_params(p, e, l);
  }
}

json search_entry(Int p) {
  const auto min_dim = fano::min_counterexample_dim(p);
  const auto fp = fano::FanoParams::make(p, min_dim.rExp, min_dim.m, min_dim.n);
  const auto params = canonical_raynaud_params(p);
  return json{{"p", p},
              {"min_dimension", min_dim},
              {"fano_params", fp},
              {"fano_report", fano::assemble_counterexample_2(fp)},
              {"raynaud_params", params},
              {"raynaud_report", raynaud::assemble_counterexample_1(params, 1)}};
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const json& node, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (node.is_object()) {
    for (const auto& [key, child] : node.items()) flatten(child, path.empty() ? key : path + "." + key, out);
  } else if (node.is_array()) {
    if (node.empty()) out.emplace_back(path, "[]");
    bool scalars = std::all_of(node.begin(), node.end(), [](const json& c) { return c.is_primitive(); });
    if (scalars && !node.empty()) {
      out.emplace_back(path, node.dump());
      return;
    }
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(path, scalar_text(node));
  }
}

std::string escape_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

std::vector<Int> unique_sorted(std::vector<Int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Outcome cmd_tango(Int p, Int e, Int l) {
  return guarded("tango", json{{"p", p}, {"e", e}, {"l", l}}, [&](json& results) {
    const auto params = tango::validate_params(p, e, l);
    const auto invariants = tango::curve_invariants(params);
    const bool kc = tango::check_KC_equals_pD(params);
    const auto identities = tango::class_identities(params);
    results["params"] = params;
    results["curve_invariants"] = invariants;
    results["kc_equals_pd"] = kc;
    results["class_identities"] = identities.checks;
    results["all_passed"] = kc && identities.all_passed();
    return kc && identities.all_passed() ? kVerified : kInconsistent;
  });
}

Outcome cmd_raynaud(Int p, Int e, Int l, Int m, Int n_max) {
  return guarded("raynaud", json{{"p", p}, {"e", e}, {"l", l}, {"m", m}, {"n_max", n_max}}, [&](json& results) {
    const auto params = tango::validate_params(p, e, l);
    if (m < 1) fail(ErrorKind::InvalidInput, "m must be positive");
    const auto cert = raynaud::certify_kappa_negative(params, m, n_max);
    const auto bounds = raynaud::m0_bounds(params);
    results["params"] = params;
    results["certificate"] = cert;
    results["kappa_surface"] = raynaud::kappa_surface(params);
    results["m0_bounds"] = bounds;
    results["counterexample"] =
        m <= bounds.upper ? json(raynaud::assemble_counterexample_1(params, m)) : json(nullptr);
    return cert.status == raynaud::CertificateStatus::NegInfinityAllN ? kVerified : kInconclusive;
  });
}

Outcome cmd_quotient(Int q, const std::vector<Int>& weights, bool oracle) {
  return guarded("quotient", json{{"q", q}, {"weights", weights}, {"oracle", oracle}}, [&](json& results) {
    const quotient::CyclicQuotient cq(q, weights);
    const auto cls = quotient::reid_tai(cq);
    const auto age = quotient::min_age(cq);
    results["quotient"] = cq;
    results["classification"] = cls;
    results["min_age"] = std::to_string(age.numerator()) + "/" + std::to_string(age.denominator());
    int code = kVerified;
    if (oracle) {
      const auto brute = quotient::box_points_oracle(cq);
      results["oracle"] = brute;
      results["oracle_agrees"] = brute == cls;
      if (!(brute == cls)) code = kInconsistent;
    }
    return code;
  });
}

Outcome cmd_quotient_charts(Int n, Int m, Int q, bool oracle) {
  return guarded("quotient", json{{"charts", true}, {"n", n}, {"m", m}, {"q", q}, {"oracle", oracle}},
                 [&](json& results) {
                   int code = kVerified;
                   json charts = json::array();
                   for (const auto& chart : quotient::classify_charts(n, m, q)) {
                     const auto age = quotient::min_age(chart.chart);
                     json row{{"quotient", chart.chart},
                              {"classification", chart.singularity},
                              {"min_age", std::to_string(age.numerator()) + "/" + std::to_string(age.denominator())}};
                     if (oracle) {
                       const auto brute = quotient::box_points_oracle(chart.chart);
                       row["oracle_agrees"] = brute == chart.singularity;
                       if (!(brute == chart.singularity)) code = kInconsistent;
                     }
                     charts.push_back(std::move(row));
                   }
                   results["charts"] = std::move(charts);
                   results["worst"] = quotient::classify_Y(n, m, q);
                   return code;
                 });
}

Outcome cmd_fano(Int p, Int m, Int rExp, Int n) {
  return guarded("fano", json{{"p", p}, {"m", m}, {"r", rExp}, {"n", n}}, [&](json& results) {
    const auto min_dim = fano::min_counterexample_dim(p);
    results["min_dimension"] = min_dim;
    fano::FanoParams fp;
    if (m == 0) {
      fp = fano::FanoParams::make(p, min_dim.rExp, min_dim.m, n == 0 ? min_dim.n : n);
    } else {
      const Int r = rExp == 0 ? 1 : rExp;
      const Int q = arith::checked_pow(p, r);
      fp = fano::FanoParams::make(p, r, m, n == 0 ? fano::conductor(m, q) : n);
    }
    const auto result = fano::is_fano(fp);
    results["params"] = fp;
    results["fano"] = result;
    results["report"] = result.is_fano ? json(fano::assemble_counterexample_2(fp)) : json(nullptr);
    return result.is_fano ? kVerified : kInconclusive;
  });
}

Outcome cmd_search(const std::vector<Int>& primes, int jobs) {
  const auto ps = unique_sorted(primes);
  return guarded("search", json{{"p", ps}}, [&](json& results) {
    if (ps.empty()) fail(ErrorKind::InvalidInput, "search needs at least one prime");
    std::vector<json> entries(ps.size());
    std::vector<std::exception_ptr> errors(ps.size());
    const auto worker = [&](std::size_t start, std::size_t stride) {
      for (std::size_t i = start; i < ps.size(); i += stride) {
        try {
          entries[i] = search_entry(ps[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    const auto threads = static_cast<std::size_t>(std::max(1, jobs));
    if (threads == 1) {
      worker(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
      for (auto& th : pool) th.join();
    }
    for (const auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }

    json rows = json::array();
    for (const auto& entry : entries) {
      for (const char* key : {"fano_report", "raynaud_report"}) {
        const auto& report = entry[key];
        rows.push_back({{"p", entry["p"]},
                        {"construction", report["construction"]},
                        {"total_dim", report["total_dim"]},
                        {"base_dim", report["base_dim"]}});
      }
    }
    std::sort(rows.begin(), rows.end(), [](const json& a, const json& b) {
      return std::tie(a["p"], a["construction"]) < std::tie(b["p"], b["construction"]);
    });
    results["entries"] = entries;
    results["rows"] = std::move(rows);
    return kVerified;
  });
}

std::string render_markdown(const json& doc) {
  std::ostringstream os;
  os << "# kappacert " << scalar_text(doc.at("command")) << "\n\n";
  os << "Schema version " << doc.at("schema_version").dump() << ".\n\n";

  os << "## Inputs\n\n| key | value |\n| --- | --- |\n";
  std::vector<std::pair<std::string, std::string>> cells;
  flatten(doc.at("inputs"), "", cells);
  for (const auto& [k, v] : cells) os << "| " << escape_cell(k) << " | " << escape_cell(v) << " |\n";

  const auto& results = doc.at("results");
  if (results.contains("rows")) {
    os << "\n## Counterexamples\n\n| p | construction | total dim | base dim |\n| --- | --- | --- | --- |\n";
    for (const auto& row : results["rows"]) {
      os << "| " << row["p"].dump() << " | " << scalar_text(row["construction"]) << " | "
         << row["total_dim"].dump() << " | " << row["base_dim"].dump() << " |\n";
    }
  }

  os << "\n## Results\n\n";
  cells.clear();
  flatten(results, "", cells);
  for (const auto& [k, v] : cells) os << "- `" << k << "`: " << v << "\n";

  const auto& prov = doc.at("provenance");
  if (!prov.empty()) {
    os << "\n## Provenance\n\n| fact | kind | statement |\n| --- | --- | --- |\n";
    for (const auto& entry : prov) {
      os << "| " << escape_cell(scalar_text(entry["fact"])) << " | " << scalar_text(entry["kind"]) << " | "
         << escape_cell(scalar_text(entry["anchor"])) << " |\n";
    }
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certificates for counterexamples to subadditivity of Kodaira dimension"};
  app.name("kappacert");
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  int jobs = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("--out", out_path, "Write the report to FILE instead of stdout");
  app.add_option("--jobs", jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);

  Int p = 0, e = 0, l = 0, m = 0, n = 0, q = 0, r = 0, n_max = 10;
  std::vector<Int> weights, primes;
  bool charts = false, oracle = false;

  auto* tango_cmd = app.add_subcommand("tango", "Curve invariants and divisor class identities")->fallthrough();
  tango_cmd->add_option("--p", p, "Prime p")->required();
  tango_cmd->add_option("--e", e, "Exponent e, prime to p and divisible by l")->required();
  tango_cmd->add_option("--l", l, "Divisor l >= 2 of p + 1")->required();

  auto* raynaud_cmd = app.add_subcommand("raynaud", "Kodaira dimension certificate for the fibre product X^(m)")
                          ->fallthrough();
  raynaud_cmd->add_option("--p", p, "Prime p")->required();
  raynaud_cmd->add_option("--e", e, "Exponent e")->required();
  raynaud_cmd->add_option("--l", l, "Divisor l of p + 1")->required();
  raynaud_cmd->add_option("--m", m, "Number of factors in the fibre product")->required();
  raynaud_cmd->add_option("--n-max", n_max, "Numeric check bound when m <= pl")->check(CLI::PositiveNumber);

  auto* quotient_cmd = app.add_subcommand("quotient", "Reid-Tai classification of a cyclic quotient")->fallthrough();
  quotient_cmd->add_option("--q", q, "Group order, a prime power")->required();
  quotient_cmd->add_option("--w", weights, "Comma-separated weights")->delimiter(',');
  quotient_cmd->add_flag("--charts", charts, "Classify every chart of Y(n, m, q)");
  quotient_cmd->add_option("--n", n, "Dimension of Y (with --charts)");
  quotient_cmd->add_option("--m", m, "Exponent m, prime to p (with --charts)");
  quotient_cmd->add_flag("--oracle", oracle, "Cross-check against the box-point oracle");

  auto* fano_cmd = app.add_subcommand("fano", "Fano test and minimal counterexample for Y(n, m, q)")->fallthrough();
  fano_cmd->add_option("--p", p, "Prime p")->required();
  fano_cmd->add_option("--m", m, "Exponent m; omitted selects the minimal example");
  fano_cmd->add_option("--r", r, "q = p^r");
  fano_cmd->add_option("--n", n, "Dimension; defaults to m(q-1)");

  auto* search_cmd = app.add_subcommand("search", "Counterexample catalog over a list of primes")->fallthrough();
  search_cmd->add_option("--p", primes, "Comma-separated primes")->delimiter(',')->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (quotient_cmd->parsed()) {
      if (charts && (n == 0 || m == 0)) throw CLI::ValidationError("--charts requires --n and --m");
      if (!charts && weights.empty()) throw CLI::ValidationError("--w is required without --charts");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kVerified;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kVerified;
  } catch (const CLI::Error& ex) {
    err << "error: " << ex.what() << "\n\n" << app.help();
    return kUsage;
  }

  Outcome outcome;
  if (tango_cmd->parsed()) {
    outcome = cmd_tango(p, e, l);
  } else if (raynaud_cmd->parsed()) {
    outcome = cmd_raynaud(p, e, l, m, n_max);
  } else if (quotient_cmd->parsed()) {
    outcome = charts ? cmd_quotient_charts(n, m, q, oracle) : cmd_quotient(q, weights, oracle);
  } else if (fano_cmd->parsed()) {
    outcome = cmd_fano(p, m, r, n);
  } else {
    outcome = cmd_search(primes, jobs);
  }

  const std::string text = format == "markdown" ? render_markdown(outcome.document) : outcome.document.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return kInvalidParameters;
    }
    file << text;
  }
  if (outcome.document["results"].contains("error")) {
    err << "error: " << scalar_text(outcome.document["results"]["error"]["message"]) << "\n";
  }
  return outcome.exit_code;
}

}  // namespace kappacert::cli
