#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kappacert/json_io.hpp"

namespace kappacert::cli {

enum ExitCode : int {
  kVerified = 0,
  kInconclusive = 1,
  kInvalidParameters = 2,
  kInconsistent = 3,
  kUsage = 64,
};

/// A command's JSON document and the exit code it maps to.
struct Outcome {
  json document;
  int exit_code = kVerified;
};

Outcome cmd_tango(Int p, Int e, Int l);
Outcome cmd_raynaud(Int p, Int e, Int l, Int m, Int n_max);
Outcome cmd_quotient(Int q, const std::vector<Int>& weights, bool oracle);
Outcome cmd_quotient_charts(Int n, Int m, Int q, bool oracle);
/// m = 0 selects the dimension-minimizing parameters for p; n = 0 means m(q-1).
Outcome cmd_fano(Int p, Int m, Int rExp, Int n);
Outcome cmd_search(const std::vector<Int>& primes, int jobs);

/// Markdown view of a command document. Everything shown is read back out of
/// the JSON, never recomputed.
std::string render_markdown(const json& document);

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kappacert::cli
