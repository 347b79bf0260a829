#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqlv/trace.hpp"

namespace eqlv {

/// Bad flag, bad config file or an inconsistent combination. Exit status 3.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kReportSchema = 1;

/// One pipeline invocation. Every field has a canonical text form, so a
/// config survives the trip through a key-value file or a report.
struct RunConfig {
  std::string command;           // zeta | lvalue | artin | class-formula | trace-check
  std::uint32_t q = 2;           // base field F_q
  std::string context = "trivial";  // trivial | constant | cyclotomic
  int m = 3;                     // constant family degree
  std::string conductor = "t^2 + t + 1";  // cyclotomic family
  int carlitz = 1;               // module C^{(x)n}
  std::string module;            // explicit A_0..A_r as JSON, overrides carlitz
  int prec = 8;                  // N
  int degree_bound = -1;         // D; -1 picks it from N
  std::string rep = "all";       // all | trivial | regular | chi:<i>
  std::string variant = "equivariant";  // lvalue: equivariant | hom | tensor | artin
  std::string demo = "qpower";   // trace-check: qpower | random | instance
  std::string instance;          // trace-check instance as JSON
  bool equivariant = false;      // trace-check random: G = Z/3
  std::uint64_t seed = 1;
  int count = 1;                 // trace-check random: number of instances
  std::string output;            // report path; empty means stdout only

  /// Canonical key-value form (sorted keys, output omitted).
  std::map<std::string, std::string> to_kv() const;
  static RunConfig from_kv(const std::map<std::string, std::string>& kv);
  /// Cross-field checks that need no heavy computation. Throws ConfigError.
  void validate() const;
};

/// `key = value` lines; '#' starts a comment; values may be double-quoted.
std::map<std::string, std::string> parse_kv_text(const std::string& text);
std::string render_kv_text(const std::map<std::string, std::string>& kv);

struct RunResult {
  Verdict verdict = Verdict::Inconclusive;
  std::string json;     // byte-stable report
  std::string summary;  // human-readable
};

/// Executes the pipeline. Throws ConfigError on usage errors; precision
/// exhaustion becomes an inconclusive verdict.
RunResult run(const RunConfig& cfg);

int exit_code(Verdict v);

}  // namespace eqlv
