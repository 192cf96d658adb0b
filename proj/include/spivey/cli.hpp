#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "spivey/identities.hpp"
#include "spivey/moments.hpp"

namespace spivey::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // identity or assertion failure
inline constexpr int kExitUsage = 2;    // usage or parse error
inline constexpr int kExitIo = 3;       // I/O error

enum class Command { table, verify, bench };
enum class OutputFormat { json, csv };

struct RunConfig {
  Command command = Command::verify;
  std::string family;                   // table
  std::vector<IdentityId> identities;   // verify
  std::vector<std::string> rv_specs;
  std::vector<RandomVariableModel> rvs;
  unsigned n_max = 6;
  unsigned l_max = 6;
  unsigned j_max = 6;
  unsigned sum_max = 6;
  std::vector<unsigned> r_values;
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> out_path;
  unsigned workers = 1;
  bool with_timing = false;
  bool self_test_mismatch = false;
};

/// Table families accepted by --family.
const std::vector<std::string>& table_families();

/// Parses arguments (without the program name) and dispatches. Regular
/// output goes to `out`, diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_table(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_bench(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace spivey::cli
