#ifndef SCHREIER_REPORT_IO_HPP
#define SCHREIER_REPORT_IO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "schreier/acts.hpp"
#include "schreier/coset_graph.hpp"
#include "schreier/presentation.hpp"

namespace schreier {

using Json = nlohmann::json;

const char* library_version();

/// Malformed input or unusable configuration: maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  Json input;
  std::string input_name = "<inline>";
  int cap = 8;
  int radius = 4;
  long long budget = 200000;
  uint64_t seed = 12345;
  std::string format = "json";
};

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 verification failed, 2 usage/input error
  std::string output;
};

/// Dispatch one subcommand; never throws, errors are rendered into the
/// output with exit code 2.
RunResult run_command(const RunConfig& config);

// input parsers, shared by the CLI and the test suites
FreeAct parse_act_input(const Json& j);
Subact parse_subact(const Json& j, const FreeAct& act, const std::string& key);
std::pair<int, std::vector<GroupWord>> parse_group_input(const Json& j);
Presentation parse_presentation_input(const Json& j);

struct RegressResult {
  int exit_code = 0;
  std::string table;   // deterministic pass/fail table
  std::string timing;  // aggregate timing, kept out of the table
};
RegressResult run_regress(const std::string& corpusDir);

}  // namespace schreier

#endif
