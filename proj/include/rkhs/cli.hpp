#pragma once

#include <cstdint>
#include <iosfwd>
#include <json.hpp>
#include <string>

namespace rkhs {

struct RunConfig {
  std::string command;  // gen-data | fit | verify | evolve | figure
  std::string family;  // empty: fock-classical for gen-data, all for verify
  int n = 10;
  double a = 2.0;
  double lambda = 1.0;
  double q = 2.0;
  int p = 1;
  double gamma = 1.4142135623730951;
  std::string kernel;  // JSON kernel spec for fit
  int k = 0;
  double t = 0.5;
  double xmin = -16.0;
  double xmax = 16.0;
  int points = 2048;
  std::string in;
  std::string out;  // empty: stdout
  std::string format = "csv";
  std::string script;
  std::string which = "ex1";
  std::string precision = "auto";
  std::uint64_t seed = 42;
};

/// Overlays the keys of a JSON object onto `base`. Unknown keys and type
/// mismatches raise ErrorKind::config.
RunConfig merge_config(const nlohmann::json& j, RunConfig base);

/// Executes one command; throws rkhs::Error on failure.
void run(const RunConfig& config, std::ostream& out);

/// Command-line entry point. Exit status 0 on success, 1 with
/// {"error": kind, "message": ...} on stderr for library errors, 2 for
/// command-line or config parse errors.
int cli_main(int argc, char** argv);

}  // namespace rkhs
