#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "clonebound/pauli_algebra.hpp"
#include "clonebound/serialization.hpp"

namespace clonebound::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

enum class OutputFormat { Json, Csv };

struct RunConfig {
  std::string subcommand;
  AnyClonerParams params = ClonerParams{2.0 / 3.0, 1.0 / 3.0, 0.0};
  BlochVector axis_a = kAxisZ;
  BlochVector axis_b = kAxisX;
  BlochVector input = kAxisZ;
  std::uint64_t shots = 100000;
  std::uint64_t seed = 1;
  int resolution = 2001;        // optimize
  int sweep_resolution = 13;    // sweep; 13 puts (2/3, 1/3, 0) on the grid
  std::string method = "grid";  // optimize: grid (both routes) or closed_form
  std::optional<OutputFormat> output_format;  // json, except csv for sweep
  std::optional<std::string> output_path;
};

// Defaults as written to config/defaults.json.
nlohmann::json defaults_as_json();

// Runs `clone-bound <args...>` (args excludes the program name). Reports go to
// `out` (or --out), diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clonebound::cli
