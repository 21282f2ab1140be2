#pragma once

// Command-line front end. Kept as a library so tests can drive it in-process.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "robinc/serialization.hpp"

namespace robinc::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2, kSolverFailure = 3 };

struct ExperimentConfig {
  std::string set = "disk";
  std::string generator = "fekete";  // fekete | leja | roots_of_unity | file
  std::string points_path;
  std::vector<int> n_values;
  std::string phi = "re1";
  std::optional<double> radius;  // nullopt means auto
  std::string out;
  std::string format;  // csv | json, empty for the subcommand default
  int mesh = CompactSet::kDefaultMesh;
  std::uint64_t seed = 1;
  std::optional<Complex> seed_point;
  int k_lo = 2;
  int k_hi = 30;
  int max_iters = 200;
  std::string plot;
};

inline constexpr int kMinSweepN = 2;
inline constexpr int kMaxSweepN = 512;

/// "a..b" or "a..b:step", bounds checked against [2, 512].
std::vector<int> parse_n_sweep(const std::string& text);
/// "a..b" for --k.
std::pair<int, int> parse_k_range(const std::string& text);
/// "1", "-0.5", "0.3,0.4" or "[0.3, 0.4]".
Complex parse_complex(const std::string& text);

/// Strict: unknown keys are a usage error.
ExperimentConfig experiment_config_from_json(const Json& j);

struct PlotPoint {
  int n = 0;
  double quantity = 0.0;
  double paper_rate = 0.0;
};

/// (n, quantity, paper_rate, fitted_constant = quantity / paper_rate).
CsvTable emit_plotdata(const std::vector<PlotPoint>& sweep);

/// Configuration for one n from the chosen generator.
PointConfiguration generate(const ExperimentConfig& cfg, const CompactSet& set, int n);

struct Outcome {
  int exit_code = kOk;
  std::string body;  // what goes to --out or stdout
  Json violations = Json::array();
};

/// Run one subcommand: points | energy | discrepancy | growth | schur | audit.
Outcome run(const std::string& subcommand, const ExperimentConfig& cfg);

/// Full argv entry point; writes artifacts and diagnostics, returns the exit code.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace robinc::cli
