#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fif/fixed_point.hpp"
#include "fif/quadrature.hpp"

namespace fifit {

/// Command-line problem description, validated at parse time: every stored
/// field already satisfies its component invariants.
struct RunConfig {
  double a = 0.0;
  double b = 1.0;
  std::optional<std::size_t> uniform_segments;
  std::optional<std::vector<double>> nodes;
  std::vector<double> scales;  // resolved per segment
  std::string target_spec;
  fif::QuadConfig quad{};
  fif::EvalConfig eval{};
  std::string out_coeffs = "coeffs.csv";
  std::string out_samples = "samples.csv";
  std::string out_report = "report.json";
  unsigned threads = 1;

  std::size_t segments() const {
    return uniform_segments ? *uniform_segments : nodes->size() - 1;
  }
};

/// Bad flags or invalid configuration; the caller should exit with code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was requested; `text` is the usage message.
struct HelpRequested {
  std::string text;
};

/// Parses and validates command-line arguments (program name excluded).
/// Throws UsageError on any violation and HelpRequested for --help.
RunConfig parse_args(const std::vector<std::string>& args);

}  // namespace fifit
