#pragma once

// Command runners behind the CLI. Each returns an exit status, a structured
// report (ordered JSON), a human-readable text rendering and, for trump and
// grid, CSV grid data. Reports are deterministic; the timing field is added
// by the caller.

#include <optional>
#include <string>

#include <json.hpp>

#include "catmaj/dirichlet.hpp"
#include "catmaj/instance.hpp"
#include "catmaj/polynomial.hpp"

namespace catmaj {

using Json = nlohmann::ordered_json;

enum class Format { Text, Structured, Csv };

namespace exit_code {
inline constexpr int kHolds = 0;
inline constexpr int kRefuted = 1;
inline constexpr int kInconclusive = 2;
inline constexpr int kInputError = 3;
}  // namespace exit_code

struct RunOptions {
  int r = 2;
  Rational q = 2;
  std::size_t n_max = kDefaultPolyaMax;
  double window = kDefaultPositivityWindow;
  /// Float comparison tolerance (majorize) and boundary tolerance (trump).
  std::optional<double> tolerance;
};

struct CommandResult {
  int exit_code = exit_code::kHolds;
  Json report;
  std::string text;
  std::optional<std::string> csv;
};

CommandResult run_majorize(const Instance& inst, const RunOptions& opt);
CommandResult run_trump(const Instance& inst, const RunOptions& opt);
CommandResult run_certify(const Instance& inst, const RunOptions& opt);
CommandResult run_rconvex(const Instance& inst, const RunOptions& opt);
CommandResult run_grid(const Instance& inst, const RunOptions& opt);

/// Final output; timing is appended for text and structured formats.
/// Throws InvalidArgument when CSV is requested for a command without a grid.
std::string render(const CommandResult& result, Format format, std::optional<double> timing_ms);

}  // namespace catmaj
