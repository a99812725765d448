#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fideal::cli {

enum class Subcommand { kCheck, kFvector, kDecompose, kHilbert, kCensus, kSuite };
enum class Format { kText, kJson };

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotFIdeal = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitTheoremViolation = 3;

struct CliConfig {
  Subcommand subcommand = Subcommand::kCheck;
  /// Path to an ideal file.
  std::optional<std::string> input_path;
  /// Inline ideal text, e.g. "n=5; 124 125 345 145 235".
  std::optional<std::string> inline_ideal;
  Format format = Format::kText;
  /// Unset: strict for check, lenient elsewhere.
  std::optional<bool> strict;
  int workers = 1;
  std::uint64_t seed = 20240601;
  bool force = false;

  // check
  bool expect_f_ideal = false;
  bool fast = false;
  // hilbert
  int terms = 6;
  // census
  int n = 0;
  int d = 0;
  int representatives = 3;
  bool orbits = false;
  // suite
  std::vector<std::pair<int, int>> pairs;
  int samples = 2000;
};

/// Worker count from FIDEAL_WORKERS, else 1.
int default_workers();

/// Executes one subcommand: results go to `out`, diagnostics to `err`.
/// Returns the process exit status.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a config and runs it. Argument errors exit with 2.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace fideal::cli
