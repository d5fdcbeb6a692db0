#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lcc/core.hpp"

namespace lcc::cli {

enum class Subcommand { enumerate, size, sweep, check, family };
enum class Emit { json, csv, text };

struct CliConfig {
  Subcommand subcommand = Subcommand::enumerate;
  std::optional<std::string> spec_path;
  std::optional<std::string> family;
  // Inline spec or family parameters, kept as text so big values survive.
  std::optional<std::string> n, q, m, a, b, s;
  Engine engine = Engine::exact;
  std::vector<Engine> engines{Engine::exact, Engine::dft, Engine::brute};
  Emit emit = Emit::text;
  std::optional<std::uint64_t> brute_cap;
  bool force_dft = false;
};

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 1;  // validation or family constraint
inline constexpr int kEngineFailure = 2; // residual, cap, resource, disagreement

/// Runs the command line `args` (program name excluded). Results go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcc::cli
