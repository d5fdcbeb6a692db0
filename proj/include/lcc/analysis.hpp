#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcc/core.hpp"
#include "lcc/engines.hpp"

namespace lcc {

struct SweepRow {
  std::uint64_t b = 0;
  BigInt size;
  WeightEnumerator enumerator;
};

/// Enumerators of C_b for every residue b in {0, ..., m-1} of one (n, q, m, a).
struct SweepResult {
  CodeSpec spec;      // normalized; b is unused
  std::string label;  // family name or empty
  std::vector<SweepRow> rows;
  /// Coefficientwise sum of all rows; always (1 + (q-1) z)^n.
  WeightEnumerator totals;
};

/// All residue classes from a single exact table pass. The spec's b is ignored.
/// Throws std::logic_error if the totals row fails the partition identity.
SweepResult sweep_b(const CodeSpec& spec, const ExactOptions& options = {});

struct CrossCheckReport {
  std::vector<EngineReport> reports;
  bool agree = true;
  /// Set on disagreement: the engines compared and the first differing weight.
  std::optional<std::pair<Engine, Engine>> disagreeing;
  std::optional<std::size_t> first_difference;
  std::optional<double> dft_residual;
};

/// Runs each engine on the spec and compares every result against the first.
CrossCheckReport cross_check(const CodeSpec& spec, const std::vector<Engine>& engines,
                             const EngineOptions& options = {});

}  // namespace lcc
