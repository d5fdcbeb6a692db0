#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>

#include "lcc/bigint.hpp"
#include "lcc/core.hpp"
#include "lcc/group_ring_table.hpp"

namespace lcc {

enum class ExactStrategy {
  /// One table pass per coordinate.
  sequential,
  /// Coordinates sharing a_i mod m are merged into one factor power computed
  /// by repeated squaring, then multiplied in. Pays off when m is small next to n.
  grouped,
};

struct ExactOptions {
  ExactStrategy strategy = ExactStrategy::sequential;
  std::size_t byte_limit = GroupRingTable::kDefaultByteLimit;
};

struct DftOptions {
  /// Skip the precision envelope check and rely on the residual check alone.
  bool force = false;
};

inline constexpr std::uint64_t kDefaultBruteCap = std::uint64_t{1} << 24;

struct BruteOptions {
  std::uint64_t cap = kDefaultBruteCap;
};

struct EngineOptions {
  ExactOptions exact;
  DftOptions dft;
  BruteOptions brute;
};

/// The full table of a normalized code: every residue row at once.
GroupRingTable build_exact_table(const ResidueCode& code, const ExactOptions& options = {});

/// Weight enumerator by exact group-algebra convolution over Z_m.
EngineReport enumerate_exact(const CodeSpec& spec, const ExactOptions& options = {});

/// Weight enumerator by direct evaluation of the roots-of-unity formula
///   W(z) = (1/m) sum_{j=1}^m e(-jb/m) prod_i (1 + z e(a_i j/m) + ... + z e(a_i (q-1) j/m))
/// in floating point, rounded to integers. Defined in dft.hpp.
template <std::floating_point Real = double>
EngineReport enumerate_dft(const CodeSpec& spec, const DftOptions& options = {});

/// Weight enumerator by enumerating all q^n words. Throws CapExceededError
/// when q^n > options.cap.
EngineReport enumerate_brute(const CodeSpec& spec, const BruteOptions& options = {});

EngineReport enumerate(const CodeSpec& spec, Engine engine, const EngineOptions& options = {});

/// |C| = W(1). The exact and dft engines evaluate at z = 1 directly instead
/// of materializing the enumerator.
BigInt code_size(const CodeSpec& spec, Engine engine, const EngineOptions& options = {});

/// [t == 0 (mod m)], the value of (1/m) sum_{j=1}^m e(jt/m).
int roots_filter(std::int64_t m, std::int64_t t);

}  // namespace lcc

#include "lcc/dft.hpp"
