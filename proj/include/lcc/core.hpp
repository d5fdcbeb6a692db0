#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lcc/bigint.hpp"
#include "lcc/errors.hpp"

namespace lcc {

/// Parameters of the linear-congruence code
///   C = { x in Z_q^n : a . x == b (mod m) },  Z_q = {0, ..., q-1}.
///
/// Fields hold raw user input: a_i and b may be negative or exceed m, and
/// nothing is checked until validate_and_normalize().
struct CodeSpec {
  std::int64_t n = 0;
  std::int64_t q = 2;
  BigInt m = 1;
  std::vector<BigInt> a;
  BigInt b = 0;

  bool operator==(const CodeSpec&) const = default;
};

/// Convenience builder with n = a.size().
CodeSpec make_code_spec(std::int64_t q, std::int64_t m, std::span<const std::int64_t> a,
                        std::int64_t b);
CodeSpec make_code_spec(std::int64_t q, std::int64_t m, std::initializer_list<std::int64_t> a,
                        std::int64_t b);

/// Rejects invalid dimensions and reduces every a_i and b into {0, ..., m-1}.
/// The returned spec defines the same code.
CodeSpec validate_and_normalize(const CodeSpec& spec);

bool is_normalized(const CodeSpec& spec);

/// Normalized spec narrowed to machine words, the form every engine consumes.
/// Requires m < 2^63 so that a sum of two residues never wraps.
struct ResidueCode {
  std::size_t n = 0;
  std::uint64_t q = 2;
  std::uint64_t m = 1;
  std::vector<std::uint64_t> a;
  std::uint64_t b = 0;
};

/// Validates, normalizes and narrows. Throws ResourceError when m or q do not fit.
ResidueCode to_residue_code(const CodeSpec& spec);

/// Number of nonzero entries of a word over Z_q.
std::size_t weight_of(std::span<const std::int64_t> word, std::int64_t q);

/// Coefficients (A_0, ..., A_n) of W_C(z) = sum_{x in C} z^{wt(x)}.
class WeightEnumerator {
 public:
  WeightEnumerator() = default;
  /// Throws std::invalid_argument on an empty vector or a negative entry.
  explicit WeightEnumerator(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  const BigInt& operator[](std::size_t weight) const { return coeffs_.at(weight); }
  std::size_t length() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  /// W_C(1), the number of codewords.
  BigInt size() const;

  /// Index of the first differing coefficient, or nullopt when equal.
  std::optional<std::size_t> first_difference(const WeightEnumerator& other) const;

  bool operator==(const WeightEnumerator&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Coefficients of (1 + (q-1) z)^n, the enumerator of all of Z_q^n.
WeightEnumerator unconstrained_enumerator(std::size_t n, std::uint64_t q);

enum class Engine { exact, dft, brute };

std::string_view to_string(Engine engine) noexcept;
std::optional<Engine> parse_engine(std::string_view name) noexcept;

struct EngineReport {
  WeightEnumerator enumerator;
  Engine engine = Engine::exact;
  /// Largest distance of a pre-rounding coefficient from its rounded value
  /// (imaginary part included). Always 0 for the exact and brute engines.
  double residual = 0.0;
  std::chrono::duration<double, std::milli> elapsed{0};
};

}  // namespace lcc
