#include "lcc/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lcc {

const char* to_string(ValidationError::Kind kind) noexcept {
  switch (kind) {
    case ValidationError::Kind::dimension_mismatch: return "dimension_mismatch";
    case ValidationError::Kind::alphabet_too_small: return "alphabet_too_small";
    case ValidationError::Kind::modulus_too_small: return "modulus_too_small";
    case ValidationError::Kind::length_too_small: return "length_too_small";
    case ValidationError::Kind::symbol_out_of_range: return "symbol_out_of_range";
    case ValidationError::Kind::malformed_input: return "malformed_input";
  }
  return "unknown";
}

PrecisionOverflowError::PrecisionOverflowError(double required_bits, int available_bits)
    : EngineError("dft engine: largest coefficient may need " + std::to_string(required_bits) +
                  " bits, exceeding the " + std::to_string(available_bits) +
                  "-bit exact-integer envelope (use force to override)"),
      required_bits_(required_bits),
      available_bits_(available_bits) {}

ResidualTooLargeError::ResidualTooLargeError(double residual)
    : EngineError("dft engine: rounding residual " + std::to_string(residual) +
                  " is not below 0.5; coefficients cannot be recovered"),
      residual_(residual) {}

CapExceededError::CapExceededError(std::uint64_t cap)
    : EngineError("brute engine: q^n exceeds the enumeration cap of " + std::to_string(cap) +
                  " vectors"),
      cap_(cap) {}

CodeSpec make_code_spec(std::int64_t q, std::int64_t m, std::span<const std::int64_t> a,
                        std::int64_t b) {
  CodeSpec spec;
  spec.n = static_cast<std::int64_t>(a.size());
  spec.q = q;
  spec.m = from_i64(m);
  spec.a.reserve(a.size());
  for (auto v : a) spec.a.push_back(from_i64(v));
  spec.b = from_i64(b);
  return spec;
}

CodeSpec make_code_spec(std::int64_t q, std::int64_t m, std::initializer_list<std::int64_t> a,
                        std::int64_t b) {
  return make_code_spec(q, m, std::span<const std::int64_t>(a.begin(), a.size()), b);
}

CodeSpec validate_and_normalize(const CodeSpec& spec) {
  using Kind = ValidationError::Kind;
  if (spec.n < 1) {
    throw ValidationError(Kind::length_too_small,
                          "code length n must be >= 1, got " + std::to_string(spec.n));
  }
  if (spec.q < 2) {
    throw ValidationError(Kind::alphabet_too_small,
                          "alphabet size q must be >= 2, got " + std::to_string(spec.q));
  }
  if (spec.m < 1) {
    throw ValidationError(Kind::modulus_too_small,
                          "modulus m must be >= 1, got " + to_decimal(spec.m));
  }
  if (spec.a.size() != static_cast<std::size_t>(spec.n)) {
    throw ValidationError(Kind::dimension_mismatch,
                          "coefficient vector has length " + std::to_string(spec.a.size()) +
                              " but n = " + std::to_string(spec.n));
  }
  CodeSpec out = spec;
  for (auto& coeff : out.a) coeff = floor_mod(coeff, spec.m);
  out.b = floor_mod(spec.b, spec.m);
  return out;
}

bool is_normalized(const CodeSpec& spec) {
  auto reduced = [&](const BigInt& v) { return sgn(v) >= 0 && v < spec.m; };
  return spec.n >= 1 && spec.q >= 2 && spec.m >= 1 &&
         spec.a.size() == static_cast<std::size_t>(spec.n) && reduced(spec.b) &&
         std::all_of(spec.a.begin(), spec.a.end(), reduced);
}

ResidueCode to_residue_code(const CodeSpec& spec) {
  CodeSpec normalized = validate_and_normalize(spec);
  auto m = to_u64(normalized.m);
  if (!m || *m >= (std::uint64_t{1} << 63)) {
    throw ResourceError("modulus m = " + to_decimal(normalized.m) +
                        " exceeds the engines' 63-bit residue range");
  }
  ResidueCode code;
  code.n = static_cast<std::size_t>(normalized.n);
  code.q = static_cast<std::uint64_t>(normalized.q);
  code.m = *m;
  code.a.reserve(code.n);
  for (const auto& coeff : normalized.a) code.a.push_back(*to_u64(coeff));
  code.b = *to_u64(normalized.b);
  return code;
}

std::size_t weight_of(std::span<const std::int64_t> word, std::int64_t q) {
  std::size_t weight = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 0 || word[i] >= q) {
      throw ValidationError(ValidationError::Kind::symbol_out_of_range,
                            "entry " + std::to_string(i) + " = " + std::to_string(word[i]) +
                                " is outside Z_" + std::to_string(q));
    }
    if (word[i] != 0) ++weight;
  }
  return weight;
}

WeightEnumerator::WeightEnumerator(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("weight enumerator needs at least A_0");
  for (const auto& c : coeffs_) {
    if (sgn(c) < 0) throw std::invalid_argument("weight enumerator coefficient is negative");
  }
}

BigInt WeightEnumerator::size() const {
  BigInt total = 0;
  for (const auto& c : coeffs_) total += c;
  return total;
}

std::optional<std::size_t> WeightEnumerator::first_difference(const WeightEnumerator& other) const {
  std::size_t common = std::min(coeffs_.size(), other.coeffs_.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (coeffs_[i] != other.coeffs_[i]) return i;
  }
  if (coeffs_.size() != other.coeffs_.size()) return common;
  return std::nullopt;
}

WeightEnumerator unconstrained_enumerator(std::size_t n, std::uint64_t q) {
  std::vector<BigInt> coeffs(n + 1);
  BigInt base = from_u64(q - 1);
  for (std::size_t i = 0; i <= n; ++i) coeffs[i] = binomial(n, i) * power(base, i);
  return WeightEnumerator(std::move(coeffs));
}

std::string_view to_string(Engine engine) noexcept {
  switch (engine) {
    case Engine::exact: return "exact";
    case Engine::dft: return "dft";
    case Engine::brute: return "brute";
  }
  return "unknown";
}

std::optional<Engine> parse_engine(std::string_view name) noexcept {
  if (name == "exact") return Engine::exact;
  if (name == "dft") return Engine::dft;
  if (name == "brute") return Engine::brute;
  return std::nullopt;
}

}  // namespace lcc
