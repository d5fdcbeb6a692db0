#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed code parameters. Maps to CLI exit status 1.
class ValidationError : public Error {
 public:
  enum class Kind {
    dimension_mismatch,  // len(a) != n
    alphabet_too_small,  // q < 2
    modulus_too_small,   // m < 1
    length_too_small,    // n < 1
    symbol_out_of_range, // word entry outside Z_q
    malformed_input,     // unparseable JSON, flag values, etc.
  };

  ValidationError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(ValidationError::Kind kind) noexcept;

/// A code family's parameter constraint was violated. Maps to CLI exit status 1.
class ConstraintError : public Error {
 public:
  ConstraintError(std::string family, std::string constraint, const std::string& detail)
      : Error(family + ": constraint violated (" + constraint + "): " + detail),
        family_(std::move(family)),
        constraint_(std::move(constraint)) {}

  const std::string& family() const noexcept { return family_; }
  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string family_;
  std::string constraint_;
};

/// An engine refused or failed to produce a trustworthy result. Maps to CLI exit status 2.
class EngineError : public Error {
 public:
  using Error::Error;
};

/// The floating-point engine's safety envelope would be exceeded.
class PrecisionOverflowError : public EngineError {
 public:
  PrecisionOverflowError(double required_bits, int available_bits);
  double required_bits() const noexcept { return required_bits_; }
  int available_bits() const noexcept { return available_bits_; }

 private:
  double required_bits_;
  int available_bits_;
};

/// Rounding the floating-point result to integers is not safe.
class ResidualTooLargeError : public EngineError {
 public:
  explicit ResidualTooLargeError(double residual);
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// The brute-force enumeration would visit more vectors than the configured cap.
class CapExceededError : public EngineError {
 public:
  explicit CapExceededError(std::uint64_t cap);
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

/// The requested computation does not fit the engine's memory or word-size limits.
class ResourceError : public EngineError {
 public:
  using EngineError::EngineError;
};

}  // namespace lcc
