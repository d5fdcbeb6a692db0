#include "lcc/bigint.hpp"

#include <cctype>
#include <limits>

namespace lcc {

std::optional<BigInt> parse_bigint(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) return std::nullopt;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
  }
  std::string digits(text.front() == '+' ? text.substr(1) : text);
  BigInt value;
  if (value.set_str(digits, 10) != 0) return std::nullopt;
  return value;
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

std::optional<std::uint64_t> to_u64(const BigInt& value) {
  if (sgn(value) < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 64) return std::nullopt;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

std::optional<std::int64_t> to_i64(const BigInt& value) {
  if (mpz_sizeinbase(value.get_mpz_t(), 2) > 63) {
    // -2^63 is the one 64-bit magnitude that still fits
    if (value == -power(BigInt(2), 63)) return std::numeric_limits<std::int64_t>::min();
    return std::nullopt;
  }
  BigInt magnitude = abs(value);
  auto u = to_u64(magnitude);
  auto signed_value = static_cast<std::int64_t>(*u);
  return sgn(value) < 0 ? -signed_value : signed_value;
}

BigInt from_u64(std::uint64_t value) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(value), 0, 0, &value);
  return out;
}

BigInt from_i64(std::int64_t value) {
  if (value >= 0) return from_u64(static_cast<std::uint64_t>(value));
  // avoid overflow on INT64_MIN
  return -from_u64(static_cast<std::uint64_t>(-(value + 1)) + 1);
}

BigInt floor_mod(const BigInt& value, const BigInt& modulus) {
  BigInt out;
  mpz_fdiv_r(out.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt power(const BigInt& base, std::uint64_t exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

}  // namespace lcc
