#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lcc {

using BigInt = mpz_class;

/// Parses an optionally signed decimal integer. Returns nullopt on malformed input.
std::optional<BigInt> parse_bigint(std::string_view text);

std::string to_decimal(const BigInt& value);

/// Value as uint64 when 0 <= value < 2^64.
std::optional<std::uint64_t> to_u64(const BigInt& value);
std::optional<std::int64_t> to_i64(const BigInt& value);

BigInt from_u64(std::uint64_t value);
BigInt from_i64(std::int64_t value);

/// Least nonnegative residue of value mod modulus (modulus > 0).
BigInt floor_mod(const BigInt& value, const BigInt& modulus);

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt power(const BigInt& base, std::uint64_t exponent);

}  // namespace lcc
