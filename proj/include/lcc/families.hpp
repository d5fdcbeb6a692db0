#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcc/bigint.hpp"
#include "lcc/core.hpp"

namespace lcc {

/// Deletion-correcting code families that are linear-congruence codes.
enum class Family {
  vt,                   // Varshamov-Tenengol'ts
  levenshtein,
  helberg,
  le_nguyen,
  construction_cprime,  // Hagiwara's construction C'
  cse,                  // consecutively systematic encodable
  ternary_integer,
};

std::string_view to_string(Family family) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;

using FamilyParams = std::map<std::string, BigInt, std::less<>>;

struct FamilyDescriptor {
  Family family;
  FamilyParams params;
  CodeSpec resolved;
};

/// Builds the spec for a family from named parameters (n, q, m, b, s as the
/// family requires; b defaults to 0). Unknown or missing parameters raise
/// ValidationError, violated family constraints raise ConstraintError.
FamilyDescriptor resolve_family(Family family, const FamilyParams& params);

/// a = (1, ..., n), m = n + 1, q = 2.
CodeSpec family_vt(std::int64_t n, const BigInt& b);

/// a = (1, ..., n), q = 2, requires m >= n + 1.
CodeSpec family_levenshtein(std::int64_t n, const BigInt& m, const BigInt& b);

/// v_1..v_count where v_i = 0 for i <= 0 and v_i = 1 + sum_{j=1}^s v_{i-j}.
std::vector<BigInt> sequence_helberg(std::size_t count, std::int64_t s);

/// a = (v_1, ..., v_n), m = v_{n+1}, q = 2.
CodeSpec family_helberg(std::int64_t n, std::int64_t s, const BigInt& b);

/// w_1..w_count where w_i = 0 for i <= 0 and w_i = 1 + (q-1) sum_{j=1}^s w_{i-j}.
std::vector<BigInt> sequence_le_nguyen(std::size_t count, std::int64_t q, std::int64_t s);

/// a = (w_1, ..., w_n) over Z_q, requires m >= w_{n+1}.
CodeSpec family_le_nguyen(std::int64_t n, std::int64_t q, std::int64_t s, const BigInt& m,
                          const BigInt& b);

/// Interleaved c = (1, n, 2, n-1, ...), m = n, q = 2.
/// Requires b != 0 and b != n(n+1)/2 (mod n).
CodeSpec family_construction_cprime(std::int64_t n, const BigInt& b);

/// b_i = 2^{i-1} for i <= s, b_i = 2^{s-1} + i - s for i > s; m = 2^{s+1}, b = 0.
/// Requires 0 < n - s < 2^{s-1}.
CodeSpec family_cse(std::int64_t n, std::int64_t s);

/// t_i = 2^i - 1, m = 2^{n+1} - 1, q = 3.
CodeSpec family_ternary(std::int64_t n, const BigInt& b);

/// Lehmer's criterion: a . x == b (mod m) has a solution x in Z_m^n iff
/// gcd(a_1, ..., a_n, m) divides b. Exact for q = m; for other alphabets the
/// answer is only informational.
bool lehmer_solvable(std::span<const BigInt> a, const BigInt& m, const BigInt& b);

}  // namespace lcc
