#include "lcc/families.hpp"

#include <array>
#include <string>
#include <utility>

#include "lcc/errors.hpp"

namespace lcc {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kNames{{
    {Family::vt, "vt"},
    {Family::levenshtein, "levenshtein"},
    {Family::helberg, "helberg"},
    {Family::le_nguyen, "le_nguyen"},
    {Family::construction_cprime, "construction_cprime"},
    {Family::cse, "cse"},
    {Family::ternary_integer, "ternary_integer"},
}};

void require_length(std::int64_t n) {
  if (n < 1) {
    throw ValidationError(ValidationError::Kind::length_too_small,
                          "code length n must be >= 1, got " + std::to_string(n));
  }
}

void require_positive_s(std::string_view family, std::int64_t s) {
  if (s < 1) {
    throw ConstraintError(std::string(family), "s > 0", "got s = " + std::to_string(s));
  }
}

void require_alphabet(std::int64_t q) {
  if (q < 2) {
    throw ValidationError(ValidationError::Kind::alphabet_too_small,
                          "alphabet size q must be >= 2, got " + std::to_string(q));
  }
}

CodeSpec assemble(std::int64_t q, BigInt m, std::vector<BigInt> a, BigInt b) {
  CodeSpec spec;
  spec.n = static_cast<std::int64_t>(a.size());
  spec.q = q;
  spec.m = std::move(m);
  spec.a = std::move(a);
  spec.b = std::move(b);
  return spec;
}

std::vector<BigInt> one_to_n(std::int64_t n) {
  std::vector<BigInt> a;
  a.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) a.push_back(from_i64(i));
  return a;
}

// x_i = 1 + factor * (x_{i-1} + ... + x_{i-s}), zero before the start.
std::vector<BigInt> windowed_recurrence(std::size_t count, const BigInt& factor, std::size_t s) {
  std::vector<BigInt> seq;
  seq.reserve(count);
  BigInt window = 0;
  for (std::size_t i = 0; i < count; ++i) {
    seq.push_back(1 + factor * window);
    window += seq.back();
    if (i + 1 > s) window -= seq[i - s];
  }
  return seq;
}

std::int64_t param_i64(const FamilyParams& params, std::string_view name) {
  auto it = params.find(name);
  if (it == params.end()) {
    throw ValidationError(ValidationError::Kind::malformed_input,
                          "missing family parameter '" + std::string(name) + "'");
  }
  auto value = to_i64(it->second);
  if (!value) {
    throw ValidationError(ValidationError::Kind::malformed_input,
                          "family parameter '" + std::string(name) + "' is out of range");
  }
  return *value;
}

BigInt param_big(const FamilyParams& params, std::string_view name,
                 std::optional<BigInt> fallback = std::nullopt) {
  auto it = params.find(name);
  if (it != params.end()) return it->second;
  if (fallback) return *fallback;
  throw ValidationError(ValidationError::Kind::malformed_input,
                        "missing family parameter '" + std::string(name) + "'");
}

void reject_unknown(Family family, const FamilyParams& params,
                    std::initializer_list<std::string_view> allowed) {
  for (const auto& [name, value] : params) {
    bool known = false;
    for (auto a : allowed) known = known || a == name;
    if (!known) {
      throw ValidationError(ValidationError::Kind::malformed_input,
                            "family '" + std::string(to_string(family)) +
                                "' takes no parameter '" + name + "'");
    }
  }
}

}  // namespace

std::string_view to_string(Family family) noexcept {
  for (const auto& [f, name] : kNames) {
    if (f == family) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (const auto& [f, n] : kNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

CodeSpec family_vt(std::int64_t n, const BigInt& b) {
  require_length(n);
  return assemble(2, from_i64(n) + 1, one_to_n(n), b);
}

CodeSpec family_levenshtein(std::int64_t n, const BigInt& m, const BigInt& b) {
  require_length(n);
  if (m < from_i64(n) + 1) {
    throw ConstraintError("levenshtein", "m >= n + 1",
                          "got m = " + to_decimal(m) + " with n = " + std::to_string(n));
  }
  return assemble(2, m, one_to_n(n), b);
}

std::vector<BigInt> sequence_helberg(std::size_t count, std::int64_t s) {
  require_positive_s("helberg", s);
  return windowed_recurrence(count, BigInt(1), static_cast<std::size_t>(s));
}

CodeSpec family_helberg(std::int64_t n, std::int64_t s, const BigInt& b) {
  require_length(n);
  auto v = sequence_helberg(static_cast<std::size_t>(n) + 1, s);
  BigInt m = v.back();
  v.pop_back();
  return assemble(2, std::move(m), std::move(v), b);
}

std::vector<BigInt> sequence_le_nguyen(std::size_t count, std::int64_t q, std::int64_t s) {
  require_alphabet(q);
  require_positive_s("le_nguyen", s);
  return windowed_recurrence(count, from_i64(q - 1), static_cast<std::size_t>(s));
}

CodeSpec family_le_nguyen(std::int64_t n, std::int64_t q, std::int64_t s, const BigInt& m,
                          const BigInt& b) {
  require_length(n);
  auto w = sequence_le_nguyen(static_cast<std::size_t>(n) + 1, q, s);
  if (m < w.back()) {
    throw ConstraintError("le_nguyen", "m >= w_{n+1}",
                          "got m = " + to_decimal(m) + " but w_{n+1} = " + to_decimal(w.back()));
  }
  w.pop_back();
  return assemble(q, m, std::move(w), b);
}

CodeSpec family_construction_cprime(std::int64_t n, const BigInt& b) {
  require_length(n);
  const BigInt modulus = from_i64(n);
  const BigInt triangular = floor_mod(modulus * (modulus + 1) / 2, modulus);
  const BigInt residue = floor_mod(b, modulus);
  if (residue == 0 || residue == triangular) {
    throw ConstraintError("construction_cprime", "b != 0, n(n+1)/2 (mod n)",
                          "b = " + to_decimal(b) + " is congruent to an excluded residue (0 or " +
                              to_decimal(triangular) + ") mod " + std::to_string(n));
  }
  std::vector<BigInt> c(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= (n + 1) / 2; ++i) c[2 * i - 2] = from_i64(i);
  for (std::int64_t i = 1; i <= n / 2; ++i) c[2 * i - 1] = from_i64(n - i + 1);
  return assemble(2, modulus, std::move(c), b);
}

CodeSpec family_cse(std::int64_t n, std::int64_t s) {
  require_length(n);
  require_positive_s("cse", s);
  const BigInt gap = from_i64(n) - from_i64(s);
  const BigInt half = power(BigInt(2), static_cast<std::uint64_t>(s - 1));
  if (gap <= 0 || gap >= half) {
    throw ConstraintError("cse", "0 < n - s < 2^{s-1}",
                          "got n - s = " + to_decimal(gap) + " with 2^{s-1} = " +
                              to_decimal(half));
  }
  std::vector<BigInt> a;
  a.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) {
    if (i <= s) {
      a.push_back(power(BigInt(2), static_cast<std::uint64_t>(i - 1)));
    } else {
      a.push_back(half + from_i64(i - s));
    }
  }
  return assemble(2, power(BigInt(2), static_cast<std::uint64_t>(s + 1)), std::move(a),
                  BigInt(0));
}

CodeSpec family_ternary(std::int64_t n, const BigInt& b) {
  require_length(n);
  std::vector<BigInt> t;
  t.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) {
    t.push_back(power(BigInt(2), static_cast<std::uint64_t>(i)) - 1);
  }
  return assemble(3, power(BigInt(2), static_cast<std::uint64_t>(n + 1)) - 1, std::move(t), b);
}

bool lehmer_solvable(std::span<const BigInt> a, const BigInt& m, const BigInt& b) {
  if (m < 1) {
    throw ValidationError(ValidationError::Kind::modulus_too_small,
                          "modulus m must be >= 1, got " + to_decimal(m));
  }
  BigInt g = m;
  for (const auto& coeff : a) g = gcd(g, coeff);
  return floor_mod(b, g) == 0;
}

FamilyDescriptor resolve_family(Family family, const FamilyParams& params) {
  FamilyDescriptor out{family, params, {}};
  const BigInt zero = 0;
  switch (family) {
    case Family::vt:
      reject_unknown(family, params, {"n", "b"});
      out.resolved = family_vt(param_i64(params, "n"), param_big(params, "b", zero));
      break;
    case Family::levenshtein:
      reject_unknown(family, params, {"n", "m", "b"});
      out.resolved = family_levenshtein(param_i64(params, "n"), param_big(params, "m"),
                                        param_big(params, "b", zero));
      break;
    case Family::helberg:
      reject_unknown(family, params, {"n", "s", "b"});
      out.resolved = family_helberg(param_i64(params, "n"), param_i64(params, "s"),
                                    param_big(params, "b", zero));
      break;
    case Family::le_nguyen:
      reject_unknown(family, params, {"n", "q", "s", "m", "b"});
      out.resolved = family_le_nguyen(param_i64(params, "n"), param_i64(params, "q"),
                                      param_i64(params, "s"), param_big(params, "m"),
                                      param_big(params, "b", zero));
      break;
    case Family::construction_cprime:
      reject_unknown(family, params, {"n", "b"});
      out.resolved =
          family_construction_cprime(param_i64(params, "n"), param_big(params, "b", zero));
      break;
    case Family::cse: {
      reject_unknown(family, params, {"n", "s", "b"});
      if (param_big(params, "b", zero) != 0) {
        throw ConstraintError("cse", "b = 0",
                              "got b = " + to_decimal(param_big(params, "b", zero)));
      }
      out.resolved = family_cse(param_i64(params, "n"), param_i64(params, "s"));
      break;
    }
    case Family::ternary_integer:
      reject_unknown(family, params, {"n", "b"});
      out.resolved = family_ternary(param_i64(params, "n"), param_big(params, "b", zero));
      break;
  }
  return out;
}

}  // namespace lcc
