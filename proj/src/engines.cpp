#include "lcc/engines.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <string>

namespace lcc {

namespace detail {

double dft_required_bits(std::size_t n, std::uint64_t q) {
  const double nonzero = std::max(static_cast<double>(q - 1), 1.0);
  const double half = std::log2(binomial(n, n / 2).get_d());
  return static_cast<double>(n) * std::log2(nonzero) + half;
}

double dft_size_required_bits(std::size_t n, std::uint64_t q) {
  return static_cast<double>(n) * std::log2(static_cast<double>(q));
}

}  // namespace detail

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t checked_word_count(const ResidueCode& code, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < code.n; ++i) {
    if (count > cap / code.q) throw CapExceededError(cap);
    count *= code.q;
  }
  if (count > cap) throw CapExceededError(cap);
  return count;
}

}  // namespace

GroupRingTable build_exact_table(const ResidueCode& code, const ExactOptions& options) {
  if (options.strategy == ExactStrategy::sequential) {
    GroupRingTable table(code.m, code.q, code.n, options.byte_limit);
    for (auto coeff : code.a) table.absorb(coeff);
    return table;
  }
  std::map<std::uint64_t, std::size_t> groups;
  for (auto coeff : code.a) ++groups[coeff];
  GroupRingTable table(code.m, code.q, 0, options.byte_limit);
  for (const auto& [coeff, count] : groups) {
    table = table.multiply(
        GroupRingTable::factor_power(code.m, code.q, coeff, count, options.byte_limit),
        options.byte_limit);
  }
  return table;
}

EngineReport enumerate_exact(const CodeSpec& spec, const ExactOptions& options) {
  const auto start = Clock::now();
  const ResidueCode code = to_residue_code(spec);
  const GroupRingTable table = build_exact_table(code, options);
  EngineReport report;
  report.enumerator = table.row(code.b);
  report.engine = Engine::exact;
  report.elapsed = Clock::now() - start;
  return report;
}

EngineReport enumerate_brute(const CodeSpec& spec, const BruteOptions& options) {
  const auto start = Clock::now();
  const ResidueCode code = to_residue_code(spec);
  checked_word_count(code, options.cap);

  const std::uint64_t m = code.m;
  std::vector<std::uint64_t> wrap(code.n);  // a_i (q-1) mod m, undone when digit i wraps
  for (std::size_t i = 0; i < code.n; ++i) wrap[i] = detail::mulmod(code.a[i], code.q - 1, m);

  std::vector<std::uint64_t> digits(code.n, 0);
  std::vector<std::uint64_t> counts(code.n + 1, 0);
  std::uint64_t residue = 0;
  std::size_t weight = 0;
  for (;;) {
    if (residue == code.b) ++counts[weight];
    std::size_t i = 0;
    for (; i < code.n; ++i) {
      if (digits[i] + 1 < code.q) {
        if (digits[i] == 0) ++weight;
        ++digits[i];
        residue += code.a[i];
        if (residue >= m) residue -= m;
        break;
      }
      digits[i] = 0;
      --weight;
      residue += m - wrap[i];
      if (residue >= m) residue -= m;
    }
    if (i == code.n) break;
  }

  std::vector<BigInt> coeffs;
  coeffs.reserve(counts.size());
  for (auto c : counts) coeffs.push_back(from_u64(c));
  EngineReport report;
  report.enumerator = WeightEnumerator(std::move(coeffs));
  report.engine = Engine::brute;
  report.elapsed = Clock::now() - start;
  return report;
}

EngineReport enumerate(const CodeSpec& spec, Engine engine, const EngineOptions& options) {
  switch (engine) {
    case Engine::exact: return enumerate_exact(spec, options.exact);
    case Engine::dft: return enumerate_dft<double>(spec, options.dft);
    case Engine::brute: return enumerate_brute(spec, options.brute);
  }
  throw std::invalid_argument("unknown engine");
}

BigInt code_size(const CodeSpec& spec, Engine engine, const EngineOptions& options) {
  switch (engine) {
    case Engine::exact: {
      const ResidueCode code = to_residue_code(spec);
      if (code.m > options.exact.byte_limit / sizeof(BigInt)) {
        throw ResourceError("residue vector for m = " + std::to_string(code.m) +
                            " exceeds the byte limit");
      }
      // counts[r] = number of prefixes with dot product r (mod m)
      std::vector<BigInt> counts(code.m), next(code.m);
      counts[0] = 1;
      for (auto coeff : code.a) {
        auto shifts = symbol_shifts(coeff, code.m, code.q);
        shifts.emplace_back(0, 1);  // symbol 0
        for (auto& value : next) value = 0;
        for (const auto& [shift, mult] : shifts) {
          for (std::uint64_t r = 0; r < code.m; ++r) {
            const std::uint64_t src = r >= shift ? r - shift : r + code.m - shift;
            mpz_addmul_ui(next[r].get_mpz_t(), counts[src].get_mpz_t(), mult);
          }
        }
        counts.swap(next);
      }
      return counts[code.b];
    }
    case Engine::dft: return code_size_dft<double>(spec, options.dft);
    case Engine::brute: return enumerate_brute(spec, options.brute).enumerator.size();
  }
  throw std::invalid_argument("unknown engine");
}

int roots_filter(std::int64_t m, std::int64_t t) {
  if (m < 1) {
    throw ValidationError(ValidationError::Kind::modulus_too_small,
                          "modulus m must be >= 1, got " + std::to_string(m));
  }
  return t % m == 0 ? 1 : 0;
}

}  // namespace lcc
