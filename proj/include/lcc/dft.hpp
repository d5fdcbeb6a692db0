#pragma once

// Floating-point evaluation of the exponential-sum formula. Templated on the
// real scalar so that long double can widen the exact-integer envelope.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <concepts>
#include <limits>
#include <numbers>
#include <vector>

#include "lcc/core.hpp"
#include "lcc/errors.hpp"
#include "lcc/group_ring_table.hpp"
#include "lcc/modular.hpp"

namespace lcc {

namespace detail {

/// e(t/m) = exp(2 pi i t/m) for a residue t in [0, m).
template <std::floating_point Real>
std::complex<Real> unit_root(std::uint64_t t, std::uint64_t m) {
  if (t == 0) return {Real(1), Real(0)};
  const Real angle = Real(2) * std::numbers::pi_v<Real> * static_cast<Real>(t) / static_cast<Real>(m);
  return {std::cos(angle), std::sin(angle)};
}

template <std::floating_point Real>
BigInt rounded_to_bigint(Real value) {
  if (std::fabs(value) < Real(4e18)) return from_i64(std::llround(value));
  BigInt out;
  mpz_set_d(out.get_mpz_t(), static_cast<double>(value));
  return out;
}

double dft_required_bits(std::size_t n, std::uint64_t q);
double dft_size_required_bits(std::size_t n, std::uint64_t q);

}  // namespace detail

/// Bits of exact integer range the envelope check allows for Real.
template <std::floating_point Real>
constexpr int dft_available_bits() {
  return std::numeric_limits<Real>::digits - 3;
}

/// The factor 1 + s z for one coefficient a and root index j, where
/// s = e(a j/m) + e(2 a j/m) + ... + e((q-1) a j/m).
template <std::floating_point Real>
struct FactorPolynomial {
  std::complex<Real> constant{Real(1), Real(0)};
  std::complex<Real> linear{};

  /// Sums the q-1 unit-circle terms explicitly, grouping symbols that land on
  /// the same root. When a j == 0 (mod m) every term is 1 and s = q-1 exactly.
  static FactorPolynomial make(std::uint64_t coefficient, std::uint64_t j, std::uint64_t m,
                               std::uint64_t q) {
    FactorPolynomial factor;
    const std::uint64_t step = detail::mulmod(coefficient % m, j % m, m);
    if (step == 0) {
      factor.linear = {static_cast<Real>(q - 1), Real(0)};
      return factor;
    }
    for (const auto& [t, mult] : symbol_shifts(step, m, q)) {
      factor.linear += static_cast<Real>(mult) * detail::unit_root<Real>(t, m);
    }
    return factor;
  }
};

template <std::floating_point Real>
EngineReport enumerate_dft(const CodeSpec& spec, const DftOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const ResidueCode code = to_residue_code(spec);
  if (!options.force) {
    const double bits = detail::dft_required_bits(code.n, code.q);
    if (bits > dft_available_bits<Real>()) {
      throw PrecisionOverflowError(bits, dft_available_bits<Real>());
    }
  }

  using Complex = std::complex<Real>;
  std::vector<Complex> total(code.n + 1);
  std::vector<Complex> product(code.n + 1);
  for (std::uint64_t j = 1; j <= code.m; ++j) {
    std::fill(product.begin(), product.end(), Complex{});
    product[0] = Complex{Real(1), Real(0)};
    for (std::size_t i = 0; i < code.n; ++i) {
      const auto factor = FactorPolynomial<Real>::make(code.a[i], j, code.m, code.q);
      for (std::size_t w = i + 1; w >= 1; --w) {
        product[w] = product[w] * factor.constant + product[w - 1] * factor.linear;
      }
      product[0] *= factor.constant;
    }
    // e(-jb/m) = e((m - jb mod m)/m)
    const std::uint64_t jb = detail::mulmod(j % code.m, code.b, code.m);
    const Complex twist = detail::unit_root<Real>(jb == 0 ? 0 : code.m - jb, code.m);
    for (std::size_t w = 0; w <= code.n; ++w) total[w] += twist * product[w];
  }

  const Real scale = Real(1) / static_cast<Real>(code.m);
  std::vector<BigInt> coeffs(code.n + 1);
  double residual = 0.0;
  for (std::size_t w = 0; w <= code.n; ++w) {
    const Complex value = total[w] * scale;
    // counts are nonnegative, so distance is measured to the nearest nonnegative integer
    const Real rounded = std::max(std::round(value.real()), Real(0));
    residual = std::max(residual,
                        static_cast<double>(std::hypot(value.real() - rounded, value.imag())));
    coeffs[w] = detail::rounded_to_bigint(rounded);
  }
  if (!(residual < 0.5)) throw ResidualTooLargeError(residual);

  EngineReport report;
  report.enumerator = WeightEnumerator(std::move(coeffs));
  report.engine = Engine::dft;
  report.residual = residual;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

/// |C| from the formula at z = 1: (1/m) sum_j e(-jb/m) prod_i (1 + s_ij).
/// Returns the rounded size and stores the residual in *residual_out when given.
template <std::floating_point Real = double>
BigInt code_size_dft(const CodeSpec& spec, const DftOptions& options = {},
                     double* residual_out = nullptr) {
  const ResidueCode code = to_residue_code(spec);
  if (!options.force) {
    const double bits = detail::dft_size_required_bits(code.n, code.q);
    if (bits > dft_available_bits<Real>()) {
      throw PrecisionOverflowError(bits, dft_available_bits<Real>());
    }
  }
  using Complex = std::complex<Real>;
  Complex total{};
  for (std::uint64_t j = 1; j <= code.m; ++j) {
    Complex product{Real(1), Real(0)};
    for (std::size_t i = 0; i < code.n; ++i) {
      const auto factor = FactorPolynomial<Real>::make(code.a[i], j, code.m, code.q);
      product *= factor.constant + factor.linear;
    }
    const std::uint64_t jb = detail::mulmod(j % code.m, code.b, code.m);
    total += detail::unit_root<Real>(jb == 0 ? 0 : code.m - jb, code.m) * product;
  }
  const Complex value = total / static_cast<Real>(code.m);
  const Real rounded = std::max(std::round(value.real()), Real(0));
  const double residual = static_cast<double>(std::hypot(value.real() - rounded, value.imag()));
  if (!(residual < 0.5)) throw ResidualTooLargeError(residual);
  if (residual_out != nullptr) *residual_out = residual;
  return detail::rounded_to_bigint(rounded);
}

}  // namespace lcc
