#include "lcc/group_ring_table.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lcc/errors.hpp"
#include "lcc/modular.hpp"

namespace lcc {

namespace {

double log2_binomial(std::size_t n, std::size_t k) {
  auto lg = [](double x) { return std::lgamma(x + 1.0); };
  return (lg(static_cast<double>(n)) - lg(static_cast<double>(k)) -
          lg(static_cast<double>(n - k))) /
         std::log(2.0);
}

// dst[0..dst_len) += mult * src[0..src_len); the sum is known to fit in dst_len limbs.
void add_scaled(mp_limb_t* dst, std::size_t dst_len, const mp_limb_t* src, std::size_t src_len,
                std::uint64_t mult) {
  src_len = std::min(src_len, dst_len);
  mp_limb_t carry;
  if (mult == 1) {
    carry = mpn_add(dst, dst, static_cast<mp_size_t>(dst_len), src,
                    static_cast<mp_size_t>(src_len));
  } else {
    carry = mpn_addmul_1(dst, src, static_cast<mp_size_t>(src_len), mult);
    if (dst_len > src_len) {
      carry = mpn_add_1(dst + src_len, dst + src_len, static_cast<mp_size_t>(dst_len - src_len),
                        carry);
    }
  }
  if (carry != 0) throw std::logic_error("group ring table: column bound exceeded");
}

}  // namespace

std::vector<std::pair<std::uint64_t, std::uint64_t>> symbol_shifts(std::uint64_t coefficient,
                                                                   std::uint64_t m,
                                                                   std::uint64_t q) {
  const std::uint64_t a = coefficient % m;
  const std::uint64_t period = m / std::gcd(a, m);
  const std::uint64_t nonzero = q - 1;
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t v = 1; v <= std::min(period, nonzero); ++v) {
    counts[detail::mulmod(a, v, m)] += (nonzero - v) / period + 1;
  }
  return {counts.begin(), counts.end()};
}

GroupRingTable::GroupRingTable(std::uint64_t m, std::uint64_t q, std::size_t capacity,
                               std::size_t byte_limit)
    : m_(m), q_(q), capacity_(capacity) {
  if (m == 0 || q < 2) throw std::invalid_argument("group ring table needs m >= 1 and q >= 2");
  column_limbs_.resize(capacity + 1);
  column_offset_.resize(capacity + 1);
  const std::size_t limit_limbs = byte_limit / sizeof(mp_limb_t);
  std::size_t offset = 0;
  BigInt base = from_u64(q - 1);
  for (std::size_t w = 0; w <= capacity; ++w) {
    BigInt bound = binomial(capacity, w) * power(base, w);
    std::size_t limbs = std::max<std::size_t>(1, mpz_size(bound.get_mpz_t()));
    column_limbs_[w] = limbs;
    column_offset_[w] = offset;
    if (m > (limit_limbs - offset) / limbs) {
      throw ResourceError("group ring table for m = " + std::to_string(m) + ", n = " +
                          std::to_string(capacity) + " exceeds the " +
                          std::to_string(byte_limit) + "-byte limit");
    }
    offset += m * limbs;
  }
  limbs_.assign(offset, 0);
  limbs_[0] = 1;
}

std::size_t GroupRingTable::active_limbs(std::size_t count, std::size_t weight) const {
  if (weight > count) return 0;
  double bits = log2_binomial(count, weight) +
                static_cast<double>(weight) * std::log2(static_cast<double>(q_ - 1));
  auto estimate = static_cast<std::size_t>((bits + 2.0) / GMP_NUMB_BITS) + 1;
  return std::min(estimate, column_limbs_[weight]);
}

BigInt GroupRingTable::at(std::uint64_t residue, std::size_t weight) const {
  if (residue >= m_ || weight > capacity_) throw std::out_of_range("group ring table index");
  const mp_limb_t* src = entry(residue, weight);
  std::size_t len = column_limbs_[weight];
  while (len > 0 && src[len - 1] == 0) --len;
  BigInt out;
  if (len == 0) return out;
  mp_limb_t* dst = mpz_limbs_write(out.get_mpz_t(), static_cast<mp_size_t>(len));
  std::copy(src, src + len, dst);
  mpz_limbs_finish(out.get_mpz_t(), static_cast<mp_size_t>(len));
  return out;
}

void GroupRingTable::set(std::uint64_t residue, std::size_t weight, const BigInt& value) {
  std::size_t len = mpz_size(value.get_mpz_t());
  if (sgn(value) < 0 || len > column_limbs_[weight]) {
    throw std::logic_error("group ring table: value outside column bound");
  }
  mp_limb_t* dst = entry(residue, weight);
  const mp_limb_t* src = mpz_limbs_read(value.get_mpz_t());
  std::copy(src, src + len, dst);
  std::fill(dst + len, dst + column_limbs_[weight], mp_limb_t{0});
}

WeightEnumerator GroupRingTable::row(std::uint64_t residue) const {
  std::vector<BigInt> coeffs(absorbed_ + 1);
  for (std::size_t w = 0; w <= absorbed_; ++w) coeffs[w] = at(residue, w);
  return WeightEnumerator(std::move(coeffs));
}

BigInt GroupRingTable::total() const {
  BigInt sum = 0;
  for (std::uint64_t r = 0; r < m_; ++r) {
    for (std::size_t w = 0; w <= absorbed_; ++w) sum += at(r, w);
  }
  return sum;
}

void GroupRingTable::absorb(std::uint64_t coefficient) {
  if (absorbed_ == capacity_) throw std::logic_error("group ring table is at capacity");
  const auto shifts = symbol_shifts(coefficient, m_, q_);
  const std::size_t before = absorbed_;
  const std::size_t after = before + 1;

  // Column w only reads column w-1, so a descending sweep can update in place.
  for (std::size_t w = after; w >= 1; --w) {
    const std::size_t dst_len = active_limbs(after, w);
    const std::size_t src_len = active_limbs(before, w - 1);
    if (src_len == 0) continue;
    const std::size_t dst_stride = column_limbs_[w];
    const std::size_t src_stride = column_limbs_[w - 1];
    mp_limb_t* dst_col = limbs_.data() + column_offset_[w];
    const mp_limb_t* src_col = limbs_.data() + column_offset_[w - 1];
    for (const auto& [shift, mult] : shifts) {
      // dst[r] += mult * src[r - shift mod m]
      for (std::uint64_t r = shift; r < m_; ++r) {
        add_scaled(dst_col + r * dst_stride, dst_len, src_col + (r - shift) * src_stride, src_len,
                   mult);
      }
      for (std::uint64_t r = 0; r < shift; ++r) {
        add_scaled(dst_col + r * dst_stride, dst_len, src_col + (r + m_ - shift) * src_stride,
                   src_len, mult);
      }
    }
  }
  absorbed_ = after;
}

GroupRingTable GroupRingTable::multiply(const GroupRingTable& other,
                                        std::size_t byte_limit) const {
  if (other.m_ != m_ || other.q_ != q_) {
    throw std::invalid_argument("group ring tables differ in modulus or alphabet");
  }
  GroupRingTable product(m_, q_, capacity_ + other.capacity_, byte_limit);
  const std::size_t weights = absorbed_ + other.absorbed_;
  std::vector<BigInt> acc((weights + 1) * m_);
  std::vector<BigInt> rhs((other.absorbed_ + 1) * m_);
  for (std::uint64_t r = 0; r < m_; ++r) {
    for (std::size_t w = 0; w <= other.absorbed_; ++w) rhs[w * m_ + r] = other.at(r, w);
  }
  for (std::size_t w1 = 0; w1 <= absorbed_; ++w1) {
    for (std::uint64_t r1 = 0; r1 < m_; ++r1) {
      const BigInt lhs = at(r1, w1);
      if (sgn(lhs) == 0) continue;
      for (std::size_t w2 = 0; w2 <= other.absorbed_; ++w2) {
        for (std::uint64_t r2 = 0; r2 < m_; ++r2) {
          const BigInt& x = rhs[w2 * m_ + r2];
          if (sgn(x) == 0) continue;
          std::uint64_t r = r1 + r2 >= m_ ? r1 + r2 - m_ : r1 + r2;
          mpz_addmul(acc[(w1 + w2) * m_ + r].get_mpz_t(), lhs.get_mpz_t(), x.get_mpz_t());
        }
      }
    }
  }
  for (std::size_t w = 0; w <= weights; ++w) {
    for (std::uint64_t r = 0; r < m_; ++r) product.set(r, w, acc[w * m_ + r]);
  }
  product.absorbed_ = weights;
  return product;
}

GroupRingTable GroupRingTable::factor_power(std::uint64_t m, std::uint64_t q,
                                            std::uint64_t coefficient, std::size_t count,
                                            std::size_t byte_limit) {
  GroupRingTable result(m, q, 0, byte_limit);
  if (count == 0) return result;
  GroupRingTable base(m, q, 1, byte_limit);
  base.absorb(coefficient);
  for (;;) {
    if (count & 1) result = result.multiply(base, byte_limit);
    count >>= 1;
    if (count == 0) break;
    base = base.multiply(base, byte_limit);
  }
  return result;
}

}  // namespace lcc
