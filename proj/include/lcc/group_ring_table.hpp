#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmp.h>

#include "lcc/bigint.hpp"
#include "lcc/core.hpp"

namespace lcc {

/// Element of the group algebra Q[Z_m][z] restricted to weights 0..capacity.
///
/// Entry [r][w] counts the words x in Z_q^k (k = absorbed()) with
/// a . x == r (mod m) and wt(x) = w, where a holds the coefficients absorbed
/// so far. Entries are stored as packed GMP limbs, one contiguous block per
/// weight column, sized for the largest value the column can ever hold,
/// C(capacity, w) (q-1)^w.
class GroupRingTable {
 public:
  static constexpr std::size_t kDefaultByteLimit = std::size_t{2} << 30;

  /// The identity element: entry [0][0] = 1, nothing absorbed.
  /// Throws ResourceError when the packed layout would exceed byte_limit.
  GroupRingTable(std::uint64_t m, std::uint64_t q, std::size_t capacity,
                 std::size_t byte_limit = kDefaultByteLimit);

  std::uint64_t modulus() const noexcept { return m_; }
  std::uint64_t alphabet() const noexcept { return q_; }
  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t absorbed() const noexcept { return absorbed_; }
  std::size_t byte_size() const noexcept { return limbs_.size() * sizeof(mp_limb_t); }

  BigInt at(std::uint64_t residue, std::size_t weight) const;

  /// Weights 0..absorbed() of one residue class.
  WeightEnumerator row(std::uint64_t residue) const;

  /// Sum over all entries; equals q^absorbed().
  BigInt total() const;

  /// Multiplies by the factor 1 + z (x^a + x^{2a} + ... + x^{(q-1)a}),
  /// i.e. appends one coordinate with coefficient a (reduced mod m).
  void absorb(std::uint64_t coefficient);

  /// Group-algebra product; the result has capacity and absorbed count equal
  /// to the sums of the operands'. Both operands must share m and q.
  GroupRingTable multiply(const GroupRingTable& other,
                          std::size_t byte_limit = kDefaultByteLimit) const;

  /// (1 + z (x^a + ... + x^{(q-1)a}))^count by repeated squaring.
  static GroupRingTable factor_power(std::uint64_t m, std::uint64_t q, std::uint64_t coefficient,
                                     std::size_t count,
                                     std::size_t byte_limit = kDefaultByteLimit);

 private:
  void set(std::uint64_t residue, std::size_t weight, const BigInt& value);
  mp_limb_t* entry(std::uint64_t residue, std::size_t weight) {
    return limbs_.data() + column_offset_[weight] + residue * column_limbs_[weight];
  }
  const mp_limb_t* entry(std::uint64_t residue, std::size_t weight) const {
    return limbs_.data() + column_offset_[weight] + residue * column_limbs_[weight];
  }
  /// Limbs that can be nonzero in column `weight` after `count` coordinates.
  std::size_t active_limbs(std::size_t count, std::size_t weight) const;

  std::uint64_t m_;
  std::uint64_t q_;
  std::size_t capacity_;
  std::size_t absorbed_ = 0;
  std::vector<std::size_t> column_limbs_;
  std::vector<std::size_t> column_offset_;
  std::vector<mp_limb_t> limbs_;
};

/// Residue shifts t = a v mod m for v = 1..q-1 with their multiplicities,
/// sorted by t. Runs in O(min(q, m)) regardless of the size of q.
std::vector<std::pair<std::uint64_t, std::uint64_t>> symbol_shifts(std::uint64_t coefficient,
                                                                   std::uint64_t m,
                                                                   std::uint64_t q);

}  // namespace lcc
