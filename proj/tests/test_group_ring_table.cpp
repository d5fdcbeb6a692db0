#include <doctest.h>

#include <random>

#include "lcc/group_ring_table.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace lcc;

TEST_CASE("identity table") {
  GroupRingTable table(5, 2, 3);
  CHECK(table.absorbed() == 0);
  CHECK(table.at(0, 0) == 1);
  CHECK(table.at(1, 0) == 0);
  CHECK(table.total() == 1);
  CHECK(table.row(0).coeffs().size() == 1);
}

TEST_CASE("entries count prefixes by residue and weight") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint64_t q = 2 + trial % 4;
    const std::uint64_t m = 1 + trial % 7;
    const std::size_t n = 1 + trial % 6;
    auto a = testing_support::random_vector(rng, n, 0, static_cast<std::int64_t>(m) - 1);
    GroupRingTable table(m, q, n);
    for (std::size_t k = 0; k < n; ++k) {
      table.absorb(static_cast<std::uint64_t>(a[k]));
      CHECK(table.absorbed() == k + 1);
      CHECK(table.total() == power(from_u64(q), k + 1));
    }
    for (std::uint64_t r = 0; r < m; ++r) {
      auto expected = oracle::weight_counts(static_cast<std::int64_t>(q),
                                            static_cast<std::int64_t>(m), a,
                                            static_cast<std::int64_t>(r));
      CHECK(table.row(r) == testing_support::enumerator_of(expected));
    }
  }
}

TEST_CASE("absorbing past capacity is a logic error") {
  GroupRingTable table(3, 2, 1);
  table.absorb(1);
  CHECK_THROWS_AS(table.absorb(1), std::logic_error);
}

TEST_CASE("multiply and factor_power agree with sequential absorption") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint64_t q = 2 + trial % 3;
    const std::uint64_t m = 1 + trial % 6;
    const std::size_t count = trial % 7;
    const std::uint64_t coeff = rng() % m;

    GroupRingTable sequential(m, q, count);
    for (std::size_t k = 0; k < count; ++k) sequential.absorb(coeff);
    auto powered = GroupRingTable::factor_power(m, q, coeff, count);
    REQUIRE(powered.absorbed() == count);
    for (std::uint64_t r = 0; r < m; ++r) CHECK(powered.row(r) == sequential.row(r));

    GroupRingTable left(m, q, 2), right(m, q, 1);
    left.absorb(1 % m);
    left.absorb(coeff);
    right.absorb(2 % m);
    GroupRingTable all(m, q, 3);
    all.absorb(1 % m);
    all.absorb(coeff);
    all.absorb(2 % m);
    auto product = left.multiply(right);
    for (std::uint64_t r = 0; r < m; ++r) CHECK(product.row(r) == all.row(r));
  }
}

TEST_CASE("symbol shifts group symbols by residue") {
  // a = 2, m = 6, q = 5: v = 1..4 -> 2, 4, 0, 2
  auto shifts = symbol_shifts(2, 6, 5);
  REQUIRE(shifts.size() == 3);
  CHECK(shifts[0] == std::pair<std::uint64_t, std::uint64_t>{0, 1});
  CHECK(shifts[1] == std::pair<std::uint64_t, std::uint64_t>{2, 2});
  CHECK(shifts[2] == std::pair<std::uint64_t, std::uint64_t>{4, 1});

  // huge alphabets stay cheap
  auto many = symbol_shifts(1, 3, 1'000'000'000'001ULL);
  std::uint64_t total = 0;
  for (auto [t, mult] : many) total += mult;
  CHECK(total == 1'000'000'000'000ULL);

  auto zero = symbol_shifts(0, 7, 4);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == std::pair<std::uint64_t, std::uint64_t>{0, 3});
}

TEST_CASE("byte limit is enforced") {
  CHECK_THROWS_AS(GroupRingTable(1000, 2, 1000, 1 << 20), ResourceError);
}

TEST_CASE("large alphabet table matches brute enumeration") {
  GroupRingTable table(4, 7, 3);
  const std::vector<std::int64_t> a{1, 2, 3};
  for (auto v : a) table.absorb(static_cast<std::uint64_t>(v));
  for (std::uint64_t r = 0; r < 4; ++r) {
    CHECK(table.row(r) ==
          testing_support::enumerator_of(oracle::weight_counts(7, 4, a, static_cast<std::int64_t>(r))));
  }
}
