#include <doctest.h>

#include <algorithm>
#include <random>

#include "lcc/core.hpp"
#include "lcc/engines.hpp"
#include "test_support.hpp"

using namespace lcc;
using testing_support::enumerator_of;

namespace {

ValidationError::Kind kind_of(const CodeSpec& spec) {
  try {
    validate_and_normalize(spec);
  } catch (const ValidationError& e) {
    return e.kind();
  }
  FAIL("expected a validation error");
  return ValidationError::Kind::malformed_input;
}

}  // namespace

TEST_CASE("normalization reduces coefficients and b into [0, m)") {
  auto out = validate_and_normalize(make_code_spec(2, 3, {4, -1}, 7));
  CHECK(out == make_code_spec(2, 3, {1, 2}, 1));
  CHECK(is_normalized(out));

  auto trivial = make_code_spec(2, 1, {0}, 0);
  CHECK(validate_and_normalize(trivial) == trivial);

  auto big = make_code_spec(5, 11, {-123456789, 22}, -1);
  auto reduced = validate_and_normalize(big);
  CHECK(reduced.a[0] == 6);
  CHECK(reduced.a[1] == 0);
  CHECK(reduced.b == 10);
}

TEST_CASE("validation errors are distinct and named") {
  auto mismatch = make_code_spec(2, 3, {1, 2, 3}, 0);
  mismatch.n = 2;
  CHECK(kind_of(mismatch) == ValidationError::Kind::dimension_mismatch);

  CHECK(kind_of(make_code_spec(1, 3, {1}, 0)) == ValidationError::Kind::alphabet_too_small);
  CHECK(kind_of(make_code_spec(2, 0, {1}, 0)) == ValidationError::Kind::modulus_too_small);
  CHECK(kind_of(make_code_spec(2, -4, {1}, 0)) == ValidationError::Kind::modulus_too_small);

  CodeSpec empty;
  empty.n = 0;
  CHECK(kind_of(empty) == ValidationError::Kind::length_too_small);
}

TEST_CASE("residue code rejects moduli beyond 63 bits") {
  auto spec = make_code_spec(2, 5, {1}, 0);
  spec.m = power(BigInt(2), 70);
  CHECK_THROWS_AS(to_residue_code(spec), ResourceError);
  spec.m = power(BigInt(2), 62);
  CHECK(to_residue_code(spec).m == (std::uint64_t{1} << 62));
}

TEST_CASE("weight_of counts nonzero symbols") {
  CHECK(weight_of(std::vector<std::int64_t>{0, 0, 0, 0}, 2) == 0);
  CHECK(weight_of(std::vector<std::int64_t>{1, 0, 2, 2}, 3) == 3);
  CHECK(weight_of(std::vector<std::int64_t>{1, 1}, 2) == 2);
  CHECK_THROWS_AS(weight_of(std::vector<std::int64_t>{0, 2}, 2), ValidationError);
  CHECK_THROWS_AS(weight_of(std::vector<std::int64_t>{-1}, 2), ValidationError);
}

TEST_CASE("weight_of is invariant under coordinate permutations") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto word = testing_support::random_vector(rng, 1 + trial % 12, 0, 4);
    const auto expected = weight_of(word, 5);
    std::shuffle(word.begin(), word.end(), rng);
    CHECK(weight_of(word, 5) == expected);
  }
}

TEST_CASE("weight enumerator basics") {
  auto w = enumerator_of({1, 0, 2, 0, 1});
  CHECK(w.length() == 4);
  CHECK(w.size() == 4);
  CHECK(w.first_difference(enumerator_of({1, 0, 2, 0, 1})) == std::nullopt);
  CHECK(w.first_difference(enumerator_of({1, 0, 3, 0, 1})) == 2);
  CHECK(w.first_difference(enumerator_of({1, 0, 2})) == 3);
  CHECK_THROWS_AS(WeightEnumerator(std::vector<BigInt>{}), std::invalid_argument);
  CHECK_THROWS_AS(WeightEnumerator(std::vector<BigInt>{BigInt(-1)}), std::invalid_argument);

  CHECK(unconstrained_enumerator(3, 2) == enumerator_of({1, 3, 3, 1}));
  CHECK(unconstrained_enumerator(2, 3) == enumerator_of({1, 4, 4}));
}

TEST_CASE("normalization does not change the code") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const std::int64_t q = 2 + trial % 3;
    const std::int64_t m = 1 + trial % 9;
    auto a = testing_support::random_vector(rng, n, -1000, 1000);
    const std::int64_t b = testing_support::random_vector(rng, 1, -1000, 1000)[0];
    const auto raw = make_code_spec(q, m, a, b);
    const auto normalized = validate_and_normalize(raw);
    CHECK(is_normalized(normalized));
    CHECK(enumerate_brute(raw).enumerator == enumerate_brute(normalized).enumerator);
  }
}

TEST_CASE("engine names round trip") {
  for (auto e : {Engine::exact, Engine::dft, Engine::brute}) CHECK(parse_engine(to_string(e)) == e);
  CHECK_FALSE(parse_engine("fft").has_value());
}

TEST_CASE("bigint helpers") {
  CHECK(parse_bigint("-42") == BigInt(-42));
  CHECK(parse_bigint("+7") == BigInt(7));
  CHECK_FALSE(parse_bigint("12a").has_value());
  CHECK_FALSE(parse_bigint("").has_value());
  CHECK_FALSE(parse_bigint("-").has_value());
  CHECK(to_i64(from_i64(INT64_MIN)) == INT64_MIN);
  CHECK(to_i64(from_i64(INT64_MAX)) == INT64_MAX);
  CHECK_FALSE(to_i64(from_u64(UINT64_MAX)).has_value());
  CHECK(to_u64(from_u64(UINT64_MAX)) == UINT64_MAX);
  CHECK_FALSE(to_u64(BigInt(-1)).has_value());
  CHECK(floor_mod(BigInt(-7), BigInt(3)) == 2);
}
