#include "cuboids/counting.hpp"

#include <array>
#include <random>
#include <stdexcept>

#include "doctest.h"

using namespace cuboids;

namespace {

// Direct count of triples 0 <= i <= j <= k with i + j + k = n.
std::uint64_t triples_summing_to(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; 3 * i <= n; ++i) {
    for (std::uint64_t j = i; i + 2 * j <= n; ++j) ++count;  // k = n - i - j >= j
  }
  return count;
}

TripleClassCounts random_counts(std::mt19937_64& rng, std::uint64_t max_component) {
  std::uniform_int_distribution<std::uint64_t> dist(0, max_component);
  return {BigInt(dist(rng)), BigInt(dist(rng)), BigInt(dist(rng))};
}

}  // namespace

TEST_CASE("decompose_exponent splits n as 6s + alpha") {
  CHECK(decompose_exponent(0) == ExponentDecomposition{0, 0});
  CHECK(decompose_exponent(6) == ExponentDecomposition{1, 0});
  CHECK(decompose_exponent(7) == ExponentDecomposition{1, 1});
  CHECK(decompose_exponent(35) == ExponentDecomposition{5, 5});
}

TEST_CASE("base class counts: worked values") {
  CHECK(base_class_counts(6) == TripleClassCounts{1, 3, 3});
  CHECK(base_class_counts(7) == TripleClassCounts{0, 4, 4});
  CHECK(base_class_counts(0) == TripleClassCounts{1, 0, 0});
  // one row per alpha at s = 0
  CHECK(base_class_counts(1) == TripleClassCounts{0, 1, 0});
  CHECK(base_class_counts(2) == TripleClassCounts{0, 2, 0});
  CHECK(base_class_counts(3) == TripleClassCounts{1, 1, 1});
  CHECK(base_class_counts(4) == TripleClassCounts{0, 3, 1});
  CHECK(base_class_counts(5) == TripleClassCounts{0, 3, 2});
}

TEST_CASE("base class totals equal the number of exponent triples for n <= 200") {
  for (std::uint64_t n = 0; n <= 200; ++n) {
    CAPTURE(n);
    REQUIRE(base_class_counts(n).total() == triples_summing_to(n));
    REQUIRE((base_class_counts(n).f == 0 || base_class_counts(n).f == 1));
  }
}

TEST_CASE("merge reproduces the worked three-prime fold") {
  const TripleClassCounts first{1, 3, 3};    // exponent 6
  const TripleClassCounts second{0, 4, 4};   // exponent 7
  const TripleClassCounts third{1, 3, 3};    // exponent 6

  const TripleClassCounts step2 = merge_class_counts(first, second);
  CHECK(step2 == TripleClassCounts{0, 16, 160});
  const TripleClassCounts step3 = merge_class_counts(step2, third);
  CHECK(step3 == TripleClassCounts{0, 64, 4672});
  CHECK(step3.total() == 4736);
}

TEST_CASE("merge identity and commutativity") {
  const TripleClassCounts identity{1, 0, 0};
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const TripleClassCounts a = random_counts(rng, 100);
    const TripleClassCounts b = random_counts(rng, 100);
    REQUIRE(merge_class_counts(a, identity) == a);
    REQUIRE(merge_class_counts(identity, a) == a);
    REQUIRE(merge_class_counts(a, b) == merge_class_counts(b, a));
  }
}

TEST_CASE("merge total equals the product-set expansion (sampled)") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const TripleClassCounts a = random_counts(rng, 50);
    const TripleClassCounts b = random_counts(rng, 50);
    const BigInt expansion = 6 * a.h * b.h + 3 * (a.g * b.h + a.h * b.g) + 2 * a.g * b.g +
                             a.f * b.f + a.f * (b.g + b.h) + b.f * (a.g + a.h);
    REQUIRE(merge_class_counts(a, b).total() == expansion);
  }
}

TEST_CASE("cuboid_count examples") {
  CHECK(cuboid_count(Factorization({{2, 6}, {3, 7}, {5, 6}})) == 4736);
  CHECK(cuboid_count(Factorization{}) == 1);
  CHECK(cuboid_count(Factorization({{2, 2}, {3, 1}})) == 4);
}

TEST_CASE("class_counts trace records the fold") {
  std::vector<FoldStep> trace;
  const Factorization fac({{2, 6}, {3, 7}, {5, 6}});
  const TripleClassCounts result = class_counts(fac, &trace);
  REQUIRE(trace.size() == 3);
  CHECK(trace[0].base == TripleClassCounts{1, 3, 3});
  CHECK(trace[0].merged == TripleClassCounts{1, 3, 3});
  CHECK(trace[1].merged == TripleClassCounts{0, 16, 160});
  CHECK(trace[2].merged == TripleClassCounts{0, 64, 4672});
  CHECK(trace[2].merged == result);
  CHECK(trace[1].decomp == ExponentDecomposition{1, 1});
}

TEST_CASE("rectangle_count examples") {
  CHECK(rectangle_count(Factorization{}) == 1);
  CHECK(rectangle_count(Factorization({{2, 2}, {3, 2}})) == 5);   // 36
  CHECK(rectangle_count(Factorization({{2, 2}, {3, 1}})) == 3);   // 12
}

TEST_CASE("divisor_count examples") {
  CHECK(divisor_count(Factorization{}) == 1);
  CHECK(divisor_count(Factorization({{2, 2}, {3, 1}})) == 6);
  CHECK(divisor_count(Factorization({{2, 6}, {3, 7}, {5, 6}})) == 392);
}

TEST_CASE("prime-power closed form") {
  CHECK(cuboid_count_prime_power(0) == 1);
  CHECK(cuboid_count_prime_power(1) == 1);
  CHECK(cuboid_count_prime_power(3) == 3);
  CHECK(cuboid_count_prime_power(6) == 7);
  for (std::uint64_t n = 0; n <= 60; ++n) {
    CAPTURE(n);
    const Factorization fac = n == 0 ? Factorization{} : Factorization({{2, n}});
    REQUIRE(cuboid_count_prime_power(n) == cuboid_count(fac));
  }
}

TEST_CASE("two-prime-power closed form") {
  CHECK(cuboid_count_two_prime_powers(6, 7) == 176);
  CHECK(cuboid_count_two_prime_powers(2, 1) == 4);
  CHECK(cuboid_count_two_prime_powers(1, 1) == 2);
  for (std::uint64_t n = 1; n <= 20; ++n) {
    // the m = 0 edge delegates to the prime-power form
    REQUIRE(cuboid_count_two_prime_powers(n, 0) == cuboid_count_prime_power(n));
    REQUIRE(cuboid_count_two_prime_powers(0, n) == cuboid_count_prime_power(n));
    for (std::uint64_t m = 1; m <= 20; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      REQUIRE(cuboid_count_two_prime_powers(n, m) ==
              cuboid_count(Factorization({{2, n}, {3, m}})));
    }
  }
}

TEST_CASE("squarefree closed form") {
  CHECK(cuboid_count_squarefree(1) == 1);
  CHECK(cuboid_count_squarefree(2) == 2);
  CHECK(cuboid_count_squarefree(3) == 5);
  CHECK_THROWS_AS(cuboid_count_squarefree(0), std::domain_error);

  const std::array<std::uint64_t, 10> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  std::vector<PrimePower> terms;
  for (std::uint64_t k = 1; k <= primes.size(); ++k) {
    terms.push_back({primes[k - 1], 1});
    REQUIRE(cuboid_count_squarefree(k) == cuboid_count(Factorization(terms)));
  }
}

TEST_CASE("squarefree count for 50 primes exceeds 64 bits and stays exact") {
  const BigInt expected("119649664615308764795042");  // (3^49 + 1) / 2
  CHECK(cuboid_count_squarefree(50) == expected);

  std::vector<PrimePower> terms;  // first 50 primes, exponent 1
  for (std::uint64_t p = 2; terms.size() < 50; ++p) {
    if (is_prime(p)) terms.push_back({p, 1});
  }
  CHECK(cuboid_count(Factorization(terms)) == expected);
}

TEST_CASE("product_set_cardinality full table") {
  using enum SymmetryClass;
  CHECK(product_set_cardinality(AllDistinct, AllDistinct) == 6);
  CHECK(product_set_cardinality(TwoEqual, AllDistinct) == 3);
  CHECK(product_set_cardinality(AllDistinct, TwoEqual) == 3);
  CHECK(product_set_cardinality(TwoEqual, TwoEqual) == 2);
  CHECK(product_set_cardinality(AllEqual, AllEqual) == 1);
  CHECK(product_set_cardinality(AllEqual, TwoEqual) == 1);
  CHECK(product_set_cardinality(AllEqual, AllDistinct) == 1);
  CHECK(product_set_cardinality(TwoEqual, AllEqual) == 1);
  CHECK(product_set_cardinality(AllDistinct, AllEqual) == 1);
}

TEST_CASE("cuboid_count depends only on the multiset of exponents") {
  const std::vector<std::vector<std::uint64_t>> exponent_sets{
      {3, 5}, {5, 3}, {1, 2, 3}, {3, 2, 1}, {6, 7, 6}, {7, 6, 6}};
  for (const auto& exps : exponent_sets) {
    std::vector<PrimePower> on_small, on_large;
    const std::array<std::uint64_t, 3> small{2, 3, 5};
    const std::array<std::uint64_t, 3> large{101, 103, 30011};
    for (std::size_t i = 0; i < exps.size(); ++i) {
      on_small.push_back({small[i], exps[i]});
      on_large.push_back({large[i], exps[i]});
    }
    REQUIRE(cuboid_count(Factorization(on_small)) == cuboid_count(Factorization(on_large)));
  }
  // permuting which prime carries which exponent changes nothing
  CHECK(cuboid_count(Factorization({{2, 3}, {3, 5}})) ==
        cuboid_count(Factorization({{2, 5}, {3, 3}})));
}

TEST_CASE("fold order does not change the result") {
  const std::vector<std::uint64_t> exponents{6, 7, 6, 2, 11};
  TripleClassCounts forward{1, 0, 0};
  TripleClassCounts backward{1, 0, 0};
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    forward = merge_class_counts(forward, base_class_counts(exponents[i]));
    backward = merge_class_counts(base_class_counts(exponents[exponents.size() - 1 - i]), backward);
  }
  CHECK(forward == backward);
  CHECK(forward == class_counts(Factorization(
                       {{2, 6}, {3, 7}, {5, 6}, {7, 2}, {11, 11}})));
}
