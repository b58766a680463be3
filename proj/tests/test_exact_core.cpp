#include <doctest.h>

#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gjms/big_rational.hpp"
#include "gjms/combinatorics.hpp"

using gjms::BigInt;
using gjms::BigRational;

namespace {

// Akiyama–Tanigawa: an algorithm unrelated to the binomial recursion used in
// the library. Produces B_n with B_1 = +1/2, so only n != 1 is compared.
BigRational akiyama_tanigawa(int n) {
  std::vector<BigRational> a(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    a[m] = BigRational(1, m + 1);
    for (int j = m; j >= 1; --j) a[j - 1] = BigRational(j) * (a[j - 1] - a[j]);
  }
  return a[0];
}

}  // namespace

TEST_CASE("bernoulli: examples") {
  CHECK(gjms::bernoulli(0) == BigRational(1));
  CHECK(gjms::bernoulli(1) == BigRational(-1, 2));
  CHECK(gjms::bernoulli(2) == BigRational(1, 6));
  CHECK(gjms::bernoulli(3) == BigRational(0));
  CHECK(gjms::bernoulli(12) == BigRational(-691, 2730));
}

TEST_CASE("bernoulli: agrees with Akiyama-Tanigawa oracle") {
  for (int n = 0; n <= 40; ++n) {
    if (n == 1) continue;
    CHECK_MESSAGE(gjms::bernoulli(n) == akiyama_tanigawa(n), "n = " << n);
  }
}

TEST_CASE("bernoulli: defining sum vanishes for 1 <= n <= 40") {
  for (int n = 1; n <= 40; ++n) {
    BigRational acc;
    for (int j = 0; j <= n; ++j) acc += BigRational(gjms::binomial(n + 1, j)) * gjms::bernoulli(j);
    CHECK_MESSAGE(acc.is_zero(), "n = " << n);
  }
}

TEST_CASE("bernoulli: negative index rejected") { CHECK_THROWS_AS(gjms::bernoulli(-1), std::invalid_argument); }

TEST_CASE("bernoulli: concurrent first use agrees with serial values") {
  std::vector<BigRational> got(8);
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) threads.emplace_back([t, &got] { got[t] = gjms::bernoulli(30 + 2 * t); });
  for (auto& th : threads) th.join();
  for (int t = 0; t < 8; ++t) CHECK(got[t] == akiyama_tanigawa(30 + 2 * t));
}

TEST_CASE("binomial: examples and out-of-range") {
  CHECK(gjms::binomial(7, 0) == 1);
  CHECK(gjms::binomial(5, 2) == 10);
  CHECK(gjms::binomial(4, 7) == 0);
  CHECK(gjms::binomial(4, -1) == 0);
  CHECK(gjms::binomial(0, 0) == 1);
  CHECK_THROWS_AS(gjms::binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial: Pascal identity up to 64") {
  for (long n = 1; n <= 64; ++n) {
    for (long k = 1; k <= n; ++k) {
      CHECK(gjms::binomial(n, k) == gjms::binomial(n - 1, k - 1) + gjms::binomial(n - 1, k));
    }
  }
}

TEST_CASE("BigRational: lowest terms and positive denominator") {
  const BigRational q(6, -8);
  CHECK(q.numerator() == -3);
  CHECK(q.denominator() == 4);
  CHECK(q.to_string() == "-3/4");
  CHECK(BigRational(10, 5).to_string() == "2");
  CHECK(BigRational::parse("-14/21") == BigRational(-2, 3));
  CHECK(BigRational::parse("7") == BigRational(7));
}

TEST_CASE("BigRational: division by zero and malformed input") {
  CHECK_THROWS_AS(BigRational(1) / BigRational(0), std::domain_error);
  CHECK_THROWS_AS(BigRational(1, 0), std::domain_error);
  CHECK_THROWS_AS(BigRational(0).reciprocal(), std::domain_error);
  CHECK_THROWS_AS(BigRational::parse("1/x"), std::invalid_argument);
  CHECK_THROWS_AS(BigRational::parse("3/0"), std::domain_error);
}

TEST_CASE("BigRational: (a + c) - c == a and (a * c) / c == a on random operands") {
  std::mt19937_64 rng(20261018);
  std::uniform_int_distribution<long> num(-1'000'000'000L, 1'000'000'000L);
  std::uniform_int_distribution<long> den(1, 1'000'000'000L);
  for (int i = 0; i < 500; ++i) {
    const BigRational a(num(rng), den(rng));
    const BigRational c(num(rng), den(rng));
    CHECK((a + c) - c == a);
    if (!c.is_zero()) CHECK((a * c) / c == a);
    CHECK(BigRational::parse(a.to_string()) == a);
  }
}

TEST_CASE("BigRational: pow with negative exponent") {
  CHECK(gjms::pow(BigRational(2, 3), 3) == BigRational(8, 27));
  CHECK(gjms::pow(BigRational(2, 3), -2) == BigRational(9, 4));
  CHECK(gjms::pow2(-3) == BigRational(1, 8));
  CHECK(gjms::pow(BigRational(-5), 0) == BigRational(1));
}
