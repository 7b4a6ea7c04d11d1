#include <stdexcept>

#include "doctest.h"
#include "thetap/oracle.hpp"

using namespace thetap;

namespace {
const DigitVector row4{{0, 0, 1}, PrimeModulus(2)};
}

TEST_CASE("carry words of row 4 base 2") {
  CHECK(format_word(carry_word_of(1, row4)) == "11");
  CHECK(format_word(carry_word_of(0, row4)) == "00");
  CHECK(format_word(carry_word_of(2, row4)) == "01");
  CHECK(format_word(carry_word_of(4, row4)) == "00");
}

TEST_CASE("k = 0 yields the all-zero word for any row") {
  std::mt19937_64 rng(3);
  for (std::uint64_t pv : {2, 5, 10007}) {
    DigitVector d = random_digit_vector(PrimeModulus(pv), 40, rng);
    CHECK(popcount(carry_word_of(0, d)) == 0);
    CHECK(popcount(carry_word_of(natural_from_digits(d), d)) == 0);
  }
}

TEST_CASE("carry word rejects k outside the row") {
  CHECK_THROWS_AS(carry_word_of(5, row4), std::domain_error);
  CHECK_THROWS_AS(carry_word_of(Natural(-1), row4), std::domain_error);
  CHECK_THROWS_AS(kummer_valuation(5, row4), std::domain_error);
  CHECK_THROWS_AS(legendre_valuation(5, row4), std::domain_error);
}

TEST_CASE("valuations of row 4 base 2") {
  CHECK(kummer_valuation(2, row4) == 1);  // C(4,2) = 6 = 2*3
  CHECK(kummer_valuation(1, row4) == 2);  // C(4,1) = 4 = 2^2
  CHECK(kummer_valuation(0, row4) == 0);
  CHECK(legendre_valuation(2, row4) == 1);
  CHECK(legendre_valuation(0, row4) == 0);
  CHECK(legendre_valuation(4, row4) == 0);
}

TEST_CASE("kummer and legendre valuations agree on whole rows") {
  for (std::uint64_t pv : {2, 3}) {
    PrimeModulus p(pv);
    for (std::uint64_t n = 0; n <= 128; ++n) {
      DigitVector d = digits_base_p(Natural(static_cast<unsigned long>(n)), p);
      for (std::uint64_t k = 0; k <= n; ++k) {
        Natural kk(static_cast<unsigned long>(k));
        CarryWord w = carry_word_of(kk, d);
        int nu = kummer_valuation(kk, d);
        REQUIRE(nu == popcount(w));
        REQUIRE(nu == legendre_valuation(kk, d));
      }
    }
  }
}

TEST_CASE("brute histogram: worked examples") {
  CHECK(brute_histogram_serial(row4).counts ==
        std::vector<Natural>{2, 1, 2});
  CHECK(brute_histogram_serial(DigitVector({0}, PrimeModulus(3))).counts ==
        std::vector<Natural>{1});
  CHECK(brute_histogram_serial(DigitVector({1, 1, 1}, PrimeModulus(2))).counts ==
        std::vector<Natural>{8, 0, 0});  // row 7 is all odd
}

TEST_CASE("histogram counts sum to n + 1") {
  for (std::uint64_t pv : {2, 3, 7}) {
    PrimeModulus p(pv);
    for (std::uint64_t n : {0ull, 1ull, 100ull, 2049ull}) {
      ThetaVector t = brute_histogram_serial(
          digits_base_p(Natural(static_cast<unsigned long>(n)), p));
      Natural sum = 0;
      for (const Natural& c : t.counts) sum += c;
      CHECK(sum == n + 1);
    }
  }
}

TEST_CASE("per-word counts of row 4 base 2") {
  auto counts = per_word_counts(row4);
  REQUIRE(counts.size() == 4);
  CHECK(counts.at(CarryWord{0, 0}) == 2);
  CHECK(counts.at(CarryWord{0, 1}) == 1);  // w = "01"
  CHECK(counts.at(CarryWord{1, 0}) == 0);  // w = "10"
  CHECK(counts.at(CarryWord{1, 1}) == 2);
}

TEST_CASE("per-word counts of row 0") {
  auto counts = per_word_counts(DigitVector({0}, PrimeModulus(5)));
  REQUIRE(counts.size() == 1);
  CHECK(counts.at(CarryWord{}) == 1);
}

TEST_CASE("per-word counts partition the row and refine the histogram") {
  for (std::uint64_t pv : {2, 3}) {
    PrimeModulus p(pv);
    for (std::uint64_t n : {1ull, 9ull, 64ull, 200ull}) {
      DigitVector d = digits_base_p(Natural(static_cast<unsigned long>(n)), p);
      auto counts = per_word_counts(d);
      ThetaVector hist = brute_histogram_serial(d);
      Natural total = 0;
      std::vector<Natural> by_weight(d.size(), Natural(0));
      for (const auto& [w, c] : counts) {
        total += c;
        by_weight[static_cast<std::size_t>(popcount(w))] += c;
      }
      CHECK(total == n + 1);
      CHECK(by_weight == hist.counts);
    }
  }
}

TEST_CASE("row valuations match per-k valuations") {
  DigitVector d = digits_base_p(97, PrimeModulus(3));
  auto vals = row_valuations(d);
  REQUIRE(vals.size() == 98);
  for (std::uint64_t k = 0; k <= 97; ++k)
    REQUIRE(vals[k] == kummer_valuation(Natural(static_cast<unsigned long>(k)), d));
}

TEST_CASE("oracle rejects rows too large to enumerate") {
  Natural huge = 1;
  mpz_mul_2exp(huge.get_mpz_t(), huge.get_mpz_t(), 70);
  DigitVector d = digits_base_p(huge, PrimeModulus(2));
  CHECK_THROWS_AS(brute_histogram_serial(d), std::domain_error);
  CHECK_THROWS_AS(row_valuations(d), std::domain_error);
}
