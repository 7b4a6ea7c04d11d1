#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "thetap/oracle.hpp"
#include "thetap/word_formula.hpp"

using namespace thetap;

namespace {

const DigitVector row4{{0, 0, 1}, PrimeModulus(2)};

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t b = 1;
  for (std::uint64_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

TEST_CASE("word enumeration: worked examples") {
  std::vector<std::string> words;
  for_each_word(2, 1, [&](const CarryWord& w) { words.push_back(format_word(w)); });
  CHECK(words == std::vector<std::string>{"10", "01"});

  words.clear();
  for_each_word(0, 0, [&](const CarryWord& w) { words.push_back(format_word(w)); });
  CHECK(words == std::vector<std::string>{""});

  int count = 0;
  for_each_word(4, 2, [&](const CarryWord&) { ++count; });
  CHECK(count == 6);
}

TEST_CASE("word enumeration is empty outside 0 <= j <= r") {
  int count = 0;
  for_each_word(3, -1, [&](const CarryWord&) { ++count; });
  for_each_word(3, 4, [&](const CarryWord&) { ++count; });
  CHECK(count == 0);
}

TEST_CASE("enumeration yields C(r, j) distinct words with j ones") {
  for (std::size_t r = 0; r <= 16; ++r) {
    for (long j = 0; j <= static_cast<long>(r); ++j) {
      std::set<CarryWord> seen;
      for_each_word(r, j, [&](const CarryWord& w) {
        REQUIRE(w.size() == r);
        REQUIRE(popcount(w) == j);
        seen.insert(w);
      });
      REQUIRE(seen.size() == binom(r, static_cast<std::uint64_t>(j)));
      REQUIRE(seen.size() == word_count(r, j));
    }
  }
}

TEST_CASE("ranked access agrees with the enumeration order") {
  for (std::size_t r = 0; r <= 12; ++r) {
    for (long j = 0; j <= static_cast<long>(r); ++j) {
      std::uint64_t rank = 0;
      for_each_word(r, j, [&](const CarryWord& w) {
        REQUIRE(word_at_rank(r, j, rank) == w);
        ++rank;
      });
      CHECK(rank == word_count(r, j));
      CHECK_THROWS_AS(word_at_rank(r, j, rank), std::out_of_range);
    }
  }
}

TEST_CASE("an enumerator started at a rank continues the stream") {
  const std::size_t r = 10;
  const long j = 4;
  std::vector<CarryWord> all;
  for_each_word(r, j, [&](const CarryWord& w) { all.push_back(w); });
  for (std::uint64_t start : {0ull, 1ull, 7ull, 209ull}) {
    WordEnumerator stream(r, j, start);
    CarryWord w;
    std::uint64_t i = start;
    while (stream.next(w)) REQUIRE(w == all.at(i++));
    CHECK(i == all.size());
  }
}

TEST_CASE("transition factor: worked examples") {
  PrimeModulus p2(2);
  CHECK(transition_factor(0, p2, false, false) == 1);
  CHECK(transition_factor(0, p2, true, true) == 2);
  CHECK(transition_factor(1, p2, false, true) == 0);
  CHECK(transition_factor(1, p2, true, false) == 1);
  CHECK_THROWS_AS(transition_factor(2, p2, false, false), std::invalid_argument);
}

TEST_CASE("transition factor matches its four-case table and counts digit pairs") {
  for (std::uint64_t pv : {2, 3, 5, 7, 11, 13}) {
    PrimeModulus p(pv);
    for (std::uint32_t c = 0; c < pv; ++c) {
      for (int in = 0; in <= 1; ++in) {
        for (int out = 0; out <= 1; ++out) {
          std::uint64_t expected_table;
          if (in == 0 && out == 0) expected_table = c + 1;
          else if (in == 0 && out == 1) expected_table = pv - c - 1;
          else if (in == 1 && out == 0) expected_table = c;
          else expected_table = pv - c;

          std::uint64_t pairs = 0;
          for (std::uint64_t a = 0; a < pv; ++a)
            for (std::uint64_t b = 0; b < pv; ++b)
              pairs += (a + b + static_cast<std::uint64_t>(in) ==
                        c + pv * static_cast<std::uint64_t>(out));

          std::uint64_t got = transition_factor(c, p, in != 0, out != 0);
          REQUIRE(got == expected_table);
          REQUIRE(got == pairs);
        }
      }
    }
  }
}

TEST_CASE("term values of row 4 base 2") {
  CHECK(term_value(CarryWord{0, 1}, row4) == 1);
  CHECK(term_value(CarryWord{1, 0}, row4) == 0);
  CHECK(term_value(CarryWord{1, 1}, row4) == 2);
  CHECK_THROWS_AS(term_value(CarryWord{1}, row4), std::invalid_argument);
}

TEST_CASE("each term counts the k whose carry word it is") {
  for (std::uint64_t pv : {2, 3, 5}) {
    PrimeModulus p(pv);
    for (std::uint64_t n = 0; n <= 64; ++n) {
      DigitVector d = digits_base_p(Natural(static_cast<unsigned long>(n)), p);
      auto oracle_counts = per_word_counts(d);
      for (const auto& [w, count] : oracle_counts)
        REQUIRE(term_value(w, d) == count);
    }
  }
}

TEST_CASE("theta by word sum: worked examples") {
  CHECK(theta_word_sum(row4, 0) == 2);
  CHECK(theta_word_sum(row4, 1) == 1);
  CHECK(theta_word_sum(row4, 2) == 2);
  CHECK(theta_word_sum(row4, 3) == 0);   // j = r + 1
  CHECK(theta_word_sum(row4, -2) == 0);
}

TEST_CASE("word sum over a single-digit row") {
  DigitVector d({4}, PrimeModulus(7));
  CHECK(theta_word_sum(d, 0) == 5);  // c_0 + 1
  CHECK(theta_word_sum(d, 1) == 0);
}

TEST_CASE("word sums over a row total n + 1") {
  for (std::uint64_t pv : {2, 3, 5, 7}) {
    PrimeModulus p(pv);
    for (std::uint64_t n = 0; n <= 2000; ++n) {
      DigitVector d = digits_base_p(Natural(static_cast<unsigned long>(n)), p);
      Natural sum = 0;
      for (long j = 0; j <= static_cast<long>(d.r()); ++j)
        sum += theta_word_sum(d, j);
      REQUIRE(sum == n + 1);
    }
  }
}

TEST_CASE("word sums match the enumeration oracle per weight class") {
  for (std::uint64_t pv : {2, 5}) {
    PrimeModulus p(pv);
    for (std::uint64_t n : {0ull, 4ull, 31ull, 100ull, 243ull}) {
      DigitVector d = digits_base_p(Natural(static_cast<unsigned long>(n)), p);
      ThetaVector expected = brute_histogram_serial(d);
      for (long j = 0; j <= static_cast<long>(d.r()); ++j)
        REQUIRE(theta_word_sum(d, j) == expected.counts[static_cast<std::size_t>(j)]);
    }
  }
}
