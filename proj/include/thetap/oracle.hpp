#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "thetap/carry_word.hpp"
#include "thetap/digit_vector.hpp"
#include "thetap/natural.hpp"
#include "thetap/theta_vector.hpp"

namespace thetap {

// Ground truth, independent of the formula evaluators: nu_p(C(n,k)) equals
// the number of carries when k and n-k are added in base p (Kummer), and
// also (s_p(k) + s_p(n-k) - s_p(n)) / (p-1) (Legendre). Nothing here ever
// forms a binomial coefficient as an integer.

// The carry sequence of k + (n-k): bit w_i is the carry out of digit
// position i-1. Computed as the borrow chain of n - k. Throws
// std::domain_error when k > n.
CarryWord carry_word_of(const Natural& k, const DigitVector& d);

// Number of ones in carry_word_of(k, d) = the exponent of p in C(n,k).
int kummer_valuation(const Natural& k, const DigitVector& d);

// Same value through base-p digit sums.
int legendre_valuation(const Natural& k, const DigitVector& d);

// Valuation histogram of a whole row by direct enumeration of k. Requires
// n to fit in 64 bits; practical up to n around 10^7.
ThetaVector brute_histogram_serial(const DigitVector& d);

// Same histogram with the k-range sharded across OpenMP threads.
// num_threads = 0 takes the OpenMP default; the merge is deterministic.
ThetaVector brute_histogram(const DigitVector& d, int num_threads = 0);

// Count of k per carry word, with every word of the full 2^r word set
// present (zero counts included). Same enumeration bound as above.
std::map<CarryWord, Natural> per_word_counts(const DigitVector& d);

// nu_p(C(n,k)) for k = 0..n of one row. Same enumeration bound as above.
std::vector<std::uint8_t> row_valuations(const DigitVector& d);

}  // namespace thetap
