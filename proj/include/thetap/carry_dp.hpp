#pragma once

#include "thetap/digit_vector.hpp"
#include "thetap/natural.hpp"
#include "thetap/theta_vector.hpp"
#include "thetap/word_formula.hpp"

namespace thetap {

// Whole theta vector in O(r^2) big-integer multiply-adds: a left-to-right
// scan over digit positions with state (carry bit, carries committed so
// far), starting with carry 0 into position 0 and accepting only carry 0
// out of position r. Distributes the sum-of-products over carry words, so
// counts[j] equals theta_word_sum(d, j) for every j.
ThetaVector theta_all_dp(const DigitVector& d);

// Same scan with a substituted transition table (verification hook).
ThetaVector theta_all_dp(const DigitVector& d, TransitionFactorFn factor);

// counts[j] of the vector above; 0 when j > r.
Natural theta_single_dp(const DigitVector& d, long j);

}  // namespace thetap
