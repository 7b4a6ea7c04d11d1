#pragma once

#include <cstdint>

#include "thetap/carry_word.hpp"
#include "thetap/digit_vector.hpp"
#include "thetap/natural.hpp"

namespace thetap {

// Number of digit pairs (a, b) in [0,p)^2 with a + b + carry_in = c + p*carry_out:
//   (0,0) -> c+1    (0,1) -> p-c-1    (1,0) -> c    (1,1) -> p-c
// Requires c < p. The result is in [0, p].
std::uint64_t transition_factor(std::uint32_t c, PrimeModulus p, bool carry_in,
                                bool carry_out);

using TransitionFactorFn = std::uint64_t (*)(std::uint32_t, PrimeModulus, bool, bool);

// Product of the r+1 transition factors selected by w: position 0 starts
// with carry_in 0, position i sees carries (w_i, w_{i+1}), and position r
// ends with carry_out 0. Equals the number of k in [0, n] whose carry word
// is w. Requires w.size() == d.r(); the empty word gives c_0 + 1.
Natural term_value(const CarryWord& w, const DigitVector& d);

// Sum of term_value over all words with exactly j ones: the number of k
// with exactly j carries, i.e. with nu_p(C(n,k)) = j. Returns 0 for j
// outside [0, r]. Cost is C(r, j) terms of r+1 factors each -- exponential
// in r for mid-range j; this is the reference evaluator, not the fast path.
Natural theta_word_sum(const DigitVector& d, long j);

// Same sum, evaluated over contiguous rank ranges of the enumeration order
// in parallel. num_threads = 0 takes the OpenMP default. Falls back to the
// serial scan when r > 64 (ranks no longer fit in 64 bits) or the stream is
// short. The result is identical to theta_word_sum.
Natural theta_word_sum_parallel(const DigitVector& d, long j, int num_threads = 0);

}  // namespace thetap
