#pragma once

#include "thetap/digit_vector.hpp"
#include "thetap/natural.hpp"

namespace thetap {

// theta_0 = (c_0+1)(c_1+1)...(c_r+1): the count of coefficients in row n
// not divisible by p.
Natural theta0_fine(const DigitVector& d);

// theta_1 = sum_{k=0}^{r-1} (c_0+1)...(c_{k-1}+1) * (p-c_k-1) * c_{k+1}
//           * (c_{k+2}+1)...(c_r+1), with empty products equal to 1.
// Returns 0 when r = 0.
Natural theta1_closed(const DigitVector& d);

}  // namespace thetap
