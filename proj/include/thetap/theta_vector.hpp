#pragma once

#include <cstdint>
#include <vector>

#include "thetap/natural.hpp"

namespace thetap {

// Exact divisibility histogram of one row: counts[j] is the number of
// k in [0, n] with nu_p(C(n,k)) = j, for j = 0..r. The counts sum to n+1.
struct ThetaVector {
  std::vector<Natural> counts;
  Natural n;
  std::uint32_t p = 0;
};

}  // namespace thetap
