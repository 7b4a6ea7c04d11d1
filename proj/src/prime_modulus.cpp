#include "thetap/prime_modulus.hpp"

#include <stdexcept>
#include <string>

namespace thetap {

bool PrimeModulus::is_prime(std::uint64_t m) {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  if (m % 3 == 0) return m == 3;
  for (std::uint64_t f = 5; f * f <= m; f += 6) {
    if (m % f == 0 || m % (f + 2) == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32))
    throw std::invalid_argument("PrimeModulus: " + std::to_string(p) +
                                " exceeds the supported range (p < 2^32)");
  if (!is_prime(p))
    throw std::invalid_argument("PrimeModulus: " + std::to_string(p) +
                                " is not prime");
  p_ = static_cast<std::uint32_t>(p);
}

}  // namespace thetap
