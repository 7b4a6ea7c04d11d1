#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "thetap/natural.hpp"
#include "thetap/prime_modulus.hpp"

namespace thetap {

// Little-endian base-p digits c_0..c_r of a nonnegative integer:
// n = c_0 + c_1 p + ... + c_r p^r with 0 <= c_i < p. The top digit is
// nonzero except for the single-digit vector [0], which represents n = 0.
class DigitVector {
 public:
  // Validates the invariants above; throws std::invalid_argument.
  DigitVector(std::vector<std::uint32_t> digits, PrimeModulus p);

  const std::vector<std::uint32_t>& digits() const { return digits_; }
  std::uint32_t operator[](std::size_t i) const { return digits_[i]; }
  std::size_t size() const { return digits_.size(); }
  std::size_t r() const { return digits_.size() - 1; }
  PrimeModulus prime() const { return p_; }
  std::uint32_t p() const { return p_.value(); }

 private:
  std::vector<std::uint32_t> digits_;
  PrimeModulus p_;
};

DigitVector digits_base_p(const Natural& n, PrimeModulus p);

// Inverse of digits_base_p.
Natural natural_from_digits(const DigitVector& d);

// Uniform digit vector with exactly r+1 digits (top digit nonzero when
// r > 0). Drives the bench command and the randomized suites.
DigitVector random_digit_vector(PrimeModulus p, std::size_t r, std::mt19937_64& rng);

}  // namespace thetap
