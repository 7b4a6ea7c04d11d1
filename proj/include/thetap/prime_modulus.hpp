#pragma once

#include <cstdint>

namespace thetap {

// A validated prime base. Restricted to machine range so that digits and
// carry-transition factors stay machine integers; the row index itself is
// unbounded.
class PrimeModulus {
 public:
  // Throws std::invalid_argument unless p is a prime below 2^32.
  explicit PrimeModulus(std::uint64_t p);

  std::uint32_t value() const { return p_; }

  // Deterministic trial division.
  static bool is_prime(std::uint64_t m);

  friend bool operator==(PrimeModulus a, PrimeModulus b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace thetap
