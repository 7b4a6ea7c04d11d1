#include "thetap/digit_vector.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace thetap {

DigitVector::DigitVector(std::vector<std::uint32_t> digits, PrimeModulus p)
    : digits_(std::move(digits)), p_(p) {
  if (digits_.empty())
    throw std::invalid_argument("DigitVector: at least one digit required");
  for (std::uint32_t c : digits_) {
    if (c >= p_.value())
      throw std::invalid_argument("DigitVector: digit " + std::to_string(c) +
                                  " out of range for base " +
                                  std::to_string(p_.value()));
  }
  if (digits_.size() > 1 && digits_.back() == 0)
    throw std::invalid_argument("DigitVector: top digit must be nonzero");
}

DigitVector digits_base_p(const Natural& n, PrimeModulus p) {
  if (sgn(n) < 0)
    throw std::invalid_argument("digits_base_p: value must be nonnegative");
  std::vector<std::uint32_t> digits;
  if (n.fits_ulong_p()) {
    unsigned long v = n.get_ui();
    do {
      digits.push_back(static_cast<std::uint32_t>(v % p.value()));
      v /= p.value();
    } while (v != 0);
  } else {
    Natural q = n;
    while (q != 0) {
      unsigned long rem = mpz_fdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), p.value());
      digits.push_back(static_cast<std::uint32_t>(rem));
    }
  }
  return DigitVector(std::move(digits), p);
}

Natural natural_from_digits(const DigitVector& d) {
  Natural n = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    n *= d.p();
    n += d[i];
  }
  return n;
}

DigitVector random_digit_vector(PrimeModulus p, std::size_t r, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> any_digit(0, p.value() - 1);
  std::vector<std::uint32_t> digits(r + 1);
  for (std::uint32_t& c : digits) c = any_digit(rng);
  if (r > 0) {
    std::uniform_int_distribution<std::uint32_t> top_digit(1, p.value() - 1);
    digits.back() = top_digit(rng);
  }
  return DigitVector(std::move(digits), p);
}

}  // namespace thetap
