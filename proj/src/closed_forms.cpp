#include "thetap/closed_forms.hpp"

#include <vector>

namespace thetap {

Natural theta0_fine(const DigitVector& d) {
  Natural product = 1;
  for (std::uint32_t c : d.digits())
    mpz_mul_ui(product.get_mpz_t(), product.get_mpz_t(), c + std::uint64_t{1});
  return product;
}

Natural theta1_closed(const DigitVector& d) {
  const std::size_t r = d.r();
  if (r == 0) return Natural(0);
  const std::uint64_t p = d.p();

  // prefix[k] = prod_{i<k} (c_i+1), suffix[k] = prod_{i>=k} (c_i+1).
  std::vector<Natural> prefix(r + 1), suffix(r + 2);
  prefix[0] = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    prefix[k] = prefix[k - 1];
    mpz_mul_ui(prefix[k].get_mpz_t(), prefix[k].get_mpz_t(), d[k - 1] + std::uint64_t{1});
  }
  suffix[r + 1] = 1;
  for (std::size_t k = r + 1; k-- > 0;) {
    suffix[k] = suffix[k + 1];
    mpz_mul_ui(suffix[k].get_mpz_t(), suffix[k].get_mpz_t(), d[k] + std::uint64_t{1});
  }

  Natural total = 0;
  Natural term;
  for (std::size_t k = 0; k < r; ++k) {
    const std::uint64_t drop = p - d[k] - 1;
    const std::uint64_t next = d[k + 1];
    if (drop == 0 || next == 0) continue;
    term = prefix[k];
    mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), drop);
    mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), next);
    term *= suffix[k + 2];
    total += term;
  }
  return total;
}

}  // namespace thetap
