#include "thetap/carry_dp.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace thetap {

namespace {

inline void add_mul(Natural& acc, const Natural& value, std::uint64_t factor) {
  mpz_addmul_ui(acc.get_mpz_t(), value.get_mpz_t(), factor);
}

}  // namespace

ThetaVector theta_all_dp(const DigitVector& d, TransitionFactorFn factor) {
  const std::size_t r = d.r();
  const PrimeModulus p = d.prime();

  // cur0[m] / cur1[m]: sum over carry prefixes with m carries committed so
  // far and carry 0 / 1 into the next position, of the factor products.
  std::vector<Natural> cur0(r + 1), cur1(r + 1), nxt0(r + 1), nxt1(r + 1);
  cur0[0] = 1;
  std::size_t mmax = 0;

  for (std::size_t i = 0; i <= r; ++i) {
    const bool last = i == r;
    const std::uint64_t f00 = factor(d[i], p, false, false);
    const std::uint64_t f01 = factor(d[i], p, false, true);
    const std::uint64_t f10 = factor(d[i], p, true, false);
    const std::uint64_t f11 = factor(d[i], p, true, true);

    const std::size_t out_max = std::min(mmax + 1, r);
    for (std::size_t m = 0; m <= out_max; ++m) {
      nxt0[m] = 0;
      nxt1[m] = 0;
    }
    for (std::size_t m = 0; m <= mmax; ++m) {
      if (sgn(cur0[m]) != 0) {
        add_mul(nxt0[m], cur0[m], f00);
        if (!last) add_mul(nxt1[m + 1], cur0[m], f01);
      }
      if (sgn(cur1[m]) != 0) {
        add_mul(nxt0[m], cur1[m], f10);
        if (!last) add_mul(nxt1[m + 1], cur1[m], f11);
      }
    }
    cur0.swap(nxt0);
    cur1.swap(nxt1);
    if (!last && mmax < r) ++mmax;
  }

  ThetaVector theta;
  theta.counts.assign(cur0.begin(), cur0.begin() + static_cast<std::ptrdiff_t>(r + 1));
  theta.n = natural_from_digits(d);
  theta.p = p.value();
  return theta;
}

ThetaVector theta_all_dp(const DigitVector& d) {
  return theta_all_dp(d, &transition_factor);
}

Natural theta_single_dp(const DigitVector& d, long j) {
  if (j < 0 || static_cast<std::size_t>(j) > d.r()) return Natural(0);
  return theta_all_dp(d).counts[static_cast<std::size_t>(j)];
}

}  // namespace thetap
