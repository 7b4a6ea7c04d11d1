#include "thetap/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace thetap {

namespace {

// Digits of k padded to the row's length. Requires k <= n.
std::vector<std::uint32_t> padded_digits(const Natural& k, const DigitVector& d) {
  std::vector<std::uint32_t> kd = digits_base_p(k, d.prime()).digits();
  kd.resize(d.size(), 0);
  return kd;
}

void require_in_row(const Natural& k, const DigitVector& d) {
  if (sgn(k) < 0 || k > natural_from_digits(d))
    throw std::domain_error("oracle: k must lie in [0, n]");
}

// n as a 64-bit value, for the enumeration-based routines.
std::uint64_t enumerable_n(const DigitVector& d) {
  const Natural n = natural_from_digits(d);
  if (!n.fits_ulong_p() ||
      n.get_ui() == std::numeric_limits<unsigned long>::max())
    throw std::domain_error("oracle: row too large to enumerate");
  return n.get_ui();
}

// Number of borrows in n - k, scanning the padded digits of k against the
// digits of n. Equals the number of carries in k + (n-k).
inline int count_borrows(const std::vector<std::uint32_t>& nd,
                         const std::vector<std::uint32_t>& kd) {
  int borrows = 0;
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i + 1 < nd.size(); ++i) {
    borrow = static_cast<std::int64_t>(nd[i]) - kd[i] - borrow < 0;
    borrows += static_cast<int>(borrow);
  }
  return borrows;
}

inline void increment_digits(std::vector<std::uint32_t>& kd, std::uint32_t p) {
  for (std::size_t i = 0; i < kd.size(); ++i) {
    if (++kd[i] < p) break;
    kd[i] = 0;
  }
}

// Valuation histogram over k in [lo, hi).
void histogram_range(const DigitVector& d, std::uint64_t lo, std::uint64_t hi,
                     std::vector<std::uint64_t>& hist) {
  const std::vector<std::uint32_t>& nd = d.digits();
  std::vector<std::uint32_t> kd = padded_digits(Natural(static_cast<unsigned long>(lo)), d);
  for (std::uint64_t k = lo; k < hi; ++k) {
    ++hist[static_cast<std::size_t>(count_borrows(nd, kd))];
    increment_digits(kd, d.p());
  }
}

ThetaVector to_theta(const DigitVector& d, const std::vector<std::uint64_t>& hist) {
  ThetaVector theta;
  theta.counts.reserve(hist.size());
  for (std::uint64_t count : hist)
    theta.counts.emplace_back(static_cast<unsigned long>(count));
  theta.n = natural_from_digits(d);
  theta.p = d.p();
  return theta;
}

}  // namespace

CarryWord carry_word_of(const Natural& k, const DigitVector& d) {
  require_in_row(k, d);
  const std::vector<std::uint32_t>& nd = d.digits();
  const std::vector<std::uint32_t> kd = padded_digits(k, d);
  CarryWord w(d.r(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i + 1 < nd.size(); ++i) {
    borrow = static_cast<std::int64_t>(nd[i]) - kd[i] - borrow < 0;
    w[i] = static_cast<std::uint8_t>(borrow);
  }
  return w;
}

int kummer_valuation(const Natural& k, const DigitVector& d) {
  return popcount(carry_word_of(k, d));
}

int legendre_valuation(const Natural& k, const DigitVector& d) {
  require_in_row(k, d);
  const Natural n = natural_from_digits(d);
  const PrimeModulus p = d.prime();
  auto digit_sum = [&p](const Natural& v) -> std::uint64_t {
    const DigitVector dv = digits_base_p(v, p);
    std::uint64_t sum = 0;
    for (std::uint32_t c : dv.digits()) sum += c;
    return sum;
  };
  const std::uint64_t excess = digit_sum(k) + digit_sum(n - k) - digit_sum(n);
  return static_cast<int>(excess / (p.value() - 1));
}

ThetaVector brute_histogram_serial(const DigitVector& d) {
  const std::uint64_t n = enumerable_n(d);
  std::vector<std::uint64_t> hist(d.size(), 0);
  histogram_range(d, 0, n + 1, hist);
  return to_theta(d, hist);
}

ThetaVector brute_histogram(const DigitVector& d, int num_threads) {
  const std::uint64_t n = enumerable_n(d);
  const std::uint64_t count = n + 1;
  const int threads = num_threads > 0 ? num_threads : omp_get_max_threads();
  if (threads <= 1 || count < 4096) return brute_histogram_serial(d);

  const std::uint64_t t64 = static_cast<std::uint64_t>(threads);
  std::vector<std::vector<std::uint64_t>> local(
      static_cast<std::size_t>(threads), std::vector<std::uint64_t>(d.size(), 0));
#pragma omp parallel num_threads(threads)
  {
    const std::uint64_t t = static_cast<std::uint64_t>(omp_get_thread_num());
    const std::uint64_t lo = count / t64 * t + std::min(t, count % t64);
    const std::uint64_t len = count / t64 + (t < count % t64 ? 1 : 0);
    histogram_range(d, lo, lo + len, local[static_cast<std::size_t>(t)]);
  }
  std::vector<std::uint64_t> hist(d.size(), 0);
  for (const auto& part : local)
    for (std::size_t j = 0; j < hist.size(); ++j) hist[j] += part[j];
  return to_theta(d, hist);
}

std::map<CarryWord, Natural> per_word_counts(const DigitVector& d) {
  const std::uint64_t n = enumerable_n(d);
  const std::size_t r = d.r();

  std::map<CarryWord, std::uint64_t> counts;
  for (long j = 0; j <= static_cast<long>(r); ++j)
    for_each_word(r, j, [&counts](const CarryWord& w) { counts.emplace(w, 0); });

  const std::vector<std::uint32_t>& nd = d.digits();
  std::vector<std::uint32_t> kd(d.size(), 0);
  CarryWord w(r, 0);
  for (std::uint64_t k = 0; k <= n; ++k) {
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i + 1 < nd.size(); ++i) {
      borrow = static_cast<std::int64_t>(nd[i]) - kd[i] - borrow < 0;
      w[i] = static_cast<std::uint8_t>(borrow);
    }
    ++counts[w];
    increment_digits(kd, d.p());
  }

  std::map<CarryWord, Natural> result;
  for (const auto& [word, count] : counts)
    result.emplace(word, Natural(static_cast<unsigned long>(count)));
  return result;
}

std::vector<std::uint8_t> row_valuations(const DigitVector& d) {
  const std::uint64_t n = enumerable_n(d);
  const std::vector<std::uint32_t>& nd = d.digits();
  std::vector<std::uint8_t> vals(n + 1);
  std::vector<std::uint32_t> kd(d.size(), 0);
  for (std::uint64_t k = 0; k <= n; ++k) {
    vals[k] = static_cast<std::uint8_t>(count_borrows(nd, kd));
    increment_digits(kd, d.p());
  }
  return vals;
}

}  // namespace thetap
