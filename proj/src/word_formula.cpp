#include "thetap/word_formula.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace thetap {

namespace {

// True when p^(r+1) fits in 64 bits, i.e. every term and every theta count
// (all bounded by n+1 <= p^(r+1)) is machine-representable.
bool products_fit_u64(const DigitVector& d) {
  unsigned __int128 bound = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    bound *= d.p();
    if (bound > std::numeric_limits<std::uint64_t>::max()) return false;
  }
  return true;
}

std::uint64_t term_product_u64(const CarryWord& w, const DigitVector& d) {
  const PrimeModulus p = d.prime();
  const std::size_t r = d.r();
  std::uint64_t product = 1;
  bool carry_in = false;
  for (std::size_t i = 0; i <= r; ++i) {
    const bool carry_out = i < r && w[i];
    product *= transition_factor(d[i], p, carry_in, carry_out);
    if (product == 0) return 0;
    carry_in = carry_out;
  }
  return product;
}

void term_product_mpz(const CarryWord& w, const DigitVector& d, Natural& out) {
  const PrimeModulus p = d.prime();
  const std::size_t r = d.r();
  out = 1;
  bool carry_in = false;
  for (std::size_t i = 0; i <= r; ++i) {
    const bool carry_out = i < r && w[i];
    const std::uint64_t factor = transition_factor(d[i], p, carry_in, carry_out);
    if (factor == 0) {
      out = 0;
      return;
    }
    mpz_mul_ui(out.get_mpz_t(), out.get_mpz_t(), factor);
    carry_in = carry_out;
  }
}

// Sum of the terms of `count` consecutive words starting at start_rank.
Natural sum_rank_range(const DigitVector& d, long j, std::uint64_t start_rank,
                       std::uint64_t count, bool fits_u64) {
  Natural total = 0;
  WordEnumerator stream(d.r(), j, start_rank);
  CarryWord w;
  if (fits_u64) {
    std::uint64_t acc = 0;
    for (std::uint64_t i = 0; i < count && stream.next(w); ++i)
      acc += term_product_u64(w, d);
    mpz_set_ui(total.get_mpz_t(), acc);
  } else {
    Natural term;
    for (std::uint64_t i = 0; i < count && stream.next(w); ++i) {
      term_product_mpz(w, d, term);
      total += term;
    }
  }
  return total;
}

}  // namespace

std::uint64_t transition_factor(std::uint32_t c, PrimeModulus p, bool carry_in,
                                bool carry_out) {
  const std::uint64_t base = p.value();
  if (c >= base)
    throw std::invalid_argument("transition_factor: digit out of range");
  if (!carry_in) return carry_out ? base - c - 1 : c + 1;
  return carry_out ? base - c : c;
}

Natural term_value(const CarryWord& w, const DigitVector& d) {
  if (w.size() != d.r())
    throw std::invalid_argument("term_value: word length must equal r");
  if (products_fit_u64(d)) {
    Natural result;
    mpz_set_ui(result.get_mpz_t(), term_product_u64(w, d));
    return result;
  }
  Natural result;
  term_product_mpz(w, d, result);
  return result;
}

Natural theta_word_sum(const DigitVector& d, long j) {
  const std::size_t r = d.r();
  if (j < 0 || static_cast<std::size_t>(j) > r) return Natural(0);
  const bool fits = products_fit_u64(d);
  Natural total = 0;
  CarryWord w;
  WordEnumerator stream(r, j);
  if (fits) {
    std::uint64_t acc = 0;
    while (stream.next(w)) acc += term_product_u64(w, d);
    mpz_set_ui(total.get_mpz_t(), acc);
  } else {
    Natural term;
    while (stream.next(w)) {
      term_product_mpz(w, d, term);
      total += term;
    }
  }
  return total;
}

Natural theta_word_sum_parallel(const DigitVector& d, long j, int num_threads) {
  const std::size_t r = d.r();
  if (j < 0 || static_cast<std::size_t>(j) > r) return Natural(0);
  if (r > 64) return theta_word_sum(d, j);
  const std::uint64_t total_words = word_count(r, j);
  const int threads = num_threads > 0 ? num_threads : omp_get_max_threads();
  if (threads <= 1 || total_words < 1024) return theta_word_sum(d, j);

  const bool fits = products_fit_u64(d);
  std::vector<Natural> partial(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
  {
    const int t = omp_get_thread_num();
    const std::uint64_t lo =
        total_words / static_cast<std::uint64_t>(threads) * static_cast<std::uint64_t>(t) +
        std::min<std::uint64_t>(static_cast<std::uint64_t>(t),
                                total_words % static_cast<std::uint64_t>(threads));
    const std::uint64_t len =
        total_words / static_cast<std::uint64_t>(threads) +
        (static_cast<std::uint64_t>(t) < total_words % static_cast<std::uint64_t>(threads) ? 1 : 0);
    partial[static_cast<std::size_t>(t)] = sum_rank_range(d, j, lo, len, fits);
  }
  Natural total = 0;
  for (const Natural& part : partial) total += part;
  return total;
}

}  // namespace thetap
