#include "thetap/carry_word.hpp"

#include <array>
#include <stdexcept>

namespace thetap {

namespace {

constexpr std::size_t kMaxRankBits = 64;

// Pascal table up to C(64, j); every entry fits in 64 bits.
const std::array<std::array<std::uint64_t, kMaxRankBits + 1>, kMaxRankBits + 1>&
binomial_table() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kMaxRankBits + 1>, kMaxRankBits + 1> t{};
    for (std::size_t n = 0; n <= kMaxRankBits; ++n) {
      t[n][0] = 1;
      for (std::size_t k = 1; k <= n; ++k)
        t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

// Positions of the ones of the word at the given rank: the combinatorial
// number system for the ascending-integer order, rank = sum C(pos_t, t).
std::vector<std::uint32_t> ones_at_rank(std::size_t r, long j, std::uint64_t rank) {
  const auto& binom = binomial_table();
  std::vector<std::uint32_t> ones(static_cast<std::size_t>(j));
  std::uint64_t m = rank;
  for (long t = j; t >= 1; --t) {
    std::size_t pos = static_cast<std::size_t>(t) - 1;
    while (pos + 1 <= r && binom[pos + 1][static_cast<std::size_t>(t)] <= m) ++pos;
    ones[static_cast<std::size_t>(t) - 1] = static_cast<std::uint32_t>(pos);
    m -= binom[pos][static_cast<std::size_t>(t)];
  }
  return ones;
}

}  // namespace

std::string format_word(const CarryWord& w) {
  std::string s;
  s.reserve(w.size());
  for (std::uint8_t bit : w) s.push_back(bit ? '1' : '0');
  return s;
}

int popcount(const CarryWord& w) {
  int ones = 0;
  for (std::uint8_t bit : w) ones += bit != 0;
  return ones;
}

std::uint64_t word_count(std::size_t r, long j) {
  if (r > kMaxRankBits)
    throw std::invalid_argument("word_count: r must not exceed 64");
  if (j < 0 || static_cast<std::size_t>(j) > r) return 0;
  return binomial_table()[r][static_cast<std::size_t>(j)];
}

WordEnumerator::WordEnumerator(std::size_t r, long j) : r_(r) {
  if (j < 0 || static_cast<std::size_t>(j) > r) return;
  ones_.resize(static_cast<std::size_t>(j));
  for (std::size_t t = 0; t < ones_.size(); ++t)
    ones_[t] = static_cast<std::uint32_t>(t);
  done_ = false;
}

WordEnumerator::WordEnumerator(std::size_t r, long j, std::uint64_t start_rank)
    : r_(r) {
  if (j < 0 || static_cast<std::size_t>(j) > r) return;
  if (start_rank >= word_count(r, j)) return;  // also rejects r > 64
  ones_ = ones_at_rank(r, j, start_rank);
  done_ = false;
}

bool WordEnumerator::next(CarryWord& out) {
  if (done_) return false;
  out.assign(r_, 0);
  for (std::uint32_t pos : ones_) out[pos] = 1;
  // Advance: bump the lowest one that has room, pack the ones below it.
  std::size_t t = 0;
  for (; t < ones_.size(); ++t) {
    std::uint64_t limit = (t + 1 < ones_.size()) ? ones_[t + 1] : r_;
    if (ones_[t] + 1 < limit) break;
  }
  if (t == ones_.size()) {
    done_ = true;
    return true;
  }
  ++ones_[t];
  for (std::size_t i = 0; i < t; ++i) ones_[i] = static_cast<std::uint32_t>(i);
  return true;
}

CarryWord word_at_rank(std::size_t r, long j, std::uint64_t rank) {
  if (rank >= word_count(r, j))
    throw std::out_of_range("word_at_rank: rank exceeds word_count(r, j)");
  CarryWord w(r, 0);
  for (std::uint32_t pos : ones_at_rank(r, j, rank)) w[pos] = 1;
  return w;
}

}  // namespace thetap
