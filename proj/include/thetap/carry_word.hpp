#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace thetap {

// An r-bit word w_1..w_r with w_i stored at index i-1. Interpreted as the
// sequence of carries produced when k and n-k are added in base p: w_i is
// the carry out of digit position i-1. May be empty (r = 0).
using CarryWord = std::vector<std::uint8_t>;

// Renders w_1 first, e.g. "10" for w_1=1, w_2=0.
std::string format_word(const CarryWord& w);

int popcount(const CarryWord& w);

// C(r, j): how many length-r words carry exactly j ones. Requires r <= 64
// so the count fits in 64 bits; 0 for j outside [0, r].
std::uint64_t word_count(std::size_t r, long j);

// Lazy enumeration of the words with exactly j ones among r bits, in
// ascending order of the integer whose bit i-1 is w_i (so for r=2, j=1:
// "10" then "01"). Yields C(r, j) words; none when j is outside [0, r].
class WordEnumerator {
 public:
  WordEnumerator(std::size_t r, long j);
  // Starts at the given rank of the order above. Requires r <= 64.
  WordEnumerator(std::size_t r, long j, std::uint64_t start_rank);

  // Writes the next word into out (resized to r); false once exhausted.
  bool next(CarryWord& out);

 private:
  std::size_t r_ = 0;
  std::vector<std::uint32_t> ones_;  // ascending bit positions of the ones
  bool done_ = true;
};

// The word at the given rank of the enumeration order. Requires r <= 64
// and rank < word_count(r, j).
CarryWord word_at_rank(std::size_t r, long j, std::uint64_t rank);

// Applies fn to each word of the stream; the argument is a scratch buffer
// valid only during the call.
template <typename Fn>
void for_each_word(std::size_t r, long j, Fn&& fn) {
  WordEnumerator stream(r, j);
  CarryWord w;
  while (stream.next(w)) fn(static_cast<const CarryWord&>(w));
}

}  // namespace thetap
