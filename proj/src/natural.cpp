#include "thetap/natural.hpp"

#include <stdexcept>

namespace thetap {

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("parse_natural: empty string");
  for (char ch : text) {
    if (ch < '0' || ch > '9')
      throw std::invalid_argument("parse_natural: non-digit character in \"" +
                                  std::string(text) + "\"");
  }
  Natural n;
  mpz_set_str(n.get_mpz_t(), std::string(text).c_str(), 10);
  return n;
}

std::string to_decimal(const Natural& n) { return n.get_str(); }

}  // namespace thetap
