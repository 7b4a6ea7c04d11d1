#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace thetap {

// Arbitrary-precision nonnegative integer. GMP supplies the arithmetic;
// the helpers below are the only external representation (decimal text).
using Natural = mpz_class;

// Parses a nonempty string of decimal digits. Leading zeros are allowed,
// signs and whitespace are not. Throws std::invalid_argument otherwise.
Natural parse_natural(std::string_view text);

std::string to_decimal(const Natural& n);

}  // namespace thetap
