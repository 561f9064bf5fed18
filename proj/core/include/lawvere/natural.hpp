#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace lawvere {

/// Arbitrary-precision natural number. Gödel numbers of even tiny
/// self-referential programs overflow 64 bits.
using Natural = mpz_class;

/// Cantor pairing: (a+b)(a+b+1)/2 + b. A bijection N x N -> N.
Natural cantor_pair(const Natural& a, const Natural& b);

/// Inverse of cantor_pair.
std::pair<Natural, Natural> cantor_unpair(const Natural& p);

std::string to_decimal(const Natural& n);

/// Parses a non-empty string of ASCII digits. Anything else yields nullopt.
std::optional<Natural> parse_decimal(std::string_view text);

/// Number of decimal digits of n (1 for zero).
std::size_t decimal_digits(const Natural& n);

} // namespace lawvere
