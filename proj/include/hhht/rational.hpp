#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hhht {

using BigInt = mpz_class;
using Rational = mpq_class;

/// "num/den" in lowest terms; integers still carry "/1".
std::string to_fraction_string(const Rational& q);

/// Accepts "a/b", an integer, or a plain decimal such as "0.6" (converted exactly).
/// Throws DomainError on malformed input.
Rational parse_rational(std::string_view text);

/// parse_rational plus the open-interval check 0 < p < 1.
Rational parse_probability(std::string_view text);

}  // namespace hhht
