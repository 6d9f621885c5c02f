#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lsdual {

/// Exact element of Q. GMP keeps numerator/denominator coprime with a
/// positive denominator after every arithmetic operation.
using Rational = mpq_class;

/// Canonical "p/q" form; the denominator is always written, even when it is 1.
std::string to_string(const Rational& r);

/// num/den in lowest terms. Throws std::invalid_argument when den is zero.
Rational make_rational(long num, long den);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace lsdual
