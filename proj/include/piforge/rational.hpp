#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "piforge/big_real.hpp"

namespace piforge {

/// Unbounded-integer rational, always canonical (reduced, positive denominator).
using ExactRational = mpq_class;

/// Parses "p" or "p/q" (decimal integers, optional sign) into a canonical
/// rational. Throws DomainError on malformed text or a zero denominator.
ExactRational parse_rational(std::string_view text);

/// Parses and additionally requires the value to be strictly positive.
ExactRational parse_positive_rational(std::string_view text);

/// "p" when the denominator is one, otherwise "p/q".
std::string format_rational(const ExactRational& value);

/// sqrt(r) at the given precision.
BigReal sqrt_rational(const ExactRational& r, Bits prec);

}  // namespace piforge
