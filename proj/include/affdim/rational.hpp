#pragma once

#include <gmpxx.h>

#include <string>

#include "affdim/bigreal.hpp"

namespace affdim {

using Rational = mpq_class;

/// Parses "p/q" or "p" with optional sign; exact, never rounds.
/// Throws ConfigError on malformed input.
Rational rational_from_string(const std::string& s);

std::string rational_to_string(const Rational& q);

inline BigReal to_bigreal(const Rational& q, long prec) {
    return BigReal::from_rational(q, prec);
}

/// Number of bits in the larger of |numerator| and denominator.
long rational_bits(const Rational& q);

/// Nearest dyadic rational with a significand of at most `bits` bits.
Rational dyadic_round(const Rational& q, long bits);

}  // namespace affdim
