#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace piercing {

// mpq_class keeps values canonical (lowest terms, positive denominator)
// after every arithmetic operation; parse_rat canonicalizes string input.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

/// Parses "p/q", an integer, or a decimal literal ("-0.35", "2.", ".5")
/// exactly; surrounding whitespace is ignored and only the numerator may
/// carry a sign. Throws Error(E_PARSE) on anything else or a zero denominator.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& value);

int sign(const Rat& value);

RatVec zeros(std::size_t n);

Rat dot(const RatVec& a, const RatVec& b);

/// Linear interpolation of (x0, z0)-(x1, z1) at abscissa x, requires x0 != x1.
Rat lerp_at(const Rat& x0, const Rat& z0, const Rat& x1, const Rat& z1, const Rat& x);

}  // namespace piercing
