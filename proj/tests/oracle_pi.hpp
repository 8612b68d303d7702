// Rational enclosure of pi from Machin's formula, kept independent of the
// MPFR-backed decimal evaluation it is used to cross-check.
#pragma once

#include <utility>

#include "wpvol/rational.hpp"

namespace oracle {

using wpvol::Rational;

// Alternating partial sums of arctan(1/x) bracket the limit.
inline std::pair<Rational, Rational> arctan_inv_bounds(long x, int terms) {
    Rational sum(0);
    Rational low(0), high(0);
    for (int k = 0; k < terms; ++k) {
        Rational term = Rational(1) / Rational(2 * k + 1);
        for (int p = 0; p < 2 * k + 1; ++p) term = term / Rational(x);
        if (k % 2 == 0)
            sum = sum + term;
        else
            sum = sum - term;
        if (k == terms - 2) low = sum;
        if (k == terms - 1) high = sum;
    }
    if (low > high) std::swap(low, high);
    return {low, high};
}

// pi = 16 arctan(1/5) - 4 arctan(1/239)
inline std::pair<Rational, Rational> pi_bounds(int terms = 40) {
    auto a5 = arctan_inv_bounds(5, terms);
    auto a239 = arctan_inv_bounds(239, terms);
    Rational lo = Rational(16) * a5.first - Rational(4) * a239.second;
    Rational hi = Rational(16) * a5.second - Rational(4) * a239.first;
    return {lo, hi};
}

// Parse a plain decimal string like "-12.345" into an exact rational.
inline Rational decimal_to_rational(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational::from_string(s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    int places = static_cast<int>(s.size() - dot - 1);
    Rational denom(1);
    for (int i = 0; i < places; ++i) denom = denom * Rational(10);
    return Rational::from_string(digits) / denom;
}

}  // namespace oracle
