#ifndef EXOTIC_RATIONAL_HPP
#define EXOTIC_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace exotic {

// Exact rationals backed by GMP. mpq_class keeps values canonical
// (gcd(num, den) = 1, den > 0) through all arithmetic; only raw
// construction from a num/den pair needs an explicit canonicalize().
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0)
        throw std::invalid_argument("rat: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "a/b" or "a" with arbitrary-precision a, b.
inline Rational rat_from_string(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("rat_from_string: empty string");
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

// "a/b", or just "a" when the denominator is 1.
inline std::string rat_to_string(const Rational& r) {
    return r.get_str();
}

} // namespace exotic

#endif
