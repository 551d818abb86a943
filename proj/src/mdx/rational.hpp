#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace mdx {

// Exact rational scalar. boost's cpp_rational keeps gcd-reduced form with a
// positive denominator, which is exactly the canonical form we need.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(Integer(num), Integer(den));
}

// "p" when the denominator is 1, otherwise "p/q".
inline std::string rational_str(const Rational& r) {
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace mdx
