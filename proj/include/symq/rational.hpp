#pragma once

/*
 * Exact arithmetic primitives shared by the whole library.
 *
 * Everything downstream is a finite computation over Q, so all values are
 * arbitrary-precision rationals.  The combinatorial conventions live here:
 * 1/n! is taken to be 0 for n < 0, and binomial(n, k) is 0 unless
 * 0 <= k <= n.  Several closed formulas rely on those conventions to switch
 * terms off outside their range, so they are a contract, not a convenience.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace symq {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// n! for n >= 0; throws on negative input (callers wanting the "0 for
// negative" convention use inv_factorial, where it is meaningful).
inline Int factorial(long n) {
    if (n < 0)
        throw std::invalid_argument("factorial: negative argument");
    Int r = 1;
    for (long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

// 1/n!, with 1/n! = 0 for n < 0.
inline Rational inv_factorial(long n) {
    if (n < 0)
        return Rational(0);
    return Rational(Int(1), factorial(n));
}

// binomial(n, k) with value 0 unless 0 <= k <= n.  In particular negative n
// always gives 0; no upper-negation identity is applied.
inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return Int(0);
    if (k > n - k)
        k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

// 2^n as an exact integer, n >= 0.
inline Int pow2(long n) {
    if (n < 0)
        throw std::invalid_argument("pow2: negative exponent");
    return Int(1) << static_cast<unsigned>(n);
}

// Renders "p" or "p/q" with q > 0 and gcd(p, q) = 1 (cpp_rational keeps the
// canonical form internally).
inline std::string to_string(const Rational& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    std::string s = num.str();
    if (den != 1) {
        s += '/';
        s += den.str();
    }
    return s;
}

// Exact conversion to int64, throwing if the value does not fit.  Used by
// the JSON serialization, whose schema stores numerator/denominator as
// plain integers.
inline std::int64_t to_int64(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v < lo || v > hi)
        throw std::overflow_error("to_int64: value out of range");
    return v.convert_to<std::int64_t>();
}

} // namespace symq
