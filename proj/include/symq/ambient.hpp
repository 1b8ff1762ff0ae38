#pragma once

/*
 * Ambient parameters for the symmetric product Sym^d of a smooth curve of
 * genus g.  Every class, product and invariant below is computed relative
 * to one of these parameter pairs, so the pair travels with each value and
 * mixed-ambient arithmetic is rejected.
 */

#include "symq/rational.hpp"

#include <stdexcept>

namespace symq {

struct Ambient {
    long g = 0; // genus of the underlying curve, g >= 0
    long d = 0; // symmetric-product degree, d >= 1

    Ambient() = default;

    Ambient(long genus, long degree) : g(genus), d(degree) {
        if (genus < 0)
            throw std::invalid_argument("Ambient: genus must be >= 0");
        if (degree < 1)
            throw std::invalid_argument("Ambient: degree must be >= 1");
    }

    friend bool operator==(const Ambient& a, const Ambient& b) {
        return a.g == b.g && a.d == b.d;
    }
    friend bool operator!=(const Ambient& a, const Ambient& b) {
        return !(a == b);
    }
};

inline void require_same(const Ambient& a, const Ambient& b) {
    if (a != b)
        throw std::invalid_argument("mismatched ambient parameters");
}

// Degree of the quantum parameter q in the generator grading
// (deg eta = deg theta = 1): each power of q shifts degree by d - g + 1.
inline long q_degree(const Ambient& a) {
    return a.d - a.g + 1;
}

// Expected dimension rho(r) = g - (r+1)(g-d+r) of the locus of special
// divisors with r extra sections; r = e - 1 governs which multiple-cover
// contributions can appear at order q^e.
inline Rational brill_noether_rho(const Ambient& a, long r) {
    return Rational(a.g - (r + 1) * (a.g - a.d + r));
}

} // namespace symq
