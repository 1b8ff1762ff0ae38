#pragma once

/*
 * Closed-form 3-point Gromov-Witten invariants of Sym^d and the regime
 * classifier.
 *
 * Degree 1 and degree 2 have explicit binomial formulas.  For e >= 2 the
 * invariants vanish when d > g-1 and coincide with degree 1 when d = g-1.
 * For d < g-1 they vanish beyond the hyperbola e > (d-3)/(g-1-d); inside
 * the window 3/4 g <= d < g-1 the orders e >= 3 under the hyperbola are
 * genuinely open, and gw_e reports them as unknown rather than guessing.
 */

#include "symq/ambient.hpp"
#include "symq/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace symq {

// <eta^u, eta^v, theta^(g-m) eta^w>_1 =
//   (g!/m!) sum_{i=0}^{u-1} [binom(m, g-d+i+v) - binom(m, g-d+i)],
// m = 2g-2d-1+u+v+w.  An infeasible third insertion (g-m < 0) or m < 0
// gives 0.
inline Rational gw1(long u, long v, long w, const Ambient& amb) {
    if (u < 0 || v < 0 || w < 0)
        throw std::invalid_argument("gw1: negative eta-exponent");
    const long m = 2 * amb.g - 2 * amb.d - 1 + u + v + w;
    if (m < 0 || amb.g - m < 0)
        return Rational(0);
    Int sum = 0;
    for (long i = 0; i < u; ++i)
        sum += binomial(m, amb.g - amb.d + i + v) - binomial(m, amb.g - amb.d + i);
    return Rational(factorial(amb.g) * sum, factorial(m));
}

// <eta^u, eta^v, theta^(d+1-m) eta^w>_2 =
//   sum_{n=0}^{g-1-d} sum_{p=0}^{n} binom(n,p) g!/(2^n (g-1-d-n)! (m+n)!)
//     * sum_{i=0}^{u-1} [binom(m+n, g-d+i+v+p) - binom(m+n, g-d+i+p)].
// The outer sum is empty for d > g-1; an infeasible third insertion
// (d+1-m < 0) gives 0.
inline Rational gw2(long u, long v, long w, const Ambient& amb) {
    if (u < 0 || v < 0 || w < 0)
        throw std::invalid_argument("gw2: negative eta-exponent");
    if (amb.d > amb.g - 1)
        return Rational(0);
    const long m = 2 * amb.g - 2 * amb.d - 1 + u + v + w;
    if (amb.d + 1 - m < 0)
        return Rational(0);
    const long top = amb.g - 1 - amb.d;
    Rational acc(0);
    for (long n = 0; n <= top; ++n)
        for (long p = 0; p <= n; ++p) {
            Int sum = 0;
            for (long i = 0; i < u; ++i)
                sum += binomial(m + n, amb.g - amb.d + i + v + p) -
                       binomial(m + n, amb.g - amb.d + i + p);
            if (sum == 0)
                continue;
            acc += Rational(binomial(n, p) * factorial(amb.g) * sum,
                            pow2(n) * factorial(top - n) * factorial(m + n));
        }
    return acc;
}

// The theta-power of the third insertion forced by the dimension
// constraint sum deg = 2d + 2e(d-g+1): for e = 1 this is g-m, for e = 2 it
// is d+1-m.
inline long insertion_theta_power(long u, long v, long w, long e,
                                  const Ambient& amb) {
    return amb.d + e * (amb.d - amb.g + 1) - (u + v + w);
}

// Whether (g,d) lies in the open window 3/4 g <= d < g-1, where the orders
// e >= 3 are not settled.
inline bool in_open_window(const Ambient& amb) {
    return amb.d < amb.g - 1 && 4 * amb.d >= 3 * amb.g;
}

// <eta^u, eta^v, theta^t eta^w>_e with t = insertion_theta_power.  nullopt
// means the value is genuinely open (window d in [3/4 g, g-1), 3 <= e <=
// hyperbola bound); it is never silently replaced by a number.
inline std::optional<Rational> gw_e(long u, long v, long w, long e,
                                    const Ambient& amb) {
    if (e < 1)
        throw std::invalid_argument("gw_e: curve degree must be >= 1");
    if (e == 1)
        return gw1(u, v, w, amb);
    if (amb.d > amb.g - 1)
        return Rational(0);
    if (amb.d == amb.g - 1)
        return gw1(u, v, w, amb);
    // d < g-1: vanishing beyond the hyperbola e > (d-3)/(g-1-d).
    if (e * (amb.g - 1 - amb.d) > amb.d - 3)
        return Rational(0);
    if (e == 2)
        return gw2(u, v, w, amb);
    return std::nullopt;
}

enum class RegimeClass {
    AllClassical,  // every q-correction vanishes
    QLinearOnly,   // only the q^1 coefficient survives
    QQ2Complete,   // q^1 and q^2 survive, everything higher vanishes
    DGm1Series,    // d = g-1: one coefficient repeated as q/(1-q)
    UnknownTail,   // window: q^1, q^2 known, some higher orders open
};

inline const char* to_string(RegimeClass c) {
    switch (c) {
    case RegimeClass::AllClassical: return "all classical";
    case RegimeClass::QLinearOnly: return "q-linear only";
    case RegimeClass::QQ2Complete: return "q and q^2 complete";
    case RegimeClass::DGm1Series: return "d = g-1 series";
    case RegimeClass::UnknownTail: return "unknown tail";
    }
    return "?";
}

struct RegimeReport {
    Ambient amb;
    long deg_q = 0;                          // cohomological degree 2(d-g+1)
    std::optional<Rational> hyperbola_bound; // nullopt at d = g-1 (infinite)
    RegimeClass cls = RegimeClass::AllClassical;
    std::string known_orders;
};

// Classifies (g,d) by which q-coefficients of eta^u * eta^v are known,
// zero, or open.
inline RegimeReport regime(const Ambient& amb) {
    RegimeReport rep;
    rep.amb = amb;
    rep.deg_q = 2 * (amb.d - amb.g + 1);
    if (amb.d == amb.g - 1) {
        rep.hyperbola_bound = std::nullopt;
        rep.cls = RegimeClass::DGm1Series;
        rep.known_orders =
            "q^0 classical; all q^e (e >= 1) equal, summing to q/(1-q)";
        return rep;
    }
    const Rational hyp =
        Rational(Int(amb.d - 3)) / Rational(Int(amb.g - 1 - amb.d));
    rep.hyperbola_bound = hyp;
    if (amb.d > amb.g - 1) {
        rep.cls = RegimeClass::QLinearOnly;
        rep.known_orders = "q^0 classical; q^1 exact; q^e = 0 for e >= 2";
        return rep;
    }
    if (hyp < 1) {
        rep.cls = RegimeClass::AllClassical;
        rep.known_orders = "q^0 classical; q^e = 0 for e >= 1";
    } else if (hyp < 2) {
        rep.cls = RegimeClass::QLinearOnly;
        rep.known_orders = "q^0 classical; q^1 exact; q^e = 0 for e >= 2";
    } else if (hyp < 3) {
        rep.cls = RegimeClass::QQ2Complete;
        rep.known_orders = "q^0 classical; q^1, q^2 exact; q^e = 0 for e >= 3";
    } else {
        rep.cls = RegimeClass::UnknownTail;
        rep.known_orders =
            "q^0 classical; q^1, q^2 exact; q^e open for 3 <= e <= " +
            symq::to_string(hyp) + "; q^e = 0 beyond";
    }
    return rep;
}

} // namespace symq
