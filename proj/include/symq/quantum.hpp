#pragma once

/*
 * The little quantum product on the eta-theta subring over the truncated
 * Novikov ring, with honest bookkeeping of the open window.
 *
 * Everything is driven by the products eta^u * eta^v: the q^1 coefficient
 * comes from the degree-1 closed formula, the q^2 coefficient from the
 * degree-2 one, d = g-1 repeats one coefficient as q/(1-q), and d > g-1
 * stops after q^1.  General classes multiply by theta-linearity: quantum
 * multiplication by theta coincides with cup multiplication by theta
 * (theta is a product of odd classes, which multiply classically), so
 *
 *   (theta^a eta^u) * (theta^b eta^v) = theta^(a+b) cup (eta^u * eta^v)
 *
 * order by order.  In the window 3/4 g <= d < g-1 every order e >= 3 is
 * carried as an explicit unknown, never as a fabricated number; unknown
 * coefficients taint downstream arithmetic except where a known zero
 * multiplies them away.
 */

#include "symq/ambient.hpp"
#include "symq/gw.hpp"
#include "symq/qseries.hpp"
#include "symq/rational.hpp"
#include "symq/reduce.hpp"
#include "symq/ring.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace symq {

// A quantum-product result: one reduced CohClass per power of q up to the
// truncation order, where nullopt marks a coefficient the theory leaves
// open.
class QClass {
  public:
    QClass(const Ambient& amb, long trunc)
        : amb_(amb), orders_(checked_size(trunc), CohClass::zero(amb)) {}

    const Ambient& ambient() const { return amb_; }
    long truncation_order() const {
        return static_cast<long>(orders_.size()) - 1;
    }

    bool known(long e) const { return order_opt(e).has_value(); }
    bool known_zero(long e) const {
        const auto& o = order_opt(e);
        return o.has_value() && o->empty();
    }
    bool has_unknown() const {
        for (const auto& o : orders_)
            if (!o)
                return true;
        return false;
    }

    const std::optional<CohClass>& order_opt(long e) const {
        check_order(e);
        return orders_[static_cast<std::size_t>(e)];
    }
    const CohClass& order(long e) const {
        const auto& o = order_opt(e);
        if (!o)
            throw std::logic_error("QClass: order is unknown");
        return *o;
    }

    // Stores the canonical representative (set_order reduces).
    void set_order(long e, const CohClass& c) {
        check_order(e);
        require_same(amb_, c.ambient());
        orders_[static_cast<std::size_t>(e)] = reduce(c);
    }
    void set_unknown(long e) {
        check_order(e);
        orders_[static_cast<std::size_t>(e)] = std::nullopt;
    }

    friend bool operator==(const QClass& x, const QClass& y) {
        return x.amb_ == y.amb_ && x.orders_ == y.orders_;
    }
    friend bool operator!=(const QClass& x, const QClass& y) {
        return !(x == y);
    }

  private:
    static std::size_t checked_size(long trunc) {
        if (trunc < 1)
            throw std::invalid_argument("QClass: truncation order must be >= 1");
        return static_cast<std::size_t>(trunc) + 1;
    }

    void check_order(long e) const {
        if (e < 0 || e > truncation_order())
            throw std::out_of_range("QClass: order out of range");
    }

    Ambient amb_;
    std::vector<std::optional<CohClass>> orders_;
};

// The q^1 coefficient of eta^u * eta^v (all regimes):
//
//   sum_{i=0}^{u-1} [ theta^(g-d+i+v)/(g-d+i+v)! eta^(u-1-i)
//                   - theta^(g-d+i)/(g-d+i)!   eta^(u+v-1-i) ].
//
// Returned unreduced; homogeneous of degree u+v-(d-g+1).
inline CohClass q1_coefficient(long u, long v, const Ambient& amb) {
    if (u < 0 || v < 0)
        throw std::invalid_argument("q1_coefficient: negative eta-exponent");
    CohClass out(amb);
    for (long i = 0; i < u; ++i) {
        out.add_term(amb.g - amb.d + i + v, u - 1 - i,
                     inv_factorial(amb.g - amb.d + i + v));
        out.add_term(amb.g - amb.d + i, u + v - 1 - i,
                     -inv_factorial(amb.g - amb.d + i));
    }
    return out;
}

// The q^2 coefficient of eta^u * eta^v for d <= g-1:
//
//   sum_{n=0}^{g-1-d} sum_{p=0}^{n} binom(n,p)/(2^n (g-1-d-n)!)
//     sum_{i=0}^{u-1} [ theta^(2g-2d-1-n+i+v+p) eta^(u-1+n-i-p) / (g-d+i+v+p)!
//                     - theta^(2g-2d-1-n+i+p) eta^(u+v-1+n-i-p) / (g-d+i+p)! ].
//
// Dual to the degree-2 closed formula; at d = g-1 it degenerates to the
// q^1 coefficient.  Returned unreduced; homogeneous of degree
// u+v-2(d-g+1).  Identically zero for d > g-1.
inline CohClass q2_coefficient(long u, long v, const Ambient& amb) {
    if (u < 0 || v < 0)
        throw std::invalid_argument("q2_coefficient: negative eta-exponent");
    CohClass out(amb);
    if (amb.d > amb.g - 1)
        return out;
    const long top = amb.g - 1 - amb.d;
    for (long n = 0; n <= top; ++n)
        for (long p = 0; p <= n; ++p) {
            const Rational pref(binomial(n, p), pow2(n) * factorial(top - n));
            for (long i = 0; i < u; ++i) {
                out.add_term(2 * (amb.g - amb.d) - 1 - n + i + v + p,
                             u - 1 + n - i - p,
                             pref * inv_factorial(amb.g - amb.d + i + v + p));
                out.add_term(2 * (amb.g - amb.d) - 1 - n + i + p,
                             u + v - 1 + n - i - p,
                             -pref * inv_factorial(amb.g - amb.d + i + p));
            }
        }
    return out;
}

// eta^u * eta^v as a QClass truncated at order N, with every coefficient
// reduced.  Regime dispatch:
//   d > g-1 : q^0 + q^1, all higher orders zero;
//   d = g-1 : the q^1 coefficient repeated at every order (q/(1-q) series);
//   d < g-1 : q^1 and q^2 from the closed formulas, orders past the
//             hyperbola zero, and in the window 3/4 g <= d < g-1 every
//             requested order >= 3 marked unknown.
inline QClass qprod_eta(long u, long v, const Ambient& amb, long trunc) {
    if (u < 0 || v < 0)
        throw std::invalid_argument("qprod_eta: negative eta-exponent");
    QClass out(amb, trunc);
    out.set_order(0, CohClass::eta_power(amb, u + v));
    if (amb.d > amb.g - 1) {
        out.set_order(1, q1_coefficient(u, v, amb));
        return out;
    }
    if (amb.d == amb.g - 1) {
        QClass base(amb, trunc);
        base.set_order(1, q1_coefficient(u, v, amb));
        const QSeries geom = QSeries::geometric(trunc);
        for (long e = 1; e <= trunc; ++e)
            out.set_order(e, geom.coeff(e) * base.order(1));
        return out;
    }
    out.set_order(1, q1_coefficient(u, v, amb));
    if (trunc >= 2)
        out.set_order(2, q2_coefficient(u, v, amb));
    if (in_open_window(amb))
        for (long e = 3; e <= trunc; ++e)
            out.set_unknown(e);
    return out;
}

// Quantum product of arbitrary classes by theta-linearity.  An unknown
// eta-product coefficient keeps the result unknown at that order unless it
// is multiplied by the zero class (theta-power above g), matching the
// blanket open-window marking of qprod_eta.
inline QClass qprod(const CohClass& x, const CohClass& y, long trunc) {
    require_same(x.ambient(), y.ambient());
    const Ambient& amb = x.ambient();
    std::vector<std::optional<CohClass>> acc(
        static_cast<std::size_t>(trunc) + 1, CohClass::zero(amb));
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) {
            const QClass base = qprod_eta(mx.b, my.b, amb, trunc);
            const long theta_tot = mx.a + my.a;
            const CohClass theta_factor =
                CohClass::monomial(amb, theta_tot, 0, cx * cy);
            for (long e = 0; e <= trunc; ++e) {
                auto& slot = acc[static_cast<std::size_t>(e)];
                if (!base.known(e)) {
                    if (theta_tot <= amb.g)
                        slot = std::nullopt;
                    continue;
                }
                if (slot)
                    *slot += cup(theta_factor, base.order(e));
            }
        }
    QClass out(amb, trunc);
    for (long e = 0; e <= trunc; ++e) {
        const auto& slot = acc[static_cast<std::size_t>(e)];
        if (slot)
            out.set_order(e, *slot);
        else
            out.set_unknown(e);
    }
    return out;
}

// Embedding of a classical class as a QClass: the class at q^0, zero tail.
inline QClass qc_embed(const CohClass& x, long trunc) {
    QClass out(x.ambient(), trunc);
    out.set_order(0, x);
    return out;
}

inline QClass qc_unit(const Ambient& amb, long trunc) {
    return qc_embed(CohClass::unit(amb), trunc);
}

// Full product of two quantum elements: the q^t coefficient collects
// qprod(A_e, B_f) at order h for all e+f+h = t.  An unknown factor taints
// every order from e+f upward unless the other factor is known zero.
inline QClass qmul(const QClass& A, const QClass& B) {
    require_same(A.ambient(), B.ambient());
    if (A.truncation_order() != B.truncation_order())
        throw std::invalid_argument("qmul: truncation order mismatch");
    const Ambient& amb = A.ambient();
    const long trunc = A.truncation_order();
    std::vector<std::optional<CohClass>> acc(
        static_cast<std::size_t>(trunc) + 1, CohClass::zero(amb));
    for (long e = 0; e <= trunc; ++e)
        for (long f = 0; e + f <= trunc; ++f) {
            if (A.known_zero(e) || B.known_zero(f))
                continue;
            if (!A.known(e) || !B.known(f)) {
                for (long t = e + f; t <= trunc; ++t)
                    acc[static_cast<std::size_t>(t)] = std::nullopt;
                continue;
            }
            const QClass prod = qprod(A.order(e), B.order(f), trunc);
            for (long h = 0; e + f + h <= trunc; ++h) {
                auto& slot = acc[static_cast<std::size_t>(e + f + h)];
                if (!prod.known(h)) {
                    slot = std::nullopt;
                    continue;
                }
                if (slot)
                    *slot += prod.order(h);
            }
        }
    QClass out(amb, trunc);
    for (long t = 0; t <= trunc; ++t) {
        const auto& slot = acc[static_cast<std::size_t>(t)];
        if (slot)
            out.set_order(t, *slot);
        else
            out.set_unknown(t);
    }
    return out;
}

// n-th quantum power of a quantum element, folding qmul from the left;
// n = 0 gives the unit.
inline QClass qc_pow(const QClass& x, long n) {
    if (n < 0)
        throw std::invalid_argument("qc_pow: negative power");
    QClass out = qc_unit(x.ambient(), x.truncation_order());
    for (long i = 0; i < n; ++i)
        out = qmul(out, x);
    return out;
}

// n-th quantum power of a classical class.
inline QClass qpow(const CohClass& x, long n, long trunc) {
    return qc_pow(qc_embed(x, trunc), n);
}

inline QClass qc_add(const QClass& A, const QClass& B) {
    require_same(A.ambient(), B.ambient());
    if (A.truncation_order() != B.truncation_order())
        throw std::invalid_argument("qc_add: truncation order mismatch");
    QClass out(A.ambient(), A.truncation_order());
    for (long e = 0; e <= A.truncation_order(); ++e) {
        if (A.known(e) && B.known(e))
            out.set_order(e, A.order(e) + B.order(e));
        else
            out.set_unknown(e);
    }
    return out;
}

inline QClass qc_sub(const QClass& A, const QClass& B) {
    require_same(A.ambient(), B.ambient());
    if (A.truncation_order() != B.truncation_order())
        throw std::invalid_argument("qc_sub: truncation order mismatch");
    QClass out(A.ambient(), A.truncation_order());
    for (long e = 0; e <= A.truncation_order(); ++e) {
        if (A.known(e) && B.known(e))
            out.set_order(e, A.order(e) - B.order(e));
        else
            out.set_unknown(e);
    }
    return out;
}

inline QClass qc_scale(const QClass& A, const Rational& s) {
    QClass out(A.ambient(), A.truncation_order());
    for (long e = 0; e <= A.truncation_order(); ++e) {
        if (s == 0 || A.known(e))
            out.set_order(e, s == 0 ? CohClass::zero(A.ambient())
                                    : s * A.order(e));
        else
            out.set_unknown(e);
    }
    return out;
}

// Multiplication by q^k: shifts every coefficient up, truncating the top.
inline QClass qc_shift(const QClass& A, long k) {
    if (k < 0)
        throw std::invalid_argument("qc_shift: negative shift");
    QClass out(A.ambient(), A.truncation_order());
    for (long e = k; e <= A.truncation_order(); ++e) {
        if (A.known(e - k))
            out.set_order(e, A.order(e - k));
        else
            out.set_unknown(e);
    }
    return out;
}

// Classical (cup) multiplication of every coefficient by a fixed class; an
// unknown coefficient survives unless the factor is zero.
inline QClass qc_cup(const QClass& A, const CohClass& c) {
    require_same(A.ambient(), c.ambient());
    QClass out(A.ambient(), A.truncation_order());
    for (long e = 0; e <= A.truncation_order(); ++e) {
        if (A.known(e))
            out.set_order(e, cup(A.order(e), c));
        else if (c.empty())
            out.set_order(e, CohClass::zero(A.ambient()));
        else
            out.set_unknown(e);
    }
    return out;
}

// Order-by-order equality of the coefficients up to max_order, treating
// unknown as equal only to unknown.
inline bool qc_equal_up_to(const QClass& A, const QClass& B, long max_order) {
    require_same(A.ambient(), B.ambient());
    for (long e = 0; e <= max_order; ++e) {
        if (A.known(e) != B.known(e))
            return false;
        if (A.known(e) && A.order(e) != B.order(e))
            return false;
    }
    return true;
}

} // namespace symq
