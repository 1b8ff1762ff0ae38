#pragma once

/*
 * The identity battery: quantum-power expressions for classical powers,
 * the product relations, and associativity sweeps.
 *
 * The relations use two recurring constructions.  First, eta^u can be
 * rewritten in quantum powers of eta (shifted by q-corrections that depend
 * on the regime).  Second, the classical relation prod_i (eta - sigma_i)
 * deformed to quantum products: since the sigma_i square to zero and
 * commute, the product expands through elementary symmetric polynomials as
 *
 *   prod*_i (X - sigma_i) = sum_{j=0}^{g} (-1)^j (theta^j/j!) cup X^{*(g-j)},
 *
 * with the theta-factors acting classically.
 */

#include "symq/ambient.hpp"
#include "symq/quantum.hpp"
#include "symq/rational.hpp"
#include "symq/ring.hpp"

#include <array>
#include <optional>
#include <stdexcept>

namespace symq {

enum class WIdentityCase { I, II, III, IV };
enum class YRelationCase { I, II, III };

namespace detail {

// coeff * theta^pow as a class; a negative power only ever arises paired
// with a zero coefficient by the 1/n! convention, so it is the zero class.
inline CohClass theta_times(const Ambient& amb, long pow,
                            const Rational& coeff) {
    CohClass out(amb);
    if (pow >= 0)
        out.add_term(pow, 0, coeff);
    return out;
}

// eta + q as a quantum element.
inline QClass eta_plus_q(const Ambient& amb, long trunc) {
    QClass out(amb, trunc);
    out.set_order(0, CohClass::eta(amb));
    out.set_order(1, CohClass::unit(amb));
    return out;
}

// r = q theta/(1-q): theta at every positive order.
inline QClass r_series(const Ambient& amb, long trunc) {
    QClass out(amb, trunc);
    for (long e = 1; e <= trunc; ++e)
        out.set_order(e, CohClass::theta(amb));
    return out;
}

// sum_{j=0}^{g} (-1)^j (theta^j/j!) cup base^{*(g-j)}.
inline QClass prod_star(const QClass& base) {
    const Ambient& amb = base.ambient();
    const long trunc = base.truncation_order();
    QClass acc(amb, trunc);
    for (long j = 0; j <= amb.g; ++j) {
        const Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
        const QClass term = qc_cup(
            qc_pow(base, amb.g - j),
            theta_times(amb, j, sign * inv_factorial(j)));
        acc = qc_add(acc, term);
    }
    return acc;
}

} // namespace detail

// The classical relation sum_{j=0}^{g} (-1)^j eta^(g-j) theta^j/j!, which
// reduces to zero whenever g <= d <= 2g-2.
inline CohClass classical_relation(const Ambient& amb) {
    CohClass out(amb);
    for (long j = 0; j <= amb.g; ++j) {
        const Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
        out.add_term(j, amb.g - j, sign * inv_factorial(j));
    }
    return out;
}

// Checks the quantum-power expression for eta^u in the given regime:
//   (I)   d > g      : eta^u = eta^{*u} - q sum_{j=0}^{n} eta^{*(n-j)} theta^j/j!,
//                      n = u-d+g-1;
//   (II)  d = g      : same shape with eta+q as the base and j < u;
//   (III) d = g-1    : base eta+r, r = q theta/(1-q), denominators (j+1)!;
//   (IV)  g/2 < d <= g-1 : eta^{*u} - q sum_j eta^{*j} theta^(n-j)/(n-j)!
//                      + q u eta^{*(u-1)} theta^(g-d)/(g-d)!, modulo q^2.
inline bool verify_w_identity(long u, WIdentityCase c, const Ambient& amb,
                              long trunc) {
    if (u < 0)
        throw std::invalid_argument("verify_w_identity: negative power");
    const QClass lhs = qc_embed(CohClass::eta_power(amb, u), trunc);
    switch (c) {
    case WIdentityCase::I: {
        if (amb.d <= amb.g)
            throw std::invalid_argument("verify_w_identity: case (i) needs d > g");
        QClass rhs = qpow(CohClass::eta(amb), u, trunc);
        const long n = u - amb.d + amb.g - 1;
        if (n >= 0) {
            QClass corr(amb, trunc);
            for (long j = 0; j <= n; ++j)
                corr = qc_add(corr,
                              qc_cup(qpow(CohClass::eta(amb), n - j, trunc),
                                     detail::theta_times(amb, j, inv_factorial(j))));
            rhs = qc_sub(rhs, qc_shift(corr, 1));
        }
        return rhs == lhs;
    }
    case WIdentityCase::II: {
        if (amb.d != amb.g)
            throw std::invalid_argument("verify_w_identity: case (ii) needs d = g");
        const QClass base = detail::eta_plus_q(amb, trunc);
        QClass rhs = qc_pow(base, u);
        QClass corr(amb, trunc);
        for (long j = 0; j < u; ++j)
            corr = qc_add(corr,
                          qc_cup(qc_pow(base, u - 1 - j),
                                 detail::theta_times(amb, j, inv_factorial(j))));
        rhs = qc_sub(rhs, qc_shift(corr, 1));
        return rhs == lhs;
    }
    case WIdentityCase::III: {
        if (amb.d != amb.g - 1)
            throw std::invalid_argument(
                "verify_w_identity: case (iii) needs d = g-1");
        const QClass r = detail::r_series(amb, trunc);
        const QClass base = qc_add(qc_embed(CohClass::eta(amb), trunc), r);
        QClass rhs = qc_pow(base, u);
        QClass corr(amb, trunc);
        for (long j = 0; j < u; ++j)
            corr = qc_add(corr,
                          qc_cup(qc_pow(base, u - 1 - j),
                                 detail::theta_times(amb, j, inv_factorial(j + 1))));
        rhs = qc_sub(rhs, qmul(r, corr));
        return rhs == lhs;
    }
    case WIdentityCase::IV: {
        if (2 * amb.d <= amb.g || amb.d > amb.g - 1)
            throw std::invalid_argument(
                "verify_w_identity: case (iv) needs g/2 < d <= g-1");
        const long n = u - amb.d + amb.g - 1;
        QClass rhs = qpow(CohClass::eta(amb), u, trunc);
        QClass corr(amb, trunc);
        for (long j = 0; j < u; ++j)
            corr = qc_add(corr,
                          qc_cup(qpow(CohClass::eta(amb), j, trunc),
                                 detail::theta_times(amb, n - j,
                                                     inv_factorial(n - j))));
        rhs = qc_sub(rhs, qc_shift(corr, 1));
        if (u >= 1) {
            const QClass extra = qc_scale(
                qc_cup(qpow(CohClass::eta(amb), u - 1, trunc),
                       detail::theta_times(amb, amb.g - amb.d,
                                           inv_factorial(amb.g - amb.d))),
                Rational(u));
            rhs = qc_add(rhs, qc_shift(extra, 1));
        }
        // Stated only modulo q^2.
        return qc_equal_up_to(rhs, lhs, 1);
    }
    }
    return false;
}

// Checks the product relations:
//   (I)   d > 2g-2 (and d > g): eta^{*(d-2g+1)} * prod*(eta - sigma_i) = q;
//   (II)  g < d <= 2g-2       : prod*(eta - sigma_i) = q eta^{*(2g-1-d)};
//   (III) d = g               : prod*(eta - sigma_i + q) = q (eta+q)^{*(g-1)}.
inline bool verify_y_relation(YRelationCase c, const Ambient& amb, long trunc) {
    switch (c) {
    case YRelationCase::I: {
        if (amb.d <= 2 * amb.g - 2 || amb.d <= amb.g)
            throw std::invalid_argument(
                "verify_y_relation: case (i) needs d > max(2g-2, g)");
        const QClass etah = qc_embed(CohClass::eta(amb), trunc);
        const QClass lhs =
            qmul(qc_pow(etah, amb.d - 2 * amb.g + 1), detail::prod_star(etah));
        const QClass rhs = qc_shift(qc_unit(amb, trunc), 1);
        return lhs == rhs;
    }
    case YRelationCase::II: {
        if (amb.d <= amb.g || amb.d > 2 * amb.g - 2)
            throw std::invalid_argument(
                "verify_y_relation: case (ii) needs g < d <= 2g-2");
        const QClass etah = qc_embed(CohClass::eta(amb), trunc);
        const QClass lhs = detail::prod_star(etah);
        const QClass rhs = qc_shift(qc_pow(etah, 2 * amb.g - 1 - amb.d), 1);
        return lhs == rhs;
    }
    case YRelationCase::III: {
        if (amb.d != amb.g)
            throw std::invalid_argument("verify_y_relation: case (iii) needs d = g");
        const QClass base = detail::eta_plus_q(amb, trunc);
        const QClass lhs = detail::prod_star(base);
        const QClass rhs = qc_shift(qc_pow(base, amb.g - 1), 1);
        return lhs == rhs;
    }
    }
    return false;
}

struct AssocReport {
    bool ok = true;
    long checked = 0;
    std::optional<std::array<long, 3>> counterexample;
};

// Compares (eta^u * eta^v) * eta^w with eta^u * (eta^v * eta^w) for all
// 1 <= u,v,w <= max_u with u+v+w <= d+3, order by order on the known
// coefficients, and reports the first counterexample.
inline AssocReport verify_associativity(const Ambient& amb, long trunc,
                                        long max_u) {
    AssocReport rep;
    for (long u = 1; u <= max_u; ++u)
        for (long v = 1; v <= max_u; ++v)
            for (long w = 1; w <= max_u; ++w) {
                if (u + v + w > amb.d + 3)
                    continue;
                const QClass X = qc_embed(CohClass::eta_power(amb, u), trunc);
                const QClass Y = qc_embed(CohClass::eta_power(amb, v), trunc);
                const QClass Z = qc_embed(CohClass::eta_power(amb, w), trunc);
                const QClass lhs = qmul(qmul(X, Y), Z);
                const QClass rhs = qmul(X, qmul(Y, Z));
                ++rep.checked;
                for (long e = 0; e <= trunc; ++e) {
                    if (!lhs.known(e) || !rhs.known(e))
                        continue;
                    if (lhs.order(e) != rhs.order(e)) {
                        rep.ok = false;
                        rep.counterexample = std::array<long, 3>{u, v, w};
                        return rep;
                    }
                }
            }
    return rep;
}

} // namespace symq
