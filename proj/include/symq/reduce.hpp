#pragma once

/*
 * Canonical representatives modulo the Poincare-pairing kernel.
 *
 * The subring is realized as the quotient of the free span of monomials
 * theta^a eta^b by the kernel of the intersection pairing: a class is zero
 * exactly when it pairs to zero against every monomial of complementary
 * degree.  In each degree k the canonical basis is the lexicographically
 * earliest subset of {theta^a eta^(k-a)}, a ascending, whose pairing rows
 * are linearly independent; reduce() rewrites any class on that basis.
 * This makes equality, rank and vanishing questions finite exact linear
 * algebra over Q.
 */

#include "symq/ambient.hpp"
#include "symq/rational.hpp"
#include "symq/ring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace symq {

// The nonzero monomials of degree k, ordered by ascending theta-exponent.
inline std::vector<Monomial> degree_monomials(const Ambient& amb, long k) {
    std::vector<Monomial> out;
    if (k < 0 || k > amb.d)
        return out;
    for (long a = 0; a <= std::min(amb.g, k); ++a)
        out.push_back(Monomial{a, k - a});
    return out;
}

namespace detail {

// pair of two monomials of complementary degrees.
inline Rational monomial_pair(const Monomial& x, const Monomial& y,
                              const Ambient& amb) {
    const long a = x.a + y.a;
    if (a > amb.g)
        return Rational(0);
    return Rational(factorial(amb.g) / factorial(amb.g - a));
}

// Pairing row of a degree-k monomial against all complementary monomials.
inline std::vector<Rational> pairing_row(const Monomial& m,
                                         const std::vector<Monomial>& comps,
                                         const Ambient& amb) {
    std::vector<Rational> row;
    row.reserve(comps.size());
    for (const auto& c : comps)
        row.push_back(monomial_pair(m, c, amb));
    return row;
}

// Incremental row-independence test: keeps accepted rows in reduced form
// (pivot 1, pivots eliminated from later candidates).
struct RowSpan {
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> pivots;

    // Reduces row against the span in place; returns true (and absorbs the
    // row) if a nonzero remainder survives.
    bool try_insert(std::vector<Rational> row) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Rational f = row[pivots[r]];
            if (f == 0)
                continue;
            for (std::size_t j = 0; j < row.size(); ++j)
                row[j] -= f * rows[r][j];
        }
        std::size_t p = 0;
        while (p < row.size() && row[p] == 0)
            ++p;
        if (p == row.size())
            return false;
        const Rational inv = Rational(1) / row[p];
        for (auto& v : row)
            v *= inv;
        rows.push_back(std::move(row));
        pivots.push_back(p);
        return true;
    }
};

// Solves sum_i lambda_i * rows[i] = target for independent rows whose span
// contains target (both guaranteed by the callers here).
inline std::vector<Rational> solve_in_span(
    const std::vector<std::vector<Rational>>& rows,
    const std::vector<Rational>& target) {
    const std::size_t n = rows.size();
    const std::size_t m = target.size();
    // Transposed system with augmented right-hand side, solved by full
    // Gauss-Jordan elimination.
    std::vector<std::vector<Rational>> M(m, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            M[i][j] = rows[j][i];
        M[i][n] = target[i];
    }
    std::vector<std::size_t> pivot_row(n);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t r = rank;
        while (r < m && M[r][col] == 0)
            ++r;
        if (r == m)
            throw std::logic_error("solve_in_span: dependent rows");
        std::swap(M[rank], M[r]);
        const Rational inv = Rational(1) / M[rank][col];
        for (auto& v : M[rank])
            v *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == rank || M[i][col] == 0)
                continue;
            const Rational f = M[i][col];
            for (std::size_t j = 0; j <= n; ++j)
                M[i][j] -= f * M[rank][j];
        }
        pivot_row[col] = rank;
        ++rank;
    }
    for (std::size_t i = rank; i < m; ++i)
        if (M[i][n] != 0)
            throw std::logic_error("solve_in_span: target outside span");
    std::vector<Rational> lambda(n);
    for (std::size_t col = 0; col < n; ++col)
        lambda[col] = M[pivot_row[col]][n];
    return lambda;
}

} // namespace detail

// The canonical monomial basis of degree k: greedy selection, ascending
// theta-exponent, keeping each monomial whose pairing row is independent of
// the rows already kept.
inline std::vector<Monomial> canonical_basis(const Ambient& amb, long k) {
    const auto cands = degree_monomials(amb, k);
    const auto comps = degree_monomials(amb, amb.d - k);
    std::vector<Monomial> basis;
    detail::RowSpan span;
    for (const auto& m : cands)
        if (span.try_insert(detail::pairing_row(m, comps, amb)))
            basis.push_back(m);
    return basis;
}

// True iff x lies in the pairing kernel, i.e. pairs to zero against every
// complementary monomial degree by degree.  Equivalent to reduce(x) having
// no terms.
inline bool is_zero(const CohClass& x) {
    const Ambient& amb = x.ambient();
    std::map<long, CohClass> by_degree;
    for (const auto& [m, c] : x.terms()) {
        auto it = by_degree.try_emplace(m.degree(), CohClass(amb)).first;
        it->second.add_term(m.a, m.b, c);
    }
    for (const auto& [k, comp] : by_degree)
        for (const auto& nu : degree_monomials(amb, amb.d - k))
            if (pair(comp, CohClass::monomial(amb, nu.a, nu.b)) != 0)
                return false;
    return true;
}

// Canonical representative of x in the Poincare-duality quotient, computed
// degree by degree: express the pairing row of each homogeneous component
// in terms of the canonical-basis rows.
inline CohClass reduce(const CohClass& x) {
    const Ambient& amb = x.ambient();
    CohClass out(amb);
    std::map<long, CohClass::TermMap> by_degree;
    for (const auto& [m, c] : x.terms())
        by_degree[m.degree()].emplace(m, c);
    for (const auto& [k, terms] : by_degree) {
        const auto comps = degree_monomials(amb, amb.d - k);
        std::vector<Rational> target(comps.size(), Rational(0));
        for (const auto& [m, c] : terms) {
            const auto row = detail::pairing_row(m, comps, amb);
            for (std::size_t j = 0; j < comps.size(); ++j)
                target[j] += c * row[j];
        }
        if (std::all_of(target.begin(), target.end(),
                        [](const Rational& v) { return v == 0; }))
            continue;
        const auto basis = canonical_basis(amb, k);
        std::vector<std::vector<Rational>> rows;
        rows.reserve(basis.size());
        for (const auto& m : basis)
            rows.push_back(detail::pairing_row(m, comps, amb));
        const auto lambda = detail::solve_in_span(rows, target);
        for (std::size_t i = 0; i < basis.size(); ++i)
            out.add_term(basis[i].a, basis[i].b, lambda[i]);
    }
    return out;
}

// Rank of the degree-k intersection pairing, i.e. the dimension of the
// degree-k piece of the quotient subring.  Symmetric in k <-> d-k.
inline long dim_invariant_subring(const Ambient& amb, long k) {
    if (k < 0 || k > amb.d)
        throw std::invalid_argument("dim_invariant_subring: k out of range");
    return static_cast<long>(canonical_basis(amb, k).size());
}

} // namespace symq
