#pragma once

/*
 * Characteristic-class calculus on the Jacobian and its degeneracy loci:
 * the independent evaluation pipeline for 3-point invariants.
 *
 * The locus G^r_d of linear systems sits inside Jac_d as a degeneracy locus
 * of a bundle map E -> F with c(F - E) = exp(theta), so c_alpha(F - E) =
 * theta^alpha/alpha!.  The determinantal formula evaluates a monomial
 * theta^t x1^(i1) ... xk^(ik) against [G^(k-1)_d] as a k x k determinant in
 * the c_alpha, capped by theta^g [Jac_d] = g!.  Segre classes of the
 * tautological bundle turn eta-insertions into such monomials, and for
 * degree-2 invariants the virtual-class pushforward supplies an extra
 * 2-root expression of degree g-1-d.
 */

#include "symq/ambient.hpp"
#include "symq/rational.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace symq {

// coeff * theta^power; the return shape of chern_f_minus_e.
struct ThetaMonomial {
    long power = 0;
    Rational coeff;
};

// c_alpha(F - E) = theta^alpha/alpha! (zero for alpha < 0 by the 1/n!
// convention).  Powers above g vanish against [Jac_d]; the cap is applied
// by ChernExpr normalization rather than here.
inline ThetaMonomial chern_f_minus_e(long alpha, const Ambient&) {
    return ThetaMonomial{alpha, inv_factorial(alpha)};
}

// A polynomial in theta and a fixed number of formal Chern roots
// x1,...,xk, with rational coefficients.  Terms with theta-exponent above g
// are dropped (they die against [Jac_d]); nroots = 0 gives plain
// theta-polynomials, which is how determinant entries are handled.
class ChernExpr {
  public:
    struct Key {
        long theta = 0;
        std::vector<long> roots;

        friend bool operator==(const Key& x, const Key& y) {
            return x.theta == y.theta && x.roots == y.roots;
        }
        friend bool operator<(const Key& x, const Key& y) {
            if (x.theta != y.theta)
                return x.theta < y.theta;
            return x.roots < y.roots;
        }
    };
    using TermMap = std::map<Key, Rational>;

    ChernExpr(const Ambient& amb, int nroots) : amb_(amb), nroots_(nroots) {
        if (nroots < 0)
            throw std::invalid_argument("ChernExpr: negative root count");
    }

    static ChernExpr zero(const Ambient& amb, int nroots) {
        return ChernExpr(amb, nroots);
    }
    static ChernExpr one(const Ambient& amb, int nroots) {
        ChernExpr out(amb, nroots);
        out.add_term(0, std::vector<long>(nroots, 0), Rational(1));
        return out;
    }

    const Ambient& ambient() const { return amb_; }
    int nroots() const { return nroots_; }
    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(long theta, std::vector<long> roots, const Rational& coeff) {
        if (coeff == 0)
            return;
        if (theta < 0)
            throw std::invalid_argument("ChernExpr: negative theta-exponent");
        if (static_cast<int>(roots.size()) != nroots_)
            throw std::invalid_argument("ChernExpr: root tuple size mismatch");
        for (long r : roots)
            if (r < 0)
                throw std::invalid_argument("ChernExpr: negative root exponent");
        if (theta > amb_.g)
            return;
        Key k{theta, std::move(roots)};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(std::move(k), coeff);
        } else {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    ChernExpr& operator+=(const ChernExpr& other) {
        check_compatible(other);
        for (const auto& [k, c] : other.terms_)
            add_term(k.theta, k.roots, c);
        return *this;
    }
    ChernExpr& operator-=(const ChernExpr& other) {
        check_compatible(other);
        for (const auto& [k, c] : other.terms_)
            add_term(k.theta, k.roots, -c);
        return *this;
    }
    ChernExpr& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_)
            c *= s;
        return *this;
    }

    friend ChernExpr operator+(ChernExpr x, const ChernExpr& y) { return x += y; }
    friend ChernExpr operator-(ChernExpr x, const ChernExpr& y) { return x -= y; }
    friend ChernExpr operator*(ChernExpr x, const Rational& s) { return x *= s; }
    friend ChernExpr operator*(const Rational& s, ChernExpr x) { return x *= s; }

    friend ChernExpr operator*(const ChernExpr& x, const ChernExpr& y) {
        x.check_compatible(y);
        ChernExpr out(x.amb_, x.nroots_);
        for (const auto& [kx, cx] : x.terms_)
            for (const auto& [ky, cy] : y.terms_) {
                std::vector<long> roots(kx.roots);
                for (std::size_t i = 0; i < roots.size(); ++i)
                    roots[i] += ky.roots[i];
                out.add_term(kx.theta + ky.theta, std::move(roots), cx * cy);
            }
        return out;
    }

    friend bool operator==(const ChernExpr& x, const ChernExpr& y) {
        return x.amb_ == y.amb_ && x.nroots_ == y.nroots_ && x.terms_ == y.terms_;
    }
    friend bool operator!=(const ChernExpr& x, const ChernExpr& y) {
        return !(x == y);
    }

  private:
    void check_compatible(const ChernExpr& other) const {
        require_same(amb_, other.amb_);
        if (nroots_ != other.nroots_)
            throw std::invalid_argument("ChernExpr: root count mismatch");
    }

    Ambient amb_;
    int nroots_;
    TermMap terms_;
};

// The Segre class s_k as the complete homogeneous symmetric polynomial of
// degree k in nroots Chern roots; s_k = 0 for k < 0 (so an eta^0 insertion
// contributes the zero factor s_(-1)).
inline ChernExpr segre_complete(long k, int nroots, const Ambient& amb) {
    ChernExpr out(amb, nroots);
    if (k < 0)
        return out;
    std::vector<long> roots(static_cast<std::size_t>(nroots), 0);
    // Enumerate all exponent tuples of total degree k.
    const auto emit = [&](const auto& self, int pos, long remaining) -> void {
        if (pos == nroots - 1) {
            roots[static_cast<std::size_t>(pos)] = remaining;
            out.add_term(0, roots, Rational(1));
            return;
        }
        for (long i = 0; i <= remaining; ++i) {
            roots[static_cast<std::size_t>(pos)] = i;
            self(self, pos + 1, remaining - i);
        }
    };
    if (nroots == 0) {
        if (k == 0)
            return ChernExpr::one(amb, 0);
        return out;
    }
    emit(emit, 0, k);
    return out;
}

namespace detail {

// Laplace expansion along the first row; entries are plain
// theta-polynomials (0-root ChernExprs).  Sizes here are k = r+1 <= 3, so
// no pivoting subtleties arise.
inline ChernExpr determinant(const std::vector<std::vector<ChernExpr>>& m,
                             const Ambient& amb) {
    const std::size_t n = m.size();
    if (n == 1)
        return m[0][0];
    ChernExpr acc = ChernExpr::zero(amb, 0);
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].empty())
            continue;
        std::vector<std::vector<ChernExpr>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<ChernExpr> row;
            row.reserve(n - 1);
            for (std::size_t j = 0; j < n; ++j)
                if (j != col)
                    row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        ChernExpr contrib = m[0][col] * determinant(minor, amb);
        if (col % 2 == 0)
            acc += contrib;
        else
            acc -= contrib;
    }
    return acc;
}

} // namespace detail

// Evaluates theta^theta_pow x1^(i1) ... xk^(ik) [G^(k-1)_d] via the formal
// determinantal identity: the k x k matrix with entry(j,l) =
// c_(offset+k+(l-j)+i_j)(F-E), 1-based indices, expanded and capped against
// [Jac_d] by theta^g [Jac_d] = g!.  Anything whose total theta-degree
// misses g evaluates to 0.
inline Rational ht_monomial_eval(long theta_pow,
                                 const std::vector<long>& root_pows,
                                 long offset, const Ambient& amb) {
    const std::size_t k = root_pows.size();
    if (k < 1)
        throw std::invalid_argument("ht_monomial_eval: need at least one root");
    if (theta_pow < 0 || theta_pow > amb.g)
        return Rational(0);
    std::vector<std::vector<ChernExpr>> m(
        k, std::vector<ChernExpr>(k, ChernExpr::zero(amb, 0)));
    for (std::size_t j = 1; j <= k; ++j)
        for (std::size_t l = 1; l <= k; ++l) {
            const long alpha = offset + static_cast<long>(k) +
                               (static_cast<long>(l) - static_cast<long>(j)) +
                               root_pows[j - 1];
            const ThetaMonomial c = chern_f_minus_e(alpha, amb);
            m[j - 1][l - 1].add_term(c.power, {}, c.coeff);
        }
    const ChernExpr det = detail::determinant(m, amb);
    const long want = amb.g - theta_pow;
    for (const auto& [key, coeff] : det.terms())
        if (key.theta == want)
            return factorial(amb.g) * coeff;
    return Rational(0);
}

// Default offset for the G^(k-1)_d locus: rank difference n - m = g - d - 1
// of the bundles F and E.
inline Rational ht_monomial_eval(long theta_pow,
                                 const std::vector<long>& root_pows,
                                 const Ambient& amb) {
    return ht_monomial_eval(theta_pow, root_pows, amb.g - amb.d - 1, amb);
}

// gamma_p = c_(g-d+1+p)(F-E) * c_(g-d+total-2-p)(F-E), total = u+v+w: the
// theta^m coefficient used in telescoping the degree-1 determinant sum.
// Satisfies gamma_p = gamma_(total-3-p).
inline Rational gamma_p(long p, long uvw_total, const Ambient& amb) {
    return inv_factorial(amb.g - amb.d + 1 + p) *
           inv_factorial(amb.g - amb.d + uvw_total - 2 - p);
}

// Pushforward of the degree-2 virtual class to G^1_d, as a 2-root
// expression of pure degree g-1-d:
//
//   (1/8) sum_{n=0}^{g-1-d} sum_{p=0}^{n} binom(n,p)
//         theta^(g-1-d-n) x1^p x2^(n-p) / (2^n (g-1-d-n)!),
//
// the expansion of the degree-(g-1-d) part of (1/8) exp(theta) /
// (1 - (x1+x2)/2).  Defined only for d <= g-1.
inline ChernExpr virtual_class_m11(const Ambient& amb) {
    if (amb.d > amb.g - 1)
        throw std::invalid_argument("virtual_class_m11: requires d <= g-1");
    ChernExpr out(amb, 2);
    const long top = amb.g - 1 - amb.d;
    for (long n = 0; n <= top; ++n)
        for (long p = 0; p <= n; ++p) {
            const Rational coeff =
                Rational(binomial(n, p), Int(8) * pow2(n) * factorial(top - n));
            out.add_term(top - n, {p, n - p}, coeff);
        }
    return out;
}

// Degree-1 invariant <eta^u, eta^v, theta^(g-m) eta^w>_1 evaluated through
// the determinantal pipeline: expand s_(u-1) s_(v-1) s_(w-1) in the Chern
// roots of the dual tautological bundle and evaluate each monomial with
// theta_pow = g - m, m = 2g-2d-1+u+v+w.
inline Rational gw1_oracle(long u, long v, long w, const Ambient& amb) {
    if (u < 0 || v < 0 || w < 0)
        throw std::invalid_argument("gw1_oracle: negative eta-exponent");
    const long m = 2 * amb.g - 2 * amb.d - 1 + u + v + w;
    if (amb.g - m < 0)
        return Rational(0);
    const ChernExpr expr = segre_complete(u - 1, 2, amb) *
                           segre_complete(v - 1, 2, amb) *
                           segre_complete(w - 1, 2, amb);
    Rational acc(0);
    for (const auto& [key, coeff] : expr.terms())
        acc += coeff * ht_monomial_eval(amb.g - m + key.theta, key.roots, amb);
    return acc;
}

// Degree-2 invariant <eta^u, eta^v, theta^(d+1-m) eta^w>_2 through the same
// pipeline: each eta-insertion contributes 2 s_(u-1) (the orbifold factor
// of 2), multiplied against the virtual-class expression; each monomial
// carries the insertion power d+1-m plus its own theta-exponent, making the
// total theta-degree land on g exactly when the determinant does.
inline Rational gw2_oracle(long u, long v, long w, const Ambient& amb) {
    if (u < 0 || v < 0 || w < 0)
        throw std::invalid_argument("gw2_oracle: negative eta-exponent");
    if (amb.d > amb.g - 1)
        throw std::invalid_argument("gw2_oracle: requires d <= g-1");
    const long m = 2 * amb.g - 2 * amb.d - 1 + u + v + w;
    if (amb.d + 1 - m < 0)
        return Rational(0);
    const Rational two(2);
    const ChernExpr expr = (two * segre_complete(u - 1, 2, amb)) *
                           (two * segre_complete(v - 1, 2, amb)) *
                           (two * segre_complete(w - 1, 2, amb)) *
                           virtual_class_m11(amb);
    Rational acc(0);
    for (const auto& [key, coeff] : expr.terms())
        acc += coeff *
               ht_monomial_eval(amb.d + 1 - m + key.theta, key.roots, amb);
    return acc;
}

} // namespace symq
