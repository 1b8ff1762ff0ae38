#pragma once

/*
 * The monodromy-invariant subring of H*(Sym^d of a genus-g curve; Q),
 * generated by the two degree-2 classes
 *
 *   eta   — the class of the embedded Sym^(d-1),
 *   theta — the pullback of the theta divisor under the Abel-Jacobi map.
 *
 * Classes are finite rational combinations of monomials theta^a eta^b,
 * graded by a+b (half the cohomological degree).  Two normalizations are
 * built into construction: theta^a vanishes for a > g, and any monomial of
 * total degree above d vanishes.  Top intersections are governed by
 *
 *   theta^a eta^(d-a) [Sym^d] = g!/(g-a)!   (a <= g, else 0),
 *
 * which determines the intersection pairing on the whole subring.
 */

#include "symq/ambient.hpp"
#include "symq/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace symq {

// theta^a eta^b.  Monomials with a > g or a+b > d are the zero class; they
// are dropped when entering a CohClass rather than stored.
struct Monomial {
    long a = 0; // theta-exponent
    long b = 0; // eta-exponent

    long degree() const { return a + b; }

    friend bool operator==(const Monomial& x, const Monomial& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const Monomial& x, const Monomial& y) {
        return !(x == y);
    }
    // Storage order of CohClass terms: by (degree, theta-exponent).
    friend bool operator<(const Monomial& x, const Monomial& y) {
        if (x.degree() != y.degree())
            return x.degree() < y.degree();
        return x.a < y.a;
    }
};

// theta^a eta^(d-a) [Sym^d]: g!/(g-a)! if a <= g, else 0.  The monomial must
// have top degree a+b = d.
inline Rational eval_top(const Monomial& m, const Ambient& amb) {
    if (m.a < 0 || m.b < 0)
        throw std::invalid_argument("eval_top: negative exponent");
    if (m.degree() != amb.d)
        throw std::invalid_argument("eval_top: monomial degree must equal d");
    if (m.a > amb.g)
        return Rational(0);
    return Rational(factorial(amb.g) / factorial(amb.g - m.a));
}

// A cohomology class in the eta-theta subring: a normalized term map over a
// fixed ambient (g,d).  Values are immutable in spirit; the mutating helpers
// are construction aids.
class CohClass {
  public:
    using TermMap = std::map<Monomial, Rational>;

    explicit CohClass(const Ambient& amb) : amb_(amb) {}

    static CohClass zero(const Ambient& amb) { return CohClass(amb); }

    static CohClass unit(const Ambient& amb) {
        return monomial(amb, 0, 0);
    }

    static CohClass monomial(const Ambient& amb, long a, long b,
                             const Rational& coeff = Rational(1)) {
        CohClass out(amb);
        out.add_term(a, b, coeff);
        return out;
    }

    static CohClass eta(const Ambient& amb) { return monomial(amb, 0, 1); }
    static CohClass theta(const Ambient& amb) { return monomial(amb, 1, 0); }
    static CohClass eta_power(const Ambient& amb, long b) {
        return monomial(amb, 0, b);
    }
    static CohClass theta_power(const Ambient& amb, long a) {
        return monomial(amb, a, 0);
    }

    const Ambient& ambient() const { return amb_; }
    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // Accumulates coeff * theta^a eta^b, applying the vanishing
    // normalization (a > g or a+b > d drops the term) and never storing a
    // zero coefficient.  Zero coefficients are accepted for any exponents,
    // so formulas may generate out-of-range powers as long as the
    // 1/n! = 0 convention has already killed them.
    void add_term(long a, long b, const Rational& coeff) {
        if (coeff == 0)
            return;
        if (a < 0 || b < 0)
            throw std::invalid_argument("CohClass: negative exponent");
        if (a > amb_.g || a + b > amb_.d)
            return;
        const Monomial m{a, b};
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Rational coefficient(long a, long b) const {
        auto it = terms_.find(Monomial{a, b});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // The common degree a+b of all stored monomials, or nullopt if the
    // class is zero or mixed-degree.
    std::optional<long> homogeneous_degree() const {
        std::optional<long> deg;
        for (const auto& [m, c] : terms_) {
            if (!deg)
                deg = m.degree();
            else if (*deg != m.degree())
                return std::nullopt;
        }
        return deg;
    }

    CohClass& operator+=(const CohClass& other) {
        require_same(amb_, other.amb_);
        for (const auto& [m, c] : other.terms_)
            add_term(m.a, m.b, c);
        return *this;
    }
    CohClass& operator-=(const CohClass& other) {
        require_same(amb_, other.amb_);
        for (const auto& [m, c] : other.terms_)
            add_term(m.a, m.b, -c);
        return *this;
    }
    CohClass& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_)
            c *= s;
        return *this;
    }

    friend CohClass operator+(CohClass x, const CohClass& y) { return x += y; }
    friend CohClass operator-(CohClass x, const CohClass& y) { return x -= y; }
    friend CohClass operator*(CohClass x, const Rational& s) { return x *= s; }
    friend CohClass operator*(const Rational& s, CohClass x) { return x *= s; }
    friend CohClass operator-(CohClass x) { return x *= Rational(-1); }

    friend bool operator==(const CohClass& x, const CohClass& y) {
        return x.amb_ == y.amb_ && x.terms_ == y.terms_;
    }
    friend bool operator!=(const CohClass& x, const CohClass& y) {
        return !(x == y);
    }

  private:
    Ambient amb_;
    TermMap terms_;
};

// Cup product: bilinear, exponents add, vanishing monomials dropped.  The
// result is not reduced to the canonical pairing representative; see
// reduce() for that.
inline CohClass cup(const CohClass& x, const CohClass& y) {
    require_same(x.ambient(), y.ambient());
    CohClass out(x.ambient());
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms())
            out.add_term(mx.a + my.a, mx.b + my.b, cx * cy);
    return out;
}

// Intersection pairing: eval_top extended bilinearly over cup(x, y).  The
// arguments must be homogeneous of complementary degrees k and d-k; the
// zero class pairs to 0 against anything.
inline Rational pair(const CohClass& x, const CohClass& y) {
    require_same(x.ambient(), y.ambient());
    if (x.empty() || y.empty())
        return Rational(0);
    const auto dx = x.homogeneous_degree();
    const auto dy = y.homogeneous_degree();
    if (!dx || !dy || *dx + *dy != x.ambient().d)
        throw std::invalid_argument("pair: non-complementary degrees");
    const Ambient& amb = x.ambient();
    Rational acc(0);
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) {
            const long a = mx.a + my.a;
            if (a <= amb.g)
                acc += cx * cy * Rational(factorial(amb.g) / factorial(amb.g - a));
        }
    return acc;
}

} // namespace symq
