#pragma once

/*
 * Plain-text rendering of classes, q-expansions, and invariant labels.
 *
 * Conventions: theta prints as "th", eta as "et", unit coefficients and
 * first powers are omitted, terms are ordered by total degree and then by
 * descending theta-exponent, and each q-order of a quantum class is wrapped
 * as q^e*(...).  The zero class prints as "0".
 */

#include "symq/ambient.hpp"
#include "symq/gw.hpp"
#include "symq/quantum.hpp"
#include "symq/rational.hpp"
#include "symq/ring.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace symq {

namespace detail {

inline void append_power(std::string& out, const char* name, long pow) {
    if (pow == 0)
        return;
    if (!out.empty())
        out += " * ";
    out += name;
    if (pow != 1) {
        out += '^';
        out += std::to_string(pow);
    }
}

} // namespace detail

inline std::string render_monomial(const Monomial& m) {
    std::string out;
    detail::append_power(out, "th", m.a);
    detail::append_power(out, "et", m.b);
    if (out.empty())
        out = "1";
    return out;
}

inline std::string render_class(const CohClass& x) {
    std::vector<std::pair<Monomial, Rational>> terms(x.terms().begin(),
                                                     x.terms().end());
    if (terms.empty())
        return "0";
    std::sort(terms.begin(), terms.end(),
              [](const auto& lhs, const auto& rhs) {
                  const long dl = lhs.first.degree();
                  const long dr = rhs.first.degree();
                  if (dl != dr)
                      return dl < dr;
                  return lhs.first.a > rhs.first.a;
              });
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : terms) {
        const bool negative = coeff < 0;
        const Rational mag = negative ? Rational(-coeff) : coeff;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string body;
        if (mono.a == 0 && mono.b == 0) {
            body = to_string(mag);
        } else {
            body = render_monomial(mono);
            if (mag != 1)
                body = to_string(mag) + " * " + body;
        }
        out += body;
    }
    return out;
}

namespace detail {

inline std::string q_prefix(long e) {
    if (e == 1)
        return "q";
    return "q^" + std::to_string(e);
}

} // namespace detail

inline std::string render_qclass(const QClass& x) {
    std::vector<std::string> parts;
    for (long e = 0; e <= x.truncation_order(); ++e) {
        if (!x.known(e)) {
            parts.push_back(detail::q_prefix(e) + "*(unknown)");
            continue;
        }
        const CohClass& c = x.order(e);
        if (c.empty())
            continue;
        if (e == 0)
            parts.push_back(render_class(c));
        else
            parts.push_back(detail::q_prefix(e) + "*(" + render_class(c) + ")");
    }
    if (parts.empty())
        return "0";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        out += " + ";
        out += parts[i];
    }
    return out;
}

// The bracket label <et^u, et^v, th^t et^w>_e with t the theta-power forced
// by the grading; t may be negative, in which case the invariant is zero
// but the label still renders faithfully.
inline std::string render_insertion(long u, long v, long w, long e,
                                    const Ambient& amb) {
    const long t = insertion_theta_power(u, v, w, e, amb);
    const auto eta_pow = [](long p) -> std::string {
        if (p == 0)
            return "1";
        std::string s = "et";
        if (p != 1) {
            s += '^';
            s += std::to_string(p);
        }
        return s;
    };
    std::string third;
    if (t != 0) {
        third = "th";
        if (t != 1) {
            third += '^';
            third += std::to_string(t);
        }
    }
    if (w != 0) {
        if (!third.empty())
            third += ' ';
        third += "et";
        if (w != 1) {
            third += '^';
            third += std::to_string(w);
        }
    }
    if (third.empty())
        third = "1";
    return "<" + eta_pow(u) + ", " + eta_pow(v) + ", " + third + ">_" +
           std::to_string(e);
}

} // namespace symq
