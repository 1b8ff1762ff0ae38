#pragma once

/*
 * Truncated scalar series in the quantum parameter q.  The Novikov ring is
 * realized as Q[q]/(q^(N+1)) with an explicit truncation order and an
 * unknown-tail flag that arithmetic propagates disjunctively; q/(1-q)
 * expands to q + q^2 + ... + q^N.
 */

#include "symq/rational.hpp"

#include <stdexcept>
#include <vector>

namespace symq {

class QSeries {
  public:
    explicit QSeries(long trunc, bool unknown_tail = false)
        : coeffs_(checked_size(trunc), Rational(0)),
          unknown_tail_(unknown_tail) {}

    static QSeries constant(const Rational& c, long trunc) {
        QSeries s(trunc);
        s.coeffs_[0] = c;
        return s;
    }

    // q/(1-q) = q + q^2 + ... + q^N.
    static QSeries geometric(long trunc) {
        QSeries s(trunc);
        for (long e = 1; e <= trunc; ++e)
            s.coeffs_[static_cast<std::size_t>(e)] = 1;
        return s;
    }

    long truncation_order() const {
        return static_cast<long>(coeffs_.size()) - 1;
    }
    bool unknown_tail() const { return unknown_tail_; }
    void set_unknown_tail(bool v) { unknown_tail_ = v; }

    const Rational& coeff(long e) const {
        check_order(e);
        return coeffs_[static_cast<std::size_t>(e)];
    }
    void set_coeff(long e, const Rational& v) {
        check_order(e);
        coeffs_[static_cast<std::size_t>(e)] = v;
    }

    QSeries& operator+=(const QSeries& other) {
        check_same(other);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += other.coeffs_[i];
        unknown_tail_ = unknown_tail_ || other.unknown_tail_;
        return *this;
    }
    QSeries& operator-=(const QSeries& other) {
        check_same(other);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] -= other.coeffs_[i];
        unknown_tail_ = unknown_tail_ || other.unknown_tail_;
        return *this;
    }
    QSeries& operator*=(const Rational& s) {
        for (auto& c : coeffs_)
            c *= s;
        return *this;
    }

    friend QSeries operator+(QSeries x, const QSeries& y) { return x += y; }
    friend QSeries operator-(QSeries x, const QSeries& y) { return x -= y; }
    friend QSeries operator*(QSeries x, const Rational& s) { return x *= s; }
    friend QSeries operator*(const Rational& s, QSeries x) { return x *= s; }

    // Truncated convolution product.
    friend QSeries operator*(const QSeries& x, const QSeries& y) {
        x.check_same(y);
        QSeries out(x.truncation_order(),
                    x.unknown_tail_ || y.unknown_tail_);
        for (long e = 0; e <= out.truncation_order(); ++e) {
            Rational acc(0);
            for (long i = 0; i <= e; ++i)
                acc += x.coeff(i) * y.coeff(e - i);
            out.set_coeff(e, acc);
        }
        return out;
    }

    // Multiplication by q^k, dropping coefficients past the truncation.
    QSeries shifted(long k) const {
        if (k < 0)
            throw std::invalid_argument("QSeries: negative shift");
        QSeries out(truncation_order(), unknown_tail_);
        for (long e = k; e <= truncation_order(); ++e)
            out.set_coeff(e, coeff(e - k));
        return out;
    }

    friend bool operator==(const QSeries& x, const QSeries& y) {
        return x.coeffs_ == y.coeffs_ && x.unknown_tail_ == y.unknown_tail_;
    }
    friend bool operator!=(const QSeries& x, const QSeries& y) {
        return !(x == y);
    }

  private:
    static std::size_t checked_size(long trunc) {
        if (trunc < 1)
            throw std::invalid_argument("QSeries: truncation order must be >= 1");
        return static_cast<std::size_t>(trunc) + 1;
    }

    void check_order(long e) const {
        if (e < 0 || e > truncation_order())
            throw std::out_of_range("QSeries: order out of range");
    }
    void check_same(const QSeries& other) const {
        if (truncation_order() != other.truncation_order())
            throw std::invalid_argument("QSeries: truncation order mismatch");
    }

    std::vector<Rational> coeffs_;
    bool unknown_tail_;
};

} // namespace symq
