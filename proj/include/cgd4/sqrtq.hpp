#pragma once

#include "cgd4/series.hpp"

#include <string>

namespace cgd4 {

/* a + b*sqrt(q) with q a fixed squarefree integer >= 2 */
class SqrtQNumber {
public:
    SqrtQNumber() = default;
    SqrtQNumber(long q, BigRational a = 0, BigRational b = 0);
    static SqrtQNumber sqrt_q(long q) { return SqrtQNumber(q, 0, 1); }

    long q() const noexcept { return q_; }
    const BigRational& a() const noexcept { return a_; }
    const BigRational& b() const noexcept { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }
    /* exact sign of a + b sqrt(q) */
    int sign() const;
    double to_double() const;
    std::string str() const;

    SqrtQNumber operator-() const { return SqrtQNumber(q_, -a_, -b_); }
    SqrtQNumber& operator+=(const SqrtQNumber& o);
    SqrtQNumber& operator-=(const SqrtQNumber& o);
    SqrtQNumber& operator*=(const SqrtQNumber& o);
    SqrtQNumber& operator/=(const SqrtQNumber& o);
    friend SqrtQNumber operator+(SqrtQNumber x, const SqrtQNumber& y) { return x += y; }
    friend SqrtQNumber operator-(SqrtQNumber x, const SqrtQNumber& y) { return x -= y; }
    friend SqrtQNumber operator*(SqrtQNumber x, const SqrtQNumber& y) { return x *= y; }
    friend SqrtQNumber operator/(SqrtQNumber x, const SqrtQNumber& y) { return x /= y; }
    friend bool operator==(const SqrtQNumber& x, const SqrtQNumber& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.q_ == y.q_ || x.b_.is_zero());
    }
    friend bool operator!=(const SqrtQNumber& x, const SqrtQNumber& y) { return !(x == y); }

    SqrtQNumber pow(int e) const;
    SqrtQNumber conj() const { return SqrtQNumber(q_, a_, -b_); }

private:
    void same_field(const SqrtQNumber& o);
    long q_ = 0;
    BigRational a_, b_;
};

SqrtQNumber eval_upoly(const UPoly& p, const SqrtQNumber& u);

/* Value of a polynomial slice at x = point, u = upoint. certified_degree is
 * the caller's bound on the total x-degree of the exact polynomial; it must
 * not exceed the truncation order, otherwise the slice is incomplete. */
SqrtQNumber specialize(const TruncSeries& s, const std::array<BigRational, 5>& point, const SqrtQNumber& upoint,
                       int certified_degree);

}
