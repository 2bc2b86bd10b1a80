#include "cgd4/sqrtq.hpp"

#include <cmath>
#include <stdexcept>

namespace cgd4 {

SqrtQNumber::SqrtQNumber(long q, BigRational a, BigRational b) : q_(q), a_(std::move(a)), b_(std::move(b)) {
    if (q < 2) throw std::invalid_argument("SqrtQNumber: q must be >= 2");
    for (long p = 2; p * p <= q; ++p)
        if (q % (p * p) == 0) throw std::invalid_argument("SqrtQNumber: q must be squarefree");
}

void SqrtQNumber::same_field(const SqrtQNumber& o) {
    if (q_ == 0) q_ = o.q_;
    if (o.q_ != 0 && q_ != o.q_) throw std::invalid_argument("SqrtQNumber: mixing fields");
}

int SqrtQNumber::sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    /* compare a^2 with q b^2 */
    BigRational lhs = a_ * a_, rhs = b_ * b_ * BigRational(q_);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

double SqrtQNumber::to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(double(q_)); }

std::string SqrtQNumber::str() const {
    std::string s = a_.str();
    if (b_.sign() < 0) s += " - " + (-b_).str();
    else s += " + " + b_.str();
    return s + "*sqrt(" + std::to_string(q_) + ")";
}

SqrtQNumber& SqrtQNumber::operator+=(const SqrtQNumber& o) {
    same_field(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

SqrtQNumber& SqrtQNumber::operator-=(const SqrtQNumber& o) {
    same_field(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

SqrtQNumber& SqrtQNumber::operator*=(const SqrtQNumber& o) {
    same_field(o);
    BigRational na = a_ * o.a_;
    if (!b_.is_zero() && !o.b_.is_zero()) na += b_ * o.b_ * BigRational(q_);
    BigRational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

SqrtQNumber& SqrtQNumber::operator/=(const SqrtQNumber& o) {
    same_field(o);
    BigRational n = o.a_ * o.a_ - o.b_ * o.b_ * BigRational(q_);
    if (n.is_zero()) throw std::domain_error("SqrtQNumber: division by zero");
    *this *= o.conj();
    a_ /= n;
    b_ /= n;
    return *this;
}

SqrtQNumber SqrtQNumber::pow(int e) const {
    if (e < 0) return SqrtQNumber(q_, 1, 0) / pow(-e);
    SqrtQNumber r(q_, 1, 0), b(*this);
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

SqrtQNumber eval_upoly(const UPoly& p, const SqrtQNumber& u) {
    SqrtQNumber r(u.q(), 0, 0);
    for (int i = p.degree(); i >= 0; --i) {
        r *= u;
        r += SqrtQNumber(u.q(), p[i], 0);
    }
    return r;
}

SqrtQNumber specialize(const TruncSeries& s, const std::array<BigRational, 5>& point, const SqrtQNumber& upoint,
                       int certified_degree) {
    if (certified_degree > s.order())
        throw std::invalid_argument("specialize: slice is incomplete at this truncation order");
    SqrtQNumber total(upoint.q(), 0, 0);
    s.for_each([&](const Monomial& m, const UPoly& c) {
        if (total_degree(m) > certified_degree)
            throw std::invalid_argument("specialize: term beyond the certified degree");
        BigRational xv(1);
        for (int i = 0; i < 5; ++i) xv *= point[i].pow(m[i]);
        if (xv.is_zero()) return;
        SqrtQNumber v = eval_upoly(c, upoint);
        total += v * SqrtQNumber(upoint.q(), xv, 0);
    });
    return total;
}

}
