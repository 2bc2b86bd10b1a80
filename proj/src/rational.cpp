#include "cgd4/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace cgd4 {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr int64_t kMax = INT64_MAX;

u128 uabs(i128 v) { return v < 0 ? u128(-v) : u128(v); }

uint64_t gcd64(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 gcd128(u128 a, u128 b) {
    while (b) {
        if ((a >> 64) == 0 && (b >> 64) == 0) return gcd64(uint64_t(a), uint64_t(b));
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

mpz_class mpz_from_i128(i128 v) {
    u128 a = uabs(v);
    uint64_t limbs[2] = {uint64_t(a), uint64_t(a >> 64)};
    mpz_class z;
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(uint64_t), 0, 0, limbs);
    if (v < 0) z = -z;
    return z;
}

}

void BigRational::promote_int(long long n) {
    big_ = std::make_unique<mpq_class>(mpz_class(std::to_string(n)));
}

BigRational::BigRational(long long n, long long d) : n_(0), d_(1) {
    if (d == 0) throw std::domain_error("BigRational: zero denominator");
    set_from_i128(n, d);
}

BigRational::BigRational(const mpz_class& n) : n_(0), d_(1) { set_from_mpq(mpq_class(n)); }

BigRational::BigRational(const mpq_class& q) : n_(0), d_(1) {
    mpq_class c(q);
    c.canonicalize();
    set_from_mpq(std::move(c));
}

void BigRational::set_from_mpq(mpq_class&& q) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() && q.get_num() != LONG_MIN) {
        n_ = q.get_num().get_si();
        d_ = q.get_den().get_si();
        big_.reset();
    } else {
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

void BigRational::set_from_i128(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) {
        n_ = 0;
        d_ = 1;
        big_.reset();
        return;
    }
    if (d != 1) {
        u128 g = gcd128(uabs(n), u128(d));
        if (g != 1) {
            n /= i128(g);
            d /= i128(g);
        }
    }
    if (fits(n) && fits(d)) {
        n_ = int64_t(n);
        d_ = int64_t(d);
        big_.reset();
    } else {
        mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

BigRational BigRational::parse(std::string_view s) {
    std::string t(s);
    auto slash = t.find('/');
    mpq_class q;
    if (slash == std::string::npos) {
        mpz_class z;
        if (z.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + t);
        q = mpq_class(z);
    } else {
        mpz_class a, b;
        if (a.set_str(t.substr(0, slash), 10) != 0 || b.set_str(t.substr(slash + 1), 10) != 0 || b == 0)
            throw std::invalid_argument("bad rational: " + t);
        q = mpq_class(a, b);
        q.canonicalize();
    }
    return BigRational(q);
}

bool BigRational::is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }

int BigRational::sign() const { return big_ ? sgn(*big_) : (n_ > 0) - (n_ < 0); }

mpq_class BigRational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q;
    mpz_set_si(mpq_numref(q.get_mpq_t()), n_);
    mpz_set_si(mpq_denref(q.get_mpq_t()), d_);
    return q;
}

mpz_class BigRational::num() const {
    if (big_) return big_->get_num();
    return mpz_class(static_cast<signed long>(n_));
}

mpz_class BigRational::den() const {
    if (big_) return big_->get_den();
    return mpz_class(static_cast<signed long>(d_));
}

double BigRational::to_double() const { return big_ ? big_->get_d() : double(n_) / double(d_); }

std::string BigRational::str() const {
    if (big_) return big_->get_str();
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
}

BigRational BigRational::operator-() const {
    BigRational r;
    if (big_) r.set_from_mpq(mpq_class(-*big_));
    else {
        r.n_ = -n_;
        r.d_ = d_;
    }
    return r;
}

BigRational& BigRational::operator+=(const BigRational& o) {
    if (!big_ && !o.big_) {
        if (d_ == 1 && o.d_ == 1) {
            int64_t s;
            if (!__builtin_add_overflow(n_, o.n_, &s) && s != INT64_MIN) {
                n_ = s;
                return *this;
            }
            set_from_i128(i128(n_) + o.n_, 1);
            return *this;
        }
        if (d_ == o.d_) {
            set_from_i128(i128(n_) + o.n_, d_);
            return *this;
        }
        set_from_i128(i128(n_) * o.d_ + i128(o.n_) * d_, i128(d_) * o.d_);
        return *this;
    }
    set_from_mpq(to_mpq() + o.to_mpq());
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
    if (!big_ && !o.big_) {
        if (d_ == 1 && o.d_ == 1) {
            int64_t s;
            if (!__builtin_sub_overflow(n_, o.n_, &s) && s != INT64_MIN) {
                n_ = s;
                return *this;
            }
            set_from_i128(i128(n_) - o.n_, 1);
            return *this;
        }
        if (d_ == o.d_) {
            set_from_i128(i128(n_) - o.n_, d_);
            return *this;
        }
        set_from_i128(i128(n_) * o.d_ - i128(o.n_) * d_, i128(d_) * o.d_);
        return *this;
    }
    set_from_mpq(to_mpq() - o.to_mpq());
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
    if (!big_ && !o.big_) {
        if (d_ == 1 && o.d_ == 1) {
            int64_t p;
            if (!__builtin_mul_overflow(n_, o.n_, &p) && p != INT64_MIN) {
                n_ = p;
                return *this;
            }
            set_from_i128(i128(n_) * o.n_, 1);
            return *this;
        }
        set_from_i128(i128(n_) * o.n_, i128(d_) * o.d_);
        return *this;
    }
    set_from_mpq(to_mpq() * o.to_mpq());
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    if (!big_ && !o.big_) {
        set_from_i128(i128(n_) * o.d_, i128(d_) * o.n_);
        return *this;
    }
    set_from_mpq(to_mpq() / o.to_mpq());
    return *this;
}

void BigRational::addmul(const BigRational& a, const BigRational& b) {
    if (!big_ && !a.big_ && !b.big_ && d_ == 1 && a.d_ == 1 && b.d_ == 1) {
        int64_t p, s;
        if (!__builtin_mul_overflow(a.n_, b.n_, &p) && !__builtin_add_overflow(n_, p, &s) && s != INT64_MIN) {
            n_ = s;
            return;
        }
    }
    *this += a * b;
}

void BigRational::submul(const BigRational& a, const BigRational& b) {
    if (!big_ && !a.big_ && !b.big_ && d_ == 1 && a.d_ == 1 && b.d_ == 1) {
        int64_t p, s;
        if (!__builtin_mul_overflow(a.n_, b.n_, &p) && !__builtin_sub_overflow(n_, p, &s) && s != INT64_MIN) {
            n_ = s;
            return;
        }
    }
    *this -= a * b;
}

bool operator==(const BigRational& a, const BigRational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

bool operator<(const BigRational& a, const BigRational& b) {
    if (!a.big_ && !b.big_) return i128(a.n_) * b.d_ < i128(b.n_) * a.d_;
    return a.to_mpq() < b.to_mpq();
}

BigRational BigRational::pow(int e) const {
    if (e < 0) return BigRational(1) / pow(-e);
    BigRational r(1), b(*this);
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

}
