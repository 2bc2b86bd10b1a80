#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace cgd4 {

/* Exact rational with an int64 fast path; promotes to GMP on overflow and
 * demotes back whenever the reduced value fits again. */
class BigRational {
public:
    BigRational() noexcept : n_(0), d_(1) {}
    template <std::signed_integral T>
    BigRational(T n) : n_(int64_t(n)), d_(1) {
        if (n_ == INT64_MIN) promote_int(n_);
    }
    BigRational(long long n, long long d);
    explicit BigRational(const mpz_class& n);
    explicit BigRational(const mpq_class& q);

    BigRational(const BigRational& o) : n_(o.n_), d_(o.d_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    BigRational(BigRational&&) noexcept = default;
    BigRational& operator=(const BigRational& o) {
        if (this != &o) {
            n_ = o.n_;
            d_ = o.d_;
            if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
            else big_.reset();
        }
        return *this;
    }
    BigRational& operator=(BigRational&&) noexcept = default;

    static BigRational parse(std::string_view s);
    static BigRational from_i128(__int128 n, __int128 d = 1) {
        BigRational r;
        r.set_from_i128(n, d);
        return r;
    }

    bool is_zero() const noexcept { return !big_ && n_ == 0; }
    bool is_one() const noexcept { return !big_ && n_ == 1 && d_ == 1; }
    bool is_integer() const;
    int sign() const;
    bool is_small() const noexcept { return !big_; }
    int64_t small_num() const noexcept { return n_; }
    int64_t small_den() const noexcept { return d_; }

    mpq_class to_mpq() const;
    mpz_class num() const;
    mpz_class den() const;
    double to_double() const;
    std::string str() const;

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& o);
    BigRational& operator-=(const BigRational& o);
    BigRational& operator*=(const BigRational& o);
    BigRational& operator/=(const BigRational& o);

    /* this += a*b without a temporary in the common small case */
    void addmul(const BigRational& a, const BigRational& b);
    void submul(const BigRational& a, const BigRational& b);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    friend bool operator==(const BigRational& a, const BigRational& b);
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
    friend bool operator<(const BigRational& a, const BigRational& b);
    friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return !(b < a); }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return !(a < b); }

    BigRational pow(int e) const;

private:
    void promote_int(long long n);
    void set_from_mpq(mpq_class&& q);
    void set_from_i128(__int128 n, __int128 d);

    int64_t n_, d_;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

}
