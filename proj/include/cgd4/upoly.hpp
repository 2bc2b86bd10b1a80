#pragma once

#include "cgd4/rational.hpp"

#include <string>
#include <vector>

namespace cgd4 {

/* Dense polynomial in u with rational coefficients; no trailing zeros. */
class UPoly {
public:
    UPoly() = default;
    UPoly(const BigRational& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    template <std::signed_integral T>
    UPoly(T c) : UPoly(BigRational(c)) {}
    explicit UPoly(std::vector<BigRational> c) : c_(std::move(c)) { trim(); }
    static UPoly monomial(const BigRational& c, int deg);
    static UPoly u() { return monomial(1, 1); }

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return int(c_.size()) - 1; }
    int valuation() const;
    size_t size() const noexcept { return c_.size(); }
    const BigRational& operator[](int i) const;
    const std::vector<BigRational>& coeffs() const noexcept { return c_; }

    void add_term(int deg, const BigRational& c);
    /* this += c * u^p * src */
    void add_scaled_shift(const UPoly& src, const BigRational& c, int p);
    /* this += a * b */
    void addmul(const UPoly& a, const UPoly& b);
    void trim();

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    UPoly& operator*=(const BigRational& s);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const BigRational& s) { return a *= s; }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    UPoly shifted(int p) const;
    UPoly pow(int e) const;
    BigRational eval(const BigRational& x) const;
    /* p(s*u): scales coefficient k by s^k */
    UPoly scaled_arg(const BigRational& s) const;
    bool has_integer_coeffs() const;
    bool nonnegative() const;
    std::string str(const std::string& var = "u") const;

private:
    std::vector<BigRational> c_;
};

/* u^low * p, allowing negative powers of u */
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const BigRational& c) : p_(c) {}
    template <std::signed_integral T>
    LaurentPoly(T c) : p_(BigRational(c)) {}
    LaurentPoly(UPoly p, int low = 0) : low_(low), p_(std::move(p)) { normalize(); }
    static LaurentPoly monomial(const BigRational& c, int deg) { return LaurentPoly(UPoly(c), deg); }

    bool is_zero() const noexcept { return p_.is_zero(); }
    int low() const noexcept { return low_; }
    int high() const noexcept { return low_ + p_.degree(); }
    const UPoly& body() const noexcept { return p_; }
    BigRational coeff(int deg) const;

    void add_scaled_shift(const LaurentPoly& src, const BigRational& c, int p);
    void addmul(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly operator-() const { return LaurentPoly(-p_, low_); }
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        return LaurentPoly(a.p_ * b.p_, a.low_ + b.low_);
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.p_ == b.p_ && (a.p_.is_zero() || a.low_ == b.low_);
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly shifted(int p) const { return LaurentPoly(p_, low_ + p); }
    BigRational eval(const BigRational& x) const;
    std::string str(const std::string& var = "u") const;

private:
    void normalize();
    int low_ = 0;
    UPoly p_;
};

}
