#include "cgd4/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cgd4 {

namespace {
const BigRational kZero;
}

UPoly UPoly::monomial(const BigRational& c, int deg) {
    if (deg < 0) throw std::invalid_argument("UPoly: negative degree");
    UPoly p;
    if (!c.is_zero()) {
        p.c_.resize(deg + 1);
        p.c_[deg] = c;
    }
    return p;
}

int UPoly::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return int(i);
    return -1;
}

const BigRational& UPoly::operator[](int i) const {
    if (i < 0 || i >= int(c_.size())) return kZero;
    return c_[i];
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void UPoly::add_term(int deg, const BigRational& c) {
    if (c.is_zero()) return;
    if (deg < 0) throw std::invalid_argument("UPoly: negative degree");
    if (int(c_.size()) <= deg) c_.resize(deg + 1);
    c_[deg] += c;
    trim();
}

void UPoly::add_scaled_shift(const UPoly& src, const BigRational& c, int p) {
    if (src.is_zero() || c.is_zero()) return;
    if (p < 0) throw std::invalid_argument("UPoly: negative shift");
    size_t need = src.c_.size() + size_t(p);
    if (c_.size() < need) c_.resize(need);
    if (c.is_one()) {
        for (size_t j = 0; j < src.c_.size(); ++j) c_[j + p] += src.c_[j];
    } else {
        for (size_t j = 0; j < src.c_.size(); ++j) c_[j + p].addmul(src.c_[j], c);
    }
    trim();
}

void UPoly::addmul(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    size_t need = a.c_.size() + b.c_.size() - 1;
    if (c_.size() < need) c_.resize(need);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c_[i + j].addmul(a.c_[i], b.c_[j]);
    }
    trim();
}

UPoly UPoly::operator-() const {
    UPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.addmul(a, b);
    return r;
}

UPoly& UPoly::operator*=(const UPoly& o) {
    *this = *this * o;
    return *this;
}

UPoly& UPoly::operator*=(const BigRational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

UPoly UPoly::shifted(int p) const {
    if (is_zero()) return {};
    if (p < 0) {
        if (valuation() < -p) throw std::invalid_argument("UPoly: shift below zero");
        return UPoly(std::vector<BigRational>(c_.begin() - p, c_.end()));
    }
    std::vector<BigRational> v(p);
    v.insert(v.end(), c_.begin(), c_.end());
    return UPoly(std::move(v));
}

UPoly UPoly::pow(int e) const {
    UPoly r(1), b(*this);
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

BigRational UPoly::eval(const BigRational& x) const {
    BigRational r;
    for (size_t i = c_.size(); i-- > 0;) {
        r *= x;
        r += c_[i];
    }
    return r;
}

UPoly UPoly::scaled_arg(const BigRational& s) const {
    UPoly r(*this);
    BigRational p(1);
    for (auto& x : r.c_) {
        x *= p;
        p *= s;
    }
    r.trim();
    return r;
}

bool UPoly::has_integer_coeffs() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigRational& x) { return x.is_integer(); });
}

bool UPoly::nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigRational& x) { return x.sign() >= 0; });
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        const auto& c = c_[i];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool neg = c.sign() < 0;
        if (neg) cs = cs.substr(1);
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        if (i == 0) os << cs;
        else {
            if (cs != "1") os << cs << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

void LaurentPoly::normalize() {
    int v = p_.valuation();
    if (v > 0) {
        p_ = p_.shifted(-v);
        low_ += v;
    }
    if (p_.is_zero()) low_ = 0;
}

BigRational LaurentPoly::coeff(int deg) const { return p_[deg - low_]; }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(low_, o.low_);
    UPoly a = p_.shifted(low_ - lo);
    a.add_scaled_shift(o.p_, 1, o.low_ - lo);
    *this = LaurentPoly(std::move(a), lo);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

void LaurentPoly::add_scaled_shift(const LaurentPoly& src, const BigRational& c, int p) {
    if (src.is_zero() || c.is_zero()) return;
    int slow = src.low_ + p;
    if (is_zero()) {
        *this = LaurentPoly(src.p_ * c, slow);
        return;
    }
    if (slow >= low_) {
        p_.add_scaled_shift(src.p_, c, slow - low_);
        normalize();
    } else {
        UPoly a = p_.shifted(low_ - slow);
        a.add_scaled_shift(src.p_, c, 0);
        *this = LaurentPoly(std::move(a), slow);
    }
}

void LaurentPoly::addmul(const LaurentPoly& a, const LaurentPoly& b) { *this += a * b; }

BigRational LaurentPoly::eval(const BigRational& x) const { return p_.eval(x) * x.pow(low_); }

std::string LaurentPoly::str(const std::string& var) const {
    if (low_ == 0) return p_.str(var);
    return var + "^" + std::to_string(low_) + "*(" + p_.str(var) + ")";
}

}
