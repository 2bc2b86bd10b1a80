#pragma once

#include "cgd4/upoly.hpp"

#include <array>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgd4 {

/* exponents of x1..x5; negative entries only in Laurent contexts */
using Monomial = std::array<int, 5>;

inline int total_degree(const Monomial& m) { return m[0] + m[1] + m[2] + m[3] + m[4]; }
inline Monomial operator+(const Monomial& a, const Monomial& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3], a[4] + b[4]};
}
inline Monomial operator-(const Monomial& a, const Monomial& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3], a[4] - b[4]};
}
inline Monomial operator*(int s, const Monomial& a) {
    return {s * a[0], s * a[1], s * a[2], s * a[3], s * a[4]};
}
inline bool is_nonneg(const Monomial& m) { return m[0] >= 0 && m[1] >= 0 && m[2] >= 0 && m[3] >= 0 && m[4] >= 0; }
inline int xbar_degree(const Monomial& m) { return m[0] + m[1] + m[2] + m[3]; }
std::string monomial_str(const Monomial& m, int nvars = 5);

/* Bijection between monomials of total degree <= N in nv variables and
 * 0..size-1, graded by total degree (so divisors always come first). */
class SimplexIndex {
public:
    SimplexIndex(int nvars, int order);
    static std::shared_ptr<const SimplexIndex> get(int nvars, int order);

    int nvars() const noexcept { return nv_; }
    int order() const noexcept { return n_; }
    size_t size() const noexcept { return monos_.size(); }
    /* first rank of degree d (d may be order+1) */
    size_t degree_start(int d) const { return d > n_ ? monos_.size() : start_[d]; }
    const Monomial& monomial(size_t r) const { return monos_[r]; }
    int degree(size_t r) const { return degs_[r]; }
    size_t rank(const Monomial& m) const;
    /* rank or npos if out of range / negative */
    size_t find(const Monomial& m) const;
    static constexpr size_t npos = size_t(-1);

private:
    int nv_, n_;
    std::vector<std::vector<size_t>> binom_;
    std::vector<Monomial> monos_;
    std::vector<int> degs_;
    std::vector<size_t> start_;
};

/* Truncated power series in nv variables, stored densely over the simplex
 * index; the coefficient type is UPoly or LaurentPoly. */
template <class C>
class GSeries {
public:
    GSeries() : GSeries(5, 0) {}
    GSeries(int nvars, int order) : idx_(SimplexIndex::get(nvars, order)), c_(idx_->size()) {}
    static GSeries one(int nvars, int order) {
        GSeries s(nvars, order);
        s.c_[0] = C(1);
        return s;
    }

    int order() const noexcept { return idx_->order(); }
    int nvars() const noexcept { return idx_->nvars(); }
    const SimplexIndex& index() const noexcept { return *idx_; }
    size_t size() const noexcept { return c_.size(); }

    const C& at(size_t r) const { return c_[r]; }
    C& at(size_t r) { return c_[r]; }
    const C& coeff(const Monomial& m) const {
        static const C zero;
        size_t r = idx_->find(m);
        return r == SimplexIndex::npos ? zero : c_[r];
    }
    void add_term(const Monomial& m, const C& v) {
        size_t r = idx_->find(m);
        if (r == SimplexIndex::npos) {
            if (is_nonneg(m) && total_degree(m) > order()) return;
            throw std::out_of_range("GSeries: monomial outside index");
        }
        c_[r] += v;
    }
    size_t nnz() const {
        size_t k = 0;
        for (auto& x : c_) k += !x.is_zero();
        return k;
    }
    bool is_zero() const { return nnz() == 0; }
    template <class F>
    void for_each(F&& f) const {
        for (size_t r = 0; r < c_.size(); ++r)
            if (!c_[r].is_zero()) f(idx_->monomial(r), c_[r]);
    }

    GSeries truncated(int n) const {
        if (n > order()) throw std::invalid_argument("GSeries: cannot raise order");
        GSeries s(nvars(), n);
        for (size_t r = 0; r < s.c_.size(); ++r) s.c_[r] = c_[r];
        return s;
    }
    GSeries& operator+=(const GSeries& o) {
        check(o);
        for (size_t r = 0; r < c_.size(); ++r)
            if (!o.c_[r].is_zero()) c_[r] += o.c_[r];
        return *this;
    }
    GSeries& operator-=(const GSeries& o) {
        check(o);
        for (size_t r = 0; r < c_.size(); ++r)
            if (!o.c_[r].is_zero()) c_[r] -= o.c_[r];
        return *this;
    }
    friend GSeries operator+(GSeries a, const GSeries& b) { return a += b; }
    friend GSeries operator-(GSeries a, const GSeries& b) { return a -= b; }
    friend bool operator==(const GSeries& a, const GSeries& b) {
        return a.order() == b.order() && a.nvars() == b.nvars() && a.c_ == b.c_;
    }
    friend bool operator!=(const GSeries& a, const GSeries& b) { return !(a == b); }

    /* multiply by c*u^p */
    GSeries scaled(const BigRational& c, int p = 0) const {
        GSeries s(nvars(), order());
        for (size_t r = 0; r < c_.size(); ++r) s.c_[r].add_scaled_shift(c_[r], c, p);
        return s;
    }
    /* multiply by the monomial x^m (m >= 0) */
    GSeries shifted(const Monomial& m) const {
        GSeries s(nvars(), order());
        int dm = total_degree(m);
        size_t end = idx_->degree_start(order() - dm + 1);
        for (size_t r = 0; r < end; ++r)
            if (!c_[r].is_zero()) s.c_[idx_->rank(idx_->monomial(r) + m)] = c_[r];
        return s;
    }
    /* *this *= (1 - c u^p x^m) */
    void mul_binomial(const BigRational& c, int p, const Monomial& m) {
        int dm = total_degree(m);
        if (dm <= 0) throw std::invalid_argument("GSeries: binomial needs positive degree");
        for (size_t r = c_.size(); r-- > idx_->degree_start(dm);) {
            const Monomial& mr = idx_->monomial(r);
            Monomial d = mr - m;
            if (!is_nonneg(d)) continue;
            const C& src = c_[idx_->rank(d)];
            if (!src.is_zero()) c_[r].add_scaled_shift(src, -c, p);
        }
    }
    /* *this /= (1 - c u^p x^m) */
    void div_binomial(const BigRational& c, int p, const Monomial& m) {
        int dm = total_degree(m);
        if (dm <= 0) throw std::invalid_argument("GSeries: binomial needs positive degree");
        for (size_t r = idx_->degree_start(dm); r < c_.size(); ++r) {
            const Monomial& mr = idx_->monomial(r);
            Monomial d = mr - m;
            if (!is_nonneg(d)) continue;
            const C& src = c_[idx_->rank(d)];
            if (!src.is_zero()) c_[r].add_scaled_shift(src, c, p);
        }
    }

private:
    void check(const GSeries& o) const {
        if (o.order() != order() || o.nvars() != nvars()) throw std::invalid_argument("GSeries: order mismatch");
    }
    std::shared_ptr<const SimplexIndex> idx_;
    std::vector<C> c_;
};

template <class C>
GSeries<C> mul_trunc(const GSeries<C>& a, const GSeries<C>& b) {
    if (a.order() != b.order() || a.nvars() != b.nvars()) throw std::invalid_argument("mul_trunc: order mismatch");
    const auto& ix = a.index();
    GSeries<C> r(a.nvars(), a.order());
    std::vector<size_t> bnz;
    for (size_t j = 0; j < b.size(); ++j)
        if (!b.at(j).is_zero()) bnz.push_back(j);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a.at(i).is_zero()) continue;
        const Monomial& mi = ix.monomial(i);
        int room = a.order() - ix.degree(i);
        for (size_t j : bnz) {
            if (ix.degree(j) > room) break;
            r.at(ix.rank(mi + ix.monomial(j))).addmul(a.at(i), b.at(j));
        }
    }
    return r;
}

using TruncSeries = GSeries<UPoly>;
using ResidueSeries = GSeries<LaurentPoly>;

inline TruncSeries series_one(int order) { return TruncSeries::one(5, order); }
TruncSeries series_monomial(int order, const Monomial& m, const UPoly& c);

TruncSeries invert_unit(const TruncSeries& s);

/* one factor (1 - sign * u^upow * x^m) */
struct Factor {
    int sign = 1;
    int upow = 0;
    Monomial m{};
};
using FactorList = std::vector<Factor>;

/* truncated expansion of prod 1/(1 - sign u^p x^m) */
TruncSeries expand_factor_list(const FactorList& f, int order);
/* truncated expansion of prod (1 - sign u^p x^m) */
TruncSeries expand_product(const FactorList& f, int order);

enum class Twist { Eps1, Eps5 };
TruncSeries twist_signs(const TruncSeries& s, Twist which);

/* substitute u -> value, coefficients become constants */
TruncSeries substitute_u(const TruncSeries& s, const BigRational& value);
/* substitute x_i -> c_i x_i */
TruncSeries scale_vars(const TruncSeries& s, const std::array<BigRational, 5>& c);
/* coefficient-wise u-truncation: keep u^0..u^(k-1) */
TruncSeries mod_u_power(const TruncSeries& s, int k);
bool has_integer_coeffs(const TruncSeries& s);
int max_u_degree(const TruncSeries& s);

std::string series_to_json(const TruncSeries& s);
TruncSeries series_from_json(const std::string& text);
std::string series_str(const TruncSeries& s, size_t max_terms = 40);

}
