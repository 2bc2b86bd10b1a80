#include "cgd4/asym.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cgd4 {

namespace {

constexpr int kBits = 320;

void ensure_precision() {
    static bool done = [] {
        mpf_set_default_prec(kBits);
        return true;
    }();
    (void)done;
}

mpf_class mpf_of(const BigRational& r) {
    ensure_precision();
    return mpf_class(r.to_mpq(), kBits);
}

double log10_abs(const mpf_class& x) {
    if (sgn(x) == 0) return -1e300;
    long e = 0;
    double m = mpf_get_d_2exp(&e, x.get_mpf_t());
    return std::log10(std::fabs(m)) + double(e) * std::log10(2.0);
}

mpf_class mpf_pow(const mpf_class& x, int e) {
    mpf_class r(1, kBits), b(x, kBits);
    if (e < 0) {
        b = 1 / b;
        e = -e;
    }
    mpf_pow_ui(r.get_mpf_t(), b.get_mpf_t(), unsigned(e));
    return r;
}

int mod4(int r) { return ((r % 4) + 4) % 4; }

}

/* LaurentSeries1 */

LaurentSeries1::LaurentSeries1(bool h, int l, int hi_) : half(h), lo(l), c(size_t(std::max(hi_ - l + 1, 0))) {}

LaurentSeries1 LaurentSeries1::monomial(bool h, int e, const BigRational& v, int hi_) {
    LaurentSeries1 s(h, e, std::max(hi_, e));
    s.c[0] = v;
    return s.truncated(hi_);
}

BigRational LaurentSeries1::coeff(int e) const {
    if (e < lo) return BigRational(0);
    if (e > hi()) throw std::out_of_range("LaurentSeries1: exponent " + std::to_string(e) + " beyond the window");
    return c[size_t(e - lo)];
}

void LaurentSeries1::add(int e, const BigRational& v) {
    if (e < lo || e > hi()) return;
    c[size_t(e - lo)] += v;
}

LaurentSeries1 LaurentSeries1::truncated(int h) const {
    LaurentSeries1 s = *this;
    if (h < hi()) s.c.resize(size_t(std::max(h - lo + 1, 0)));
    return s;
}

LaurentSeries1 LaurentSeries1::to_half() const {
    if (half) throw std::logic_error("LaurentSeries1::to_half: already in rho^{1/2}");
    LaurentSeries1 s(true, 2 * lo, 2 * hi());
    for (size_t k = 0; k < c.size(); ++k) s.c[2 * k] = c[k];
    return s;
}

LaurentSeries1 LaurentSeries1::to_rho() const {
    if (!half) return *this;
    for (int e = lo; e <= hi(); ++e)
        if ((e & 1) && !c[size_t(e - lo)].is_zero())
            throw std::domain_error("LaurentSeries1::to_rho: odd power rho^" + std::to_string(e) + "/2");
    int l = (lo + 1) >> 1;
    int h = hi() >> 1;
    if (hi() < 0 && (hi() & 1)) h = (hi() - 1) / 2;
    LaurentSeries1 s(false, l, h);
    for (int e = l; e <= h; ++e) s.c[size_t(e - l)] = c[size_t(2 * e - lo)];
    return s;
}

int LaurentSeries1::valuation() const {
    for (size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) return lo + int(k);
    return INT_MIN;
}

mpf_class LaurentSeries1::eval(const mpf_class& x) const {
    ensure_precision();
    mpf_class acc(0, kBits);
    for (size_t k = c.size(); k-- > 0;) {
        acc *= x;
        acc += mpf_of(c[k]);
    }
    return acc * mpf_pow(x, lo);
}

std::string LaurentSeries1::str(int terms) const {
    std::ostringstream os;
    const char* var = half ? "s" : "rho";
    int shown = 0;
    for (size_t k = 0; k < c.size() && shown < terms; ++k) {
        if (c[k].is_zero()) continue;
        if (shown) os << " + ";
        os << "(" << c[k].str() << ")*" << var << "^" << lo + int(k);
        ++shown;
    }
    if (!shown) os << "0";
    os << " + O(" << var << "^" << hi() + 1 << ")";
    return os.str();
}

nlohmann::json LaurentSeries1::to_json() const {
    nlohmann::json j;
    j["variable"] = half ? "rho^(1/2)" : "rho";
    j["lo"] = lo;
    j["hi"] = hi();
    nlohmann::json t = nlohmann::json::object();
    for (size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) t[std::to_string(lo + int(k))] = c[k].str();
    j["coefficients"] = t;
    return j;
}

LaurentSeries1& LaurentSeries1::operator+=(const LaurentSeries1& o) {
    if (half != o.half) throw std::invalid_argument("LaurentSeries1: mixed variables");
    int l = std::min(lo, o.lo), h = std::min(hi(), o.hi());
    LaurentSeries1 s(half, l, h);
    for (int e = l; e <= h; ++e) s.c[size_t(e - l)] = coeff(e) + o.coeff(e);
    return *this = std::move(s);
}

LaurentSeries1 operator*(const LaurentSeries1& a, const LaurentSeries1& b) {
    if (a.half != b.half) throw std::invalid_argument("LaurentSeries1: mixed variables");
    int l = a.lo + b.lo, h = std::min(a.hi() + b.lo, b.hi() + a.lo);
    LaurentSeries1 s(a.half, l, h);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size() && int(i + j) <= h - l; ++j)
            if (!b.c[j].is_zero()) s.c[i + j].addmul(a.c[i], b.c[j]);
    }
    return s;
}

LaurentSeries1 LaurentSeries1::scaled(const BigRational& v) const {
    LaurentSeries1 s = *this;
    for (auto& x : s.c) x *= v;
    return s;
}

LaurentSeries1 LaurentSeries1::shifted(int e) const {
    LaurentSeries1 s = *this;
    s.lo += e;
    return s;
}

LaurentSeries1 u_operator(const LaurentSeries1& f, int n, int c) {
    if (f.half) throw std::invalid_argument("u_operator: needs a series in rho");
    if (n < 1) throw std::invalid_argument("u_operator: n must be positive");
    LaurentSeries1 s = f;
    for (int e = s.lo; e <= s.hi(); ++e)
        if (((e - c) % n + n) % n) s.c[size_t(e - s.lo)] = BigRational(0);
    return s;
}

namespace {

/* v / (1 - rho^e)^times on [0, hi] */
void div_pow(std::vector<BigRational>& v, int e, int times) {
    for (int t = 0; t < times; ++t)
        for (size_t k = size_t(e); k < v.size(); ++k)
            if (!v[k - e].is_zero()) v[k] += v[k - e];
}

}

LaurentSeries1 r_n_series(int n, int hi) {
    if (n != 1 && n != 2) throw std::invalid_argument("r_n_series: n must be 1 or 2");
    if (n == 1) {
        std::vector<BigRational> v(size_t(std::max(hi, 0) + 1));
        v[0] = 1;
        for (int k = 1; k <= hi; ++k) div_pow(v, k, 11);
        LaurentSeries1 s(false, 0, hi);
        s.c = std::move(v);
        return s;
    }
    /* (1 - 1/rho)^-7 = -rho^7 (1 - rho)^-7 */
    int len = std::max(hi - 7, 0);
    std::vector<BigRational> v(size_t(len + 1));
    v[0] = -1;
    for (int k = 1; k <= len; ++k) div_pow(v, k, 8);
    for (int k = 1; k <= len; k += 2) div_pow(v, k, 6);
    div_pow(v, 1, 7);
    LaurentSeries1 s(false, 7, 7 + len);
    s.c = std::move(v);
    return s.truncated(hi);
}

Root phi_n_alpha(int n) {
    if (n == 1) return simple_root(5);
    if (n == 2) return kDelta - simple_root(4);
    throw std::invalid_argument("phi_n_alpha: n must be 1 or 2");
}

const std::vector<int>& w_alpha_word(int n) {
    /* s4 t with t = s1 s2 s3 s4 s5 */
    static const std::vector<int> id{}, s4t{5, 4, 3, 2, 1, 4};
    if (n == 1) return id;
    if (n == 2) return s4t;
    throw std::invalid_argument("w_alpha_word: n must be 1 or 2");
}

namespace {

/* combine F(sigma, tau) for sigma, tau in {+1,-1} (x̄ -> sigma x̄, x5 -> tau x5) */
template <class V>
std::array<V, 3> parity_combine(const V& pp, const V& pm, const V& mp, const V& mm, const BigRational& quarter) {
    auto comb = [&](int a, int b, int c, int d) {
        V s = pp.scaled(BigRational(a));
        s += pm.scaled(BigRational(b));
        s += mp.scaled(BigRational(c));
        s += mm.scaled(BigRational(d));
        return s.scaled(quarter);
    };
    return {comb(1, 1, 1, 1), comb(1, -1, 1, -1), comb(1, 1, -1, -1)};
}

struct Scalar {
    BigRational v;
    Scalar scaled(const BigRational& c) const { return {v * c}; }
    Scalar& operator+=(const Scalar& o) {
        v += o.v;
        return *this;
    }
};

/* 1 / (1 - c s^e) through s^(lo + len) */
LaurentSeries1 geometric_inverse(const BigRational& c, int e, int len) {
    if (e == 0) {
        if ((BigRational(1) - c).is_zero()) throw std::domain_error("f_w_parity_formal: pole at the point");
        return LaurentSeries1::monomial(true, 0, BigRational(1) / (BigRational(1) - c), len);
    }
    if (e > 0) {
        LaurentSeries1 s(true, 0, len);
        BigRational p(1);
        for (int k = 0; k * e <= len; ++k, p *= c) s.c[size_t(k * e)] = p;
        return s;
    }
    /* 1/(1 - c s^-f) = -c^-1 s^f / (1 - c^-1 s^f) */
    int f = -e;
    BigRational ci = BigRational(1) / c;
    LaurentSeries1 s(true, f, f + len);
    BigRational p = -ci;
    for (int k = 0; k * f <= len; ++k, p *= ci) s.c[size_t(k * f)] = p;
    return s;
}

LaurentSeries1 cg_formal(const CGTerm& f, int sig, int tau, int x5pow, int upow, int hi) {
    auto sgn_of = [&](const Monomial& m) {
        int s = 1;
        if (sig < 0 && (xbar_degree(m) & 1)) s = -s;
        if (tau < 0 && (m[4] & 1)) s = -s;
        return s;
    };
    /* lowest exponents first, to size the windows */
    int num_lo = INT_MAX;
    for (auto& [m, p] : f.numerator)
        for (int k = 0; k <= p.degree(); ++k)
            if (!p[k].is_zero()) num_lo = std::min(num_lo, x5pow * m[4] + upow * k);
    if (num_lo == INT_MAX) return LaurentSeries1(true, 0, hi);
    int lo_total = num_lo;
    std::vector<std::pair<BigRational, int>> facs;
    for (auto& fc : f.denominator) {
        int e = x5pow * fc.m[4] + upow * fc.upow;
        BigRational c(fc.sign * sgn_of(fc.m));
        facs.push_back({c, e});
        if (e < 0) lo_total += -e;
    }
    int len = hi - lo_total;
    if (len < 0) return LaurentSeries1(true, hi + 1, hi);
    LaurentSeries1 num(true, num_lo, num_lo + len);
    for (auto& [m, p] : f.numerator)
        for (int k = 0; k <= p.degree(); ++k)
            if (!p[k].is_zero()) num.add(x5pow * m[4] + upow * k, p[k] * BigRational(sgn_of(m)));
    LaurentSeries1 out = num;
    for (auto& [c, e] : facs) out = out * geometric_inverse(c, e, len);
    return out.truncated(hi);
}

}

std::array<BigRational, 3> f_w_parity_eval(const std::vector<int>& word, const std::array<BigRational, 5>& x,
                                           const BigRational& u) {
    CGTerm f = f_w(word);
    auto at = [&](int sig, int tau) {
        auto y = x;
        for (int i = 0; i < 4; ++i) y[i] *= BigRational(sig);
        y[4] *= BigRational(tau);
        return Scalar{f.evaluate(y, u)};
    };
    auto t = parity_combine(at(1, 1), at(1, -1), at(-1, 1), at(-1, -1), BigRational(1, 4));
    return {t[0].v, t[1].v, t[2].v};
}

std::array<LaurentSeries1, 3> f_w_parity_formal(const std::vector<int>& word, int x5pow, int upow, int hi) {
    CGTerm f = f_w(word);
    auto at = [&](int sig, int tau) { return cg_formal(f, sig, tau, x5pow, upow, hi); };
    return parity_combine(at(1, 1), at(1, -1), at(-1, 1), at(-1, -1), BigRational(1, 4));
}

LaurentSeries1 s_n_series(int D, int n, int hi) {
    if (n != 1 && n != 2) throw std::invalid_argument("s_n_series: n must be 1 or 2");
    if (D < 0) throw std::invalid_argument("s_n_series: negative D");
    const int margin = 4 * n + 4;
    auto f = f_w_parity_formal(w_alpha_word(n), 1, -n, hi + margin);
    int flo = std::min({f[0].lo, f[1].lo, f[2].lo});
    LaurentSeries1 r = r_n_series(n, (hi + margin - flo) / 2 + 1).to_half();
    auto bracket = [&](const LaurentSeries1& g, int shift, int c) {
        return u_operator((r * g.shifted(shift)).to_rho(), n, c).to_half();
    };
    LaurentSeries1 s;
    if (D % 2 == 0) {
        s = bracket(f[0], 0, D / 2);
        s += bracket(f[2], n, D / 2).shifted(-n);
    } else {
        s = bracket(f[1], n - 1, D / 2).shifted(-(n - 1));
    }
    if (s.hi() < hi) throw std::logic_error("s_n_series: window shorter than requested");
    return s.truncated(hi);
}

CheckReport f_w_triple_check(int hi) {
    CheckReport rep("f_w_triple", hi);
    auto f = f_w_parity_formal(w_alpha_word(2), 1, -2, hi);
    /* in s = rho^{1/2} */
    std::map<int, int> want[3] = {{{0, 1}, {-2, 7}, {-4, 13}, {-6, 7}, {-8, 1}},
                                  {{-1, 1}, {-3, 7}, {-5, 7}, {-7, 1}},
                                  {{-2, 3}, {-4, 7}, {-6, 3}}};
    const char* names[3] = {"f^ee", "f^eo", "f^oe"};
    for (int k = 0; k < 3; ++k) {
        for (int e = std::min(f[k].lo, -8); e <= hi; ++e) {
            auto it = want[k].find(e);
            BigRational w = it == want[k].end() ? BigRational(0) : BigRational(it->second);
            rep.expect(f[k].coeff(e) == w, std::string(names[k]) + " at s^" + std::to_string(e) + ": " +
                                               f[k].coeff(e).str() + " vs " + w.str());
        }
        rep.extra[names[k]] = f[k].str(6);
    }
    /* identity: (1, u x5, 0) */
    std::array<BigRational, 5> x{BigRational(2, 3), BigRational(-3, 5), BigRational(5, 7), BigRational(1, 4),
                                 BigRational(-7, 2)};
    BigRational u(3, 11);
    auto id = f_w_parity_eval({}, x, u);
    rep.expect(id[0] == 1 && id[1] == u * x[4] && id[2].is_zero(), "f_id triple");
    /* u-parities (even, odd, odd) */
    for (auto& w : std::vector<std::vector<int>>{{5}, {5, 4}, {5, 4, 3, 2, 1, 4}, {1, 5, 2, 3}, {5, 1, 2, 3, 4, 5}}) {
        auto a = f_w_parity_eval(w, x, u), b = f_w_parity_eval(w, x, -u);
        std::string tag = "word length " + std::to_string(w.size());
        rep.expect(a[0] == b[0], tag + ": f^ee not even in u");
        rep.expect(a[1] == -b[1], tag + ": f^eo not odd in u");
        rep.expect(a[2] == -b[2], tag + ": f^oe not odd in u");
    }
    return rep;
}

CheckReport leading_term_check(int n, int hi) {
    CheckReport rep("leading_term_n" + std::to_string(n), hi);
    const int fl = n / 2, cl = (n + 1) / 2;
    const int val = 2 * 3 * fl * cl; /* in powers of rho^{1/2} */
    const int sign = (fl & 1) ? -1 : 1;
    rep.extra["sign"] = sign;
    rep.extra["rho_valuation"] = 3 * fl * cl;
    bool attained = false;
    for (int D = 2 * n; D < 4 * n; ++D) {
        LaurentSeries1 s = s_n_series(D, n, hi);
        std::string tag = "D=" + std::to_string(D);
        rep.expect(s.valuation() != INT_MIN && s.valuation() >= val,
                   tag + ": valuation " + std::to_string(s.valuation()) + " in rho^{1/2}");
        attained = attained || s.valuation() == val;
        for (int e = s.lo; e <= s.hi(); ++e) {
            const BigRational& v = s.c[size_t(e - s.lo)];
            if (!v.is_zero()) rep.expect(v.sign() == sign, tag + ": coefficient of s^" + std::to_string(e) + " is " +
                                                               v.str());
        }
        /* depends on D only through floor(D/2) mod n and the parity of D */
        rep.expect(s_n_series(D + 2 * n, n, hi).c == s.c, tag + ": S_n changes under D -> D + 2n");
        rep.extra["S_" + std::to_string(n) + "(D=" + std::to_string(D) + ")"] = s.str(6);
    }
    rep.expect(attained, "the rho-power bound is not attained by any class of D");
    return rep;
}

namespace {

/* dense polynomial in t1..t4 with every exponent <= cap */
template <class T>
struct Grid4 {
    int cap = 7;
    std::vector<T> a;
    explicit Grid4(int c = 7) : cap(c), a(size_t((c + 1) * (c + 1) * (c + 1) * (c + 1)), T(0)) {}
    size_t idx(const std::array<int, 4>& e) const {
        size_t r = 0;
        for (int i = 0; i < 4; ++i) r = r * (cap + 1) + e[i];
        return r;
    }
    std::array<int, 4> exps(size_t r) const {
        std::array<int, 4> e{};
        for (int i = 4; i-- > 0;) {
            e[i] = int(r % (cap + 1));
            r /= (cap + 1);
        }
        return e;
    }
    /* times a sparse polynomial given as (exponent, coefficient) pairs */
    Grid4 times(const std::vector<std::pair<std::array<int, 4>, T>>& p) const {
        Grid4 out(cap);
        for (size_t r = 0; r < a.size(); ++r) {
            if (a[r] == T(0)) continue;
            auto e = exps(r);
            for (auto& [f, c] : p) {
                std::array<int, 4> g;
                bool ok = true;
                for (int i = 0; i < 4; ++i) {
                    g[i] = e[i] + f[i];
                    if (g[i] > cap) ok = false;
                }
                if (ok) out.a[out.idx(g)] += a[r] * c;
            }
        }
        return out;
    }
};

using Sparse4 = std::vector<std::pair<std::array<int, 4>, BigRational>>;

std::array<int, 4> ei(int i) {
    std::array<int, 4> e{};
    e[i] = 1;
    return e;
}

/* z_i - z_j = t_i - t_j */
Sparse4 diff(int i, int j) { return {{ei(i), BigRational(1)}, {ei(j), BigRational(-1)}}; }
/* 1 - z_i z_j = -(t_i + t_j + t_i t_j) */
Sparse4 one_minus_prod(int i, int j) {
    std::array<int, 4> ij{};
    ij[i] += 1;
    ij[j] += 1;
    if (i == j) return {{ei(i), BigRational(-2)}, {ij, BigRational(-1)}};
    return {{ei(i), BigRational(-1)}, {ei(j), BigRational(-1)}, {ij, BigRational(-1)}};
}
/* z_i = 1 + t_i */
Sparse4 z_of(int i) { return {{std::array<int, 4>{}, BigRational(1)}, {ei(i), BigRational(1)}}; }

Grid4<BigRational> kernel_grid(int n) {
    Grid4<BigRational> g(7);
    g.a[0] = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            int e = (n == 2 && j == 3) ? 1 : 2;
            for (int k = 0; k < e; ++k) g = g.times(diff(i, j));
            g = g.times(one_minus_prod(i, j));
        }
    if (n == 2) {
        for (int k = 0; k < 3; ++k)
            for (int l = k; l < 3; ++l) g = g.times(one_minus_prod(k, l));
        for (int i = 0; i < 3; ++i) g = g.times(z_of(i));
    }
    return g;
}

BigRational binom_q(const BigRational& x, int k) {
    BigRational r(1);
    for (int j = 0; j < k; ++j) r = r * (x - BigRational(j)) / BigRational(j + 1);
    return r;
}

}

BigRational kernel_constant() {
    Grid4<BigRational> g(7);
    g.a[0] = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            g = g.times(diff(i, j));
            g = g.times(diff(i, j));
            g = g.times({{ei(i), BigRational(1)}, {ei(j), BigRational(1)}});
        }
    /* [t^7] e^{-t} t^v = (-1)^{7-v} / (7-v)! */
    std::array<BigRational, 8> ex;
    BigRational fact(1);
    for (int k = 0; k <= 7; ++k) {
        if (k) fact *= BigRational(k);
        ex[k] = BigRational((k & 1) ? -1 : 1) / fact;
    }
    BigRational out;
    for (size_t r = 0; r < g.a.size(); ++r) {
        if (g.a[r].is_zero()) continue;
        auto e = g.exps(r);
        BigRational t = g.a[r];
        for (int i = 0; i < 4; ++i) t *= ex[7 - e[i]];
        out += t;
    }
    return out;
}

/* group-ring Taylor machinery */

namespace {

using GR = std::array<mpf_class, 4>;

GR gr_zero() {
    ensure_precision();
    GR g;
    for (auto& x : g) x = mpf_class(0, kBits);
    return g;
}
GR gr_scalar(const mpf_class& v, int r = 0) {
    GR g = gr_zero();
    g[mod4(r)] = v;
    return g;
}
GR gr_mul(const GR& a, const GR& b) {
    GR o = gr_zero();
    for (int r = 0; r < 4; ++r) {
        if (sgn(a[r]) == 0) continue;
        for (int s = 0; s < 4; ++s)
            if (sgn(b[s]) != 0) o[(r + s) & 3] += a[r] * b[s];
    }
    return o;
}
/* inverse through the characters zeta = 1, -1, i */
GR gr_inverse(const GR& a) {
    mpf_class p = a[0] + a[2], m = a[1] + a[3];
    mpf_class x = a[0] - a[2], y = a[1] - a[3];
    mpf_class c1 = p + m, cm = p - m, ci = x * x + y * y;
    mpf_class tiny(1e-60, kBits);
    if (abs(c1) < tiny || abs(cm) < tiny || ci < tiny * tiny)
        throw std::domain_error("QnEvaluator: factor vanishes at z = 1 for some zeta");
    mpf_class b1 = 1 / c1, bm = 1 / cm, re = x / ci, im = -y / ci;
    GR o = gr_zero();
    o[0] = (b1 + bm + 2 * re) / 4;
    o[1] = (b1 - bm + 2 * im) / 4;
    o[2] = (b1 + bm - 2 * re) / 4;
    o[3] = (b1 - bm - 2 * im) / 4;
    return o;
}

struct MulTable {
    std::shared_ptr<const SimplexIndex> ix;
    std::vector<std::array<uint32_t, 3>> pairs;
};

const MulTable& mul_table(int T) {
    static std::map<int, MulTable> cache;
    auto it = cache.find(T);
    if (it != cache.end()) return it->second;
    MulTable t;
    t.ix = SimplexIndex::get(4, T);
    const auto& ix = *t.ix;
    for (size_t i = 0; i < ix.size(); ++i)
        for (size_t j = 0; j < ix.degree_start(T - ix.degree(i) + 1); ++j)
            t.pairs.push_back({uint32_t(i), uint32_t(j), uint32_t(ix.rank(ix.monomial(i) + ix.monomial(j)))});
    return cache.emplace(T, std::move(t)).first->second;
}

/* 4-variable Taylor series in t = z - 1 through total degree T; component r
 * holds the coefficient of zeta^r */
struct Taylor {
    int T = 0;
    const MulTable* mt = nullptr;
    std::array<std::vector<mpf_class>, 4> a;
    unsigned mask = 0;

    explicit Taylor(int t = 0) : T(t), mt(&mul_table(t)) {
        ensure_precision();
        for (auto& v : a) v.assign(mt->ix->size(), mpf_class(0, kBits));
    }
    size_t size() const { return mt->ix->size(); }
    static Taylor one(int t) {
        Taylor s(t);
        s.a[0][0] = 1;
        s.mask = 1;
        return s;
    }
};

Taylor operator*(const Taylor& A, const Taylor& B) {
    Taylor out(A.T);
    mpf_class tmp(0, kBits);
    for (int r = 0; r < 4; ++r) {
        if (!(A.mask >> r & 1)) continue;
        for (int s = 0; s < 4; ++s) {
            if (!(B.mask >> s & 1)) continue;
            auto& o = out.a[(r + s) & 3];
            const auto& x = A.a[r];
            const auto& y = B.a[s];
            for (auto& p : A.mt->pairs) {
                if (sgn(x[p[0]]) == 0 || sgn(y[p[1]]) == 0) continue;
                mpf_mul(tmp.get_mpf_t(), x[p[0]].get_mpf_t(), y[p[1]].get_mpf_t());
                o[p[2]] += tmp;
            }
            out.mask |= 1u << ((r + s) & 3);
        }
    }
    return out;
}

Taylor times_gr(const Taylor& A, const GR& g) {
    Taylor out(A.T);
    for (int r = 0; r < 4; ++r) {
        if (!(A.mask >> r & 1)) continue;
        for (int s = 0; s < 4; ++s) {
            if (sgn(g[s]) == 0) continue;
            auto& o = out.a[(r + s) & 3];
            for (size_t k = 0; k < A.size(); ++k) o[k] += A.a[r][k] * g[s];
            out.mask |= 1u << ((r + s) & 3);
        }
    }
    return out;
}

void add_scaled(Taylor& L, const GR& g, const std::vector<mpf_class>& s) {
    for (int r = 0; r < 4; ++r) {
        if (sgn(g[r]) == 0) continue;
        for (size_t k = 0; k < s.size(); ++k) L.a[r][k] += g[r] * s[k];
        L.mask |= 1u << r;
    }
}

/* exp of a series with zero constant term */
Taylor taylor_exp(const Taylor& L) {
    Taylor e = Taylor::one(L.T), term = Taylor::one(L.T);
    for (int k = 1; k <= L.T; ++k) {
        term = term * L;
        for (auto& v : term.a)
            for (auto& x : v) x /= k;
        for (int r = 0; r < 4; ++r)
            for (size_t j = 0; j < e.size(); ++j) e.a[r][j] += term.a[r][j];
        e.mask |= term.mask;
    }
    return e;
}

/* times a univariate series in t_axis */
Taylor mul_axis(const Taylor& A, int axis, const std::vector<mpf_class>& phi) {
    Taylor out(A.T);
    out.mask = A.mask;
    const auto& ix = *A.mt->ix;
    for (int r = 0; r < 4; ++r) {
        if (!(A.mask >> r & 1)) continue;
        for (size_t k = 0; k < ix.size(); ++k) {
            Monomial m = ix.monomial(k);
            int top = m[axis];
            for (int j = 0; j <= top && j < int(phi.size()); ++j) {
                Monomial d = m;
                d[axis] -= j;
                out.a[r][k] += phi[j] * A.a[r][ix.rank(d)];
            }
        }
    }
    return out;
}

std::vector<mpf_class> binom_series(const mpf_class& x, int T) {
    std::vector<mpf_class> b(size_t(T + 1), mpf_class(0, kBits));
    b[0] = 1;
    for (int k = 1; k <= T; ++k) b[k] = b[k - 1] * (x - (k - 1)) / k;
    return b;
}

/* z^v - 1 with v = z2/2, as a scalar series */
std::vector<mpf_class> z_pow_minus_one(const std::array<int, 4>& z2, int T) {
    const auto& ix = *mul_table(T).ix;
    std::array<std::vector<mpf_class>, 4> b;
    for (int i = 0; i < 4; ++i) b[i] = binom_series(mpf_class(z2[i], kBits) / 2, T);
    std::vector<mpf_class> s(ix.size(), mpf_class(0, kBits));
    for (size_t k = 1; k < ix.size(); ++k) {
        const Monomial& m = ix.monomial(k);
        mpf_class v = b[0][m[0]];
        for (int i = 1; i < 4; ++i) v *= b[i][m[i]];
        s[k] = v;
    }
    return s;
}

/* c u^{u2/2} zeta^zeta z^{z2/2} */
struct Term {
    BigRational c{1};
    int u2 = 0;
    int zeta = 0;
    std::array<int, 4> z2{};
    Term operator*(const Term& o) const {
        Term t{c * o.c, u2 + o.u2, zeta + o.zeta, z2};
        for (int i = 0; i < 4; ++i) t.z2[i] += o.z2[i];
        return t;
    }
    Term pow(int k) const {
        Term t;
        for (int j = 0; j < std::abs(k); ++j) t = t * *this;
        if (k < 0) {
            t.c = BigRational(1) / t.c;
            t.u2 = -t.u2;
            t.zeta = -t.zeta;
            for (auto& z : t.z2) z = -z;
        }
        return t;
    }
};

}

struct QnEvaluator::Impl {
    /* before any mpf member is built */
    bool prec = (ensure_precision(), true);
    int n = 1, T = 10;
    BigRational q;
    mpf_class u, uq; /* sqrt q and q^{1/4} */
    Term x5;
    Taylor R, fe, fo, base_e, base_o;
    Grid4<mpf_class> V;
    double tail_bound = 0;

    mpf_class mag(const Term& t) const { return abs(mpf_of(t.c) * mpf_pow(uq, t.u2)); }
    int vmax(const Term& t) const {
        int m = 0;
        for (int z : t.z2) m = std::max(m, std::abs(z));
        return (m + 1) / 2;
    }
    /* bound on the log-series coefficients of 1/(1 - t) */
    double factor_bound(const Term& t) const {
        return std::log10(2.0) + log10_abs(mag(t)) + T * std::log10(double(vmax(t) + T));
    }

    Term subst(const Monomial& m, int upow) const {
        Term t;
        t.u2 = 2 * upow;
        for (int i = 0; i < 4; ++i) t.z2[i] = 2 * m[i];
        return t * x5.pow(m[4]);
    }

    /* L += log(1/(1 - a z^v)) - log(1/(1 - a)), konst *= 1/(1 - a) */
    void factor(const Term& a, Taylor& L, GR& konst) const {
        bool flat = std::all_of(a.z2.begin(), a.z2.end(), [](int z) { return z == 0; });
        if (flat && a.u2 == 0 && mod4(a.zeta) == 0 && a.c == 1)
            throw std::domain_error("QnEvaluator: pole at z = 1");
        mpf_class A = mpf_of(a.c) * mpf_pow(uq, a.u2);
        GR one_minus = gr_scalar(mpf_class(1, kBits));
        one_minus[mod4(a.zeta)] -= A;
        GR inv = gr_inverse(one_minus);
        konst = gr_mul(konst, inv);
        if (flat) return;
        if (abs(A) <= 0.05) {
            const int vm = vmax(a);
            mpf_class p(1, kBits);
            for (int j = 1;; ++j) {
                p *= A;
                if (log10_abs(p) + T * std::log10(double(j * vm + T)) < -90) break;
                std::array<int, 4> v;
                for (int i = 0; i < 4; ++i) v[i] = j * a.z2[i];
                add_scaled(L, gr_scalar(p / j, j * a.zeta), z_pow_minus_one(v, T));
            }
            return;
        }
        /* log(1 - a(1+s)) - log(1-a) = log(1 - b s), b = a/(1-a), s = z^v - 1 */
        GR b = gr_mul(gr_scalar(A, a.zeta), inv);
        Taylor s(T);
        s.a[0] = z_pow_minus_one(a.z2, T);
        s.mask = 1;
        Taylor sp = s;
        GR bj = b;
        for (int j = 1; j <= T; ++j) {
            GR c = bj;
            for (auto& x : c) x /= j;
            L = [&] {
                Taylor t = times_gr(sp, c);
                for (int r = 0; r < 4; ++r)
                    for (size_t k = 0; k < L.size(); ++k) t.a[r][k] += L.a[r][k];
                t.mask |= L.mask;
                return t;
            }();
            if (j < T) {
                sp = sp * s;
                bj = gr_mul(bj, b);
            }
        }
    }

    Taylor build_r(int cutoff) {
        WeylElement w = from_word(w_alpha_word(n));
        if (act(w.action, phi_n_alpha(n)) != simple_root(5))
            throw std::logic_error("QnEvaluator: w_alpha does not send alpha to alpha5");
        std::array<Term, 4> y;
        for (int j = 0; j < 4; ++j) y[j] = subst(column(w.inverse, j + 1), 0);
        Term P = y[0] * y[1] * y[2] * y[3];
        P.u2 -= 4;
        if (!(mag(P) < 1)) throw std::domain_error("QnEvaluator: |P| >= 1 at z = 1");

        /* the singular factors cancelled against the kernel */
        std::multiset<std::array<int, 4>> singular;
        auto vec = [](std::initializer_list<std::pair<int, int>> l) {
            std::array<int, 4> v{};
            for (auto [i, e] : l) v[i] += 2 * e;
            return v;
        };
        if (n == 1) {
            for (int i = 0; i < 4; ++i)
                for (int j = i; j < 4; ++j) singular.insert(vec({{i, 1}, {j, 1}}));
        } else {
            singular.insert(vec({{3, 2}}));
            for (int j = 0; j < 3; ++j) {
                singular.insert(vec({{3, 1}, {j, 1}}));
                singular.insert(vec({{3, 1}, {j, -1}}));
            }
        }

        struct Family {
            Term first, step;
        };
        std::vector<Family> fams;
        Term P2 = P * P, u2{BigRational(1), 4, 0, {}};
        fams.push_back({P2, P2});
        fams.push_back({u2 * P2, P2});
        for (int i = 0; i < 4; ++i) {
            fams.push_back({y[i] * y[i], P2});
            fams.push_back({u2 * y[i].pow(-2) * P2, P2});
            for (int j = i + 1; j < 4; ++j) fams.push_back({y[i] * y[j], P});
        }

        Taylor L(T);
        GR konst = gr_scalar(mpf_class(1, kBits));
        double tail = 0;
        for (auto& f : fams) {
            Term a = f.first;
            for (int k = 0;; ++k, a = a * f.step) {
                double b = factor_bound(a);
                bool stop = cutoff > 0 ? k >= cutoff : (k > 0 && b < -80);
                if (stop) {
                    /* remaining terms: sum the bounds until they are negligible */
                    Term t = a;
                    double acc = 0;
                    for (int j = 0; j < 100000; ++j, t = t * f.step) {
                        double bj = factor_bound(t);
                        acc += std::pow(10.0, bj);
                        if (bj < -300 || (j > 10 && bj < std::log10(acc) - 20)) break;
                    }
                    tail += acc;
                    break;
                }
                if (a.c == 1 && a.u2 == 0 && mod4(a.zeta) == 0) {
                    auto it = singular.find(a.z2);
                    if (it != singular.end()) {
                        singular.erase(it);
                        continue;
                    }
                }
                factor(a, L, konst);
            }
        }
        if (!singular.empty()) throw std::logic_error("QnEvaluator: singular factors not found in R(w x)");
        tail_bound = tail > 0 ? std::log10(tail) : -300;
        return times_gr(taylor_exp(L), konst);
    }

    Taylor build_f() {
        CGTerm f = f_w(w_alpha_word(n));
        Taylor num(T);
        for (auto& [m, p] : f.numerator)
            for (int k = 0; k <= p.degree(); ++k) {
                if (p[k].is_zero()) continue;
                Term t = subst(m, k);
                t.c = p[k];
                std::vector<mpf_class> s = z_pow_minus_one(t.z2, T);
                s[0] = 1;
                add_scaled(num, gr_scalar(mpf_of(t.c) * mpf_pow(uq, t.u2), t.zeta), s);
            }
        Taylor L(T);
        GR konst = gr_scalar(mpf_class(1, kBits));
        for (auto& fc : f.denominator) {
            Term a = subst(fc.m, fc.upow);
            a.c = BigRational(fc.sign);
            factor(a, L, konst);
        }
        return num * times_gr(taylor_exp(L), konst);
    }

    Impl(int n_, const BigRational& q_, int cutoff) : n(n_), T(n_ == 1 ? 10 : 7), q(q_) {
        ensure_precision();
        if (n != 1 && n != 2) throw std::invalid_argument("QnEvaluator: n must be 1 or 2");
        if (!(q > BigRational(1))) throw std::invalid_argument("QnEvaluator: q must exceed 1");
        u = sqrt(mpf_of(q));
        uq = sqrt(u);
        x5.zeta = -1;
        if (n == 1) x5.u2 = -2;
        else {
            x5.u2 = -1;
            x5.z2 = {-1, -1, -1, 0};
        }
        R = build_r(cutoff);
        Taylor f = build_f();
        fe = Taylor(T);
        fo = Taylor(T);
        for (int r = 0; r < 4; ++r) {
            (r & 1 ? fo : fe).a[r] = f.a[r];
            if (f.mask >> r & 1) (r & 1 ? fo : fe).mask |= 1u << r;
        }
        base_e = R * fe;
        base_o = R * fo;
        /* (1-u)/(1-u/z) = (1+t)/(1 + t/(1-u)) */
        mpf_class w = -1 / (1 - u);
        std::vector<mpf_class> pe(size_t(T + 1), mpf_class(0, kBits));
        mpf_class wk(1, kBits);
        for (int k = 0; k <= T; ++k) {
            pe[k] += wk;
            if (k + 1 <= T) pe[k + 1] += wk;
            wk *= w;
        }
        std::vector<mpf_class> po = binom_series(mpf_class(0.5, kBits), T);
        for (int i = 0; i < 4; ++i) {
            base_e = mul_axis(base_e, i, pe);
            base_o = mul_axis(base_o, i, po);
        }
        auto g = kernel_grid(n);
        V = Grid4<mpf_class>(7);
        for (size_t r = 0; r < g.a.size(); ++r) V.a[r] = mpf_of(g.a[r]);
    }

    std::array<mpf_class, 4> i_n(int D) const {
        if (D < 1) throw std::invalid_argument("QnEvaluator: D must be positive");
        /* exponents of z_i including dz/z^4 */
        std::array<BigRational, 4> e;
        for (int i = 0; i < 4; ++i) {
            e[i] = BigRational(-4);
            if (n == 1 || i == 3) e[i] -= BigRational(D, 2);
        }
        Grid4<mpf_class> W = V;
        for (int ax = 0; ax < 4; ++ax) {
            std::vector<mpf_class> phi(8);
            for (int k = 0; k <= 7; ++k) phi[k] = mpf_of(binom_q(e[ax], k));
            Grid4<mpf_class> out(7);
            for (size_t r = 0; r < W.a.size(); ++r) {
                if (sgn(W.a[r]) == 0) continue;
                auto ex = W.exps(r);
                for (int k = 0; ex[ax] + k <= 7; ++k) {
                    auto g = ex;
                    g[ax] += k;
                    out.a[out.idx(g)] += W.a[r] * phi[k];
                }
            }
            W = std::move(out);
        }
        const Taylor& base = (D & 1) ? base_o : base_e;
        const auto& ix = *base.mt->ix;
        std::array<mpf_class, 4> c;
        for (auto& x : c) x = mpf_class(0, kBits);
        for (size_t k = 0; k < ix.size(); ++k) {
            const Monomial& m = ix.monomial(k);
            if (m[0] > 7 || m[1] > 7 || m[2] > 7 || m[3] > 7) continue;
            const mpf_class& w = W.a[W.idx({7 - m[0], 7 - m[1], 7 - m[2], 7 - m[3]})];
            if (sgn(w) == 0) continue;
            for (int r = 0; r < 4; ++r) c[r] += base.a[r][k] * w;
        }
        int norm = n == 1 ? 24 : 48;
        for (auto& x : c) x /= norm;
        return c;
    }
};

QnEvaluator::QnEvaluator(int n, const BigRational& q, int cutoff) : impl_(std::make_unique<Impl>(n, q, cutoff)) {}
QnEvaluator::~QnEvaluator() = default;
QnEvaluator::QnEvaluator(QnEvaluator&&) noexcept = default;

int QnEvaluator::n() const { return impl_->n; }
const BigRational& QnEvaluator::q() const { return impl_->q; }
double QnEvaluator::log10_tail() const { return impl_->tail_bound; }
std::array<mpf_class, 4> QnEvaluator::i_n(int D) const { return impl_->i_n(D); }

mpf_class QnEvaluator::q_n(int D) const {
    auto c = impl_->i_n(D);
    const int m = 2 * impl_->n;
    mpf_class s(0, kBits);
    for (int r = 0; r < 4; ++r)
        if ((D + r) % m == 0) s += c[r];
    return s;
}

std::array<mpf_class, 4> QnEvaluator::r_at_one() const {
    std::array<mpf_class, 4> o;
    for (int r = 0; r < 4; ++r) o[r] = impl_->R.a[r][0];
    return o;
}

std::array<mpf_class, 4> QnEvaluator::f_at_one(int parity) const {
    const Taylor& f = parity ? impl_->fo : impl_->fe;
    std::array<mpf_class, 4> o;
    for (int r = 0; r < 4; ++r) o[r] = f.a[r][0];
    return o;
}

double QnEvaluator::zeta_parity_defect() const {
    mpf_class odd(0, kBits), even(0, kBits);
    for (int r = 0; r < 4; ++r)
        for (auto& x : impl_->R.a[r]) {
            mpf_class a = abs(x);
            if (r & 1) {
                if (a > odd) odd = a;
            } else if (a > even) even = a;
        }
    if (sgn(odd) == 0) return -300;
    return log10_abs(odd) - log10_abs(even);
}

nlohmann::json QnFit::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["residue"] = residue;
    j["modulus"] = modulus;
    j["D"] = Ds;
    auto str = [](const mpf_class& x) {
        mp_exp_t e;
        std::string d = x.get_str(e, 10, 30);
        if (d.empty()) return std::string("0");
        bool neg = d[0] == '-';
        if (neg) d = d.substr(1);
        return std::string(neg ? "-" : "") + "0." + d + "e" + std::to_string(e);
    };
    nlohmann::json v = nlohmann::json::array(), c = nlohmann::json::array();
    for (auto& x : values) v.push_back(str(x));
    for (auto& x : coeffs) c.push_back(str(x));
    j["values"] = v;
    j["coefficients"] = c;
    j["reproduce_log10"] = reproduce_log10;
    return j;
}

QnFit q_n_fit(const QnEvaluator& ev, int residue) {
    QnFit fit;
    fit.n = ev.n();
    fit.modulus = 2 * fit.n;
    fit.residue = residue;
    const int deg = fit.n == 1 ? 10 : 7;
    const int base = residue >= 1 ? residue : residue + fit.modulus;
    for (int j = 0; j <= deg + 1; ++j) {
        fit.Ds.push_back(base + fit.modulus * j);
        fit.values.push_back(ev.q_n(fit.Ds.back()));
    }
    /* Newton divided differences on deg + 1 nodes */
    std::vector<mpf_class> dd(fit.values.begin(), fit.values.begin() + deg + 1);
    for (int k = 1; k <= deg; ++k)
        for (int i = deg; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / (fit.Ds[i] - fit.Ds[i - k]);
    /* expand to monomial coefficients in D */
    std::vector<mpf_class> poly(size_t(deg + 1), mpf_class(0, kBits));
    for (int k = deg; k >= 0; --k) {
        /* poly = poly * (D - D_k) + dd[k] */
        std::vector<mpf_class> next(size_t(deg + 1), mpf_class(0, kBits));
        for (int i = 0; i <= deg; ++i) {
            if (i + 1 <= deg) next[i + 1] += poly[i];
            next[i] -= poly[i] * fit.Ds[k];
        }
        next[0] += dd[k];
        poly = std::move(next);
    }
    fit.coeffs = poly;
    fit.lead = poly[deg];
    mpf_class pred(0, kBits), D(fit.Ds.back(), kBits);
    for (int i = deg; i >= 0; --i) pred = pred * D + poly[i];
    mpf_class actual = fit.values.back();
    fit.reproduce_log10 = log10_abs(pred - actual) - log10_abs(actual);
    return fit;
}

mpf_class q_n_leading_closed(int n, int D, const BigRational& q, int hi) {
    LaurentSeries1 s = s_n_series(D, n, hi);
    ensure_precision();
    /* s = rho^{1/2} = q^{-1/(2n)} */
    mpf_class x = sqrt(1 / mpf_of(q));
    if (n == 2) x = sqrt(x);
    mpf_class v = s.eval(x);
    /* 1/2^4 prod_{j<4} (2j)!/(4+j)! = 1/302400/16 */
    if (n == 1) return v / 4838400;
    return v / (5040 * 128);
}

CheckReport q_n_check(int n, const BigRational& q) {
    CheckReport rep("q_n_" + std::to_string(n), 0);
    QnEvaluator ev(n, q);
    rep.extra["log10_tail"] = ev.log10_tail();
    rep.expect(ev.log10_tail() < -20, "Pochhammer tail bound too large");
    rep.expect(ev.zeta_parity_defect() < -50, "R_{n,zeta} has zeta-odd terms");
    rep.expect(kernel_constant() == BigRational(8, 1575), "kernel constant is " + kernel_constant().str());

    /* R_{n,zeta}(1) = R_n(rho/zeta^2) */
    mpf_class x = 1 / mpf_of(q);
    if (n == 2) x = sqrt(x);
    const int hi = n == 1 ? 400 : 800;
    LaurentSeries1 rn = r_n_series(n, hi / 2);
    auto r1 = ev.r_at_one();
    auto rel = [](const mpf_class& a, const mpf_class& b) { return log10_abs(a - b) - log10_abs(b); };
    mpf_class at1 = r1[0] + r1[1] + r1[2] + r1[3];
    rep.expect(rel(at1, rn.eval(x)) < -30, "R_{n,1}(1) != R_n(rho)");
    if (n == 2) {
        mpf_class ati = r1[0] - r1[2];
        rep.expect(rel(ati, rn.eval(-x)) < -30, "R_{2,i}(1) != R_2(-rho)");
    }

    for (int res = 1; res <= 2 * n; ++res) {
        QnFit fit = q_n_fit(ev, res);
        std::string tag = "D = " + std::to_string(res) + " mod " + std::to_string(2 * n);
        rep.expect(fit.reproduce_log10 < -40, tag + ": fitted polynomial misses the extra value (log10 " +
                                                  std::to_string(fit.reproduce_log10) + ")");
        mpf_class closed = q_n_leading_closed(n, res, q, hi);
        double d = rel(fit.lead, closed);
        rep.expect(d < -25, tag + ": leading coefficient off by 10^" + std::to_string(d));
        rep.extra["lead_log10_mismatch(" + tag + ")"] = d;
        rep.extra["lead(" + tag + ")"] = fit.lead.get_d();
        /* the other zeta-parity vanishes */
        auto c = ev.i_n(fit.Ds[0]);
        mpf_class wrong(0, kBits), right(0, kBits);
        for (int r = 0; r < 4; ++r) ((r + fit.Ds[0]) & 1 ? wrong : right) += abs(c[r]);
        rep.expect(sgn(wrong) == 0 || log10_abs(wrong) - log10_abs(right) < -50,
                   tag + ": I_{n,-zeta} != (-1)^D I_{n,zeta}");
    }
    return rep;
}

/* integral lemma, r = 2 */

namespace {

BigRational eval_poly2(const Poly2& p, const BigRational& z1, const BigRational& z2) {
    BigRational s;
    for (auto& [e, c] : p) s += c * z1.pow(e.first) * z2.pow(e.second);
    return s;
}

BigRational h_at(const SymSumParams& p, const BigRational& z1, const BigRational& z2) {
    BigRational d = eval_poly2(p.hden, z1, z2);
    if (d.is_zero()) throw std::invalid_argument("sym_sum: h has a pole at a sampled point");
    return eval_poly2(p.hnum, z1, z2) / d;
}

BigRational k_m(const SymSumParams& p, const BigRational& z1, const BigRational& z2) {
    BigRational one(1), den;
    if (p.m == 0) den = (one - z1 * z1) * (one - z1 * z2) * (one - z2 * z2);
    else den = (one - z1 * z2) * (one - z2 / z1) * (one - z2 * z2);
    if (den.is_zero()) throw std::invalid_argument("sym_sum: K_m has a pole at a sampled point");
    return h_at(p, z1, z2) / den;
}

}

SymSumValue sym_sum_values(const SymSumParams& p) {
    const BigRational one(1);
    std::array<BigRational, 2> a{p.a1, p.a2};
    if (p.m != 0 && p.m != 1) throw std::invalid_argument("sym_sum: m must be 0 or 1");
    if (a[0].is_zero() || a[1].is_zero() || a[0] == a[1]) throw std::invalid_argument("sym_sum: degenerate a");
    for (auto& x : a)
        for (auto& y : a)
            if (x * y == one) throw std::invalid_argument("sym_sum: a_i a_j = 1");

    SymSumValue v;
    for (int s = 0; s < 2; ++s)
        for (int d1 = 0; d1 < 2; ++d1)
            for (int d2 = 0; d2 < 2; ++d2) {
                BigRational z1 = a[s], z2 = a[1 - s];
                if (d1) z1 = one / z1;
                if (d2) z2 = one / z2;
                v.lhs += k_m(p, z1, z2);
            }

    /* poles: factor (1 - z b) vanishes at z = 1/b, b in {a_j, 1/a_j} */
    std::vector<BigRational> bs{a[0], a[1], one / a[0], one / a[1]};
    auto kernel = [&](const BigRational& z1, const BigRational& z2) {
        BigRational k = (p.m == 0 ? (z1 - z2) * (z1 - z2) : (z1 - z2)) * (one - z1 * z2);
        if (p.m == 1) k *= (one - z1 * z1) * z1;
        return k / (z1 * z1 * z2 * z2);
    };
    for (size_t i = 0; i < bs.size(); ++i)
        for (size_t j = 0; j < bs.size(); ++j) {
            if (i == j) continue; /* the (z1 - z2) factor cancels the pole */
            BigRational z1 = one / bs[i], z2 = one / bs[j];
            BigRational rest = h_at(p, z1, z2) * kernel(z1, z2);
            for (size_t k = 0; k < bs.size(); ++k) {
                if (k != i) rest /= (one - z1 * bs[k]);
                if (k != j) rest /= (one - z2 * bs[k]);
            }
            /* residue of 1/(1 - z b) at z = 1/b is -1/b */
            v.rhs += rest / (bs[i] * bs[j]);
        }
    v.rhs = -v.rhs; /* (-1)^{r(r+1)/2} with r = 2 */
    return v;
}

const std::vector<SymSumParams>& default_sym_sum_params() {
    static const std::vector<SymSumParams> params = [] {
        std::vector<SymSumParams> out;
        for (int m = 0; m < 2; ++m) {
            SymSumParams p;
            p.a1 = 2;
            p.a2 = 3;
            p.m = m;
            out.push_back(p);
            SymSumParams r;
            r.a1 = BigRational(-5, 7);
            r.a2 = BigRational(4, 3);
            r.m = m;
            r.hnum = {{{0, 0}, BigRational(3)}, {{1, 0}, BigRational(-2, 5)}, {{0, 2}, BigRational(7)},
                      {{1, 1}, BigRational(1, 3)}};
            out.push_back(r);
            SymSumParams s;
            s.a1 = BigRational(5, 2);
            s.a2 = BigRational(-1, 3);
            s.m = m;
            s.hnum = {{{2, 1}, BigRational(1)}, {{0, 0}, BigRational(-4)}};
            s.hden = {{{0, 0}, BigRational(11)}, {{1, 1}, BigRational(-1)}};
            out.push_back(s);
        }
        return out;
    }();
    return params;
}

CheckReport sym_sum_residue_check(const std::vector<SymSumParams>& params) {
    CheckReport rep("sym_sum_residue", 2);
    for (size_t k = 0; k < params.size(); ++k) {
        const auto& p = params[k];
        auto v = sym_sum_values(p);
        std::string tag = "case " + std::to_string(k) + " (m=" + std::to_string(p.m) + ")";
        rep.expect(v.lhs == v.rhs, tag + ": " + v.lhs.str() + " vs " + v.rhs.str());
        /* a1 <-> a2 */
        SymSumParams sw = p;
        std::swap(sw.a1, sw.a2);
        rep.expect(sym_sum_values(sw).lhs == v.lhs, tag + ": not symmetric in a1, a2");
    }
    return rep;
}

}
