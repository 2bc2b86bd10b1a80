#include "cgd4/cg.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgd4 {

namespace {

bool factor_less(const Factor& a, const Factor& b) {
    if (a.m != b.m) return a.m < b.m;
    if (a.sign != b.sign) return a.sign < b.sign;
    return a.upow < b.upow;
}

void add_into(XLaurent& dst, const Monomial& m, const UPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = dst.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) dst.erase(it);
    }
}

XLaurent mul(const XLaurent& a, const XLaurent& b) {
    XLaurent r;
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b) add_into(r, ma + mb, ca * cb);
    return r;
}

XLaurent factor_poly(const Factor& f) {
    XLaurent p;
    p[Monomial{}] = UPoly(1);
    add_into(p, f.m, UPoly::monomial(-f.sign, f.upow));
    return p;
}

/* factors of big that are not in small (both sorted multisets) */
FactorList missing(const FactorList& big, const FactorList& small) {
    FactorList out;
    std::set_difference(big.begin(), big.end(), small.begin(), small.end(), std::back_inserter(out), factor_less);
    return out;
}

BigRational mono_value(const Monomial& m, const std::array<BigRational, 5>& x) {
    BigRational v(1);
    for (int j = 0; j < 5; ++j) {
        if (m[j] >= 0) v *= x[j].pow(m[j]);
        else v /= x[j].pow(-m[j]);
    }
    return v;
}

BigRational j_value(const BigRational& y, const BigRational& u, int eps) {
    BigRational den = BigRational(1) - u * y;
    if (den.is_zero()) throw std::domain_error("act_pointwise: pole of J");
    BigRational inner = (u - y) / den - BigRational(eps ? -1 : 1);
    return y * inner / BigRational(2);
}

}

CGTerm CGTerm::constant(const UPoly& c) { return monomial(Monomial{}, c); }

CGTerm CGTerm::monomial(const Monomial& m, const UPoly& c) {
    CGTerm t;
    if (!c.is_zero()) t.numerator[m] = c;
    return t;
}

bool CGTerm::squarefree() const {
    for (size_t k = 1; k < denominator.size(); ++k)
        if (denominator[k].m == denominator[k - 1].m && denominator[k].sign == denominator[k - 1].sign) return false;
    return true;
}

BigRational CGTerm::evaluate(const std::array<BigRational, 5>& x, const BigRational& u) const {
    for (auto& c : x)
        if (c.is_zero()) throw std::domain_error("CGTerm::evaluate: zero coordinate");
    BigRational num;
    for (auto& [m, c] : numerator) num += c.eval(u) * mono_value(m, x);
    BigRational den(1);
    for (auto& f : denominator) den *= BigRational(1) - BigRational(f.sign) * u.pow(f.upow) * mono_value(f.m, x);
    if (den.is_zero()) throw std::domain_error("CGTerm::evaluate: vanishing denominator");
    return num / den;
}

TruncSeries CGTerm::expand(int order) const {
    for (auto& f : denominator)
        if (!is_positive(f.m)) throw std::invalid_argument("CGTerm::expand: denominator root not positive");
    TruncSeries den = expand_factor_list(denominator, order);
    TruncSeries out(5, order);
    const auto& ix = den.index();
    for (auto& [m, c] : numerator) {
        if (!is_nonneg(m)) throw std::invalid_argument("CGTerm::expand: numerator has negative exponents");
        int room = order - total_degree(m);
        if (room < 0) continue;
        size_t end = ix.degree_start(room + 1);
        for (size_t r = 0; r < end; ++r)
            if (!den.at(r).is_zero()) out.at(ix.rank(ix.monomial(r) + m)).addmul(c, den.at(r));
    }
    return out;
}

CGTerm operator*(const CGTerm& a, const CGTerm& b) {
    CGTerm r;
    r.numerator = mul(a.numerator, b.numerator);
    r.denominator = a.denominator;
    r.denominator.insert(r.denominator.end(), b.denominator.begin(), b.denominator.end());
    std::sort(r.denominator.begin(), r.denominator.end(), factor_less);
    return r;
}

CGTerm operator+(const CGTerm& a, const CGTerm& b) {
    if (a.numerator.empty()) return b;
    if (b.numerator.empty()) return a;
    CGTerm r;
    std::set_union(a.denominator.begin(), a.denominator.end(), b.denominator.begin(), b.denominator.end(),
                   std::back_inserter(r.denominator), factor_less);
    XLaurent na = a.numerator, nb = b.numerator;
    for (auto& f : missing(r.denominator, a.denominator)) na = mul(na, factor_poly(f));
    for (auto& f : missing(r.denominator, b.denominator)) nb = mul(nb, factor_poly(f));
    r.numerator = std::move(na);
    for (auto& [m, c] : nb) add_into(r.numerator, m, c);
    if (r.numerator.empty()) r.denominator.clear();
    return r;
}

CGTerm j_factor(const Root& beta, int eps) {
    if (!is_positive(beta) || !is_real_root(beta)) throw std::invalid_argument("j_factor: beta must be a positive real root");
    if (eps != 0 && eps != 1) throw std::invalid_argument("j_factor: eps must be 0 or 1");
    /* eps = 0: y(u-1)(1+y)/2,  eps = 1: y(u+1)(1-y)/2 */
    BigRational h(1, 2);
    UPoly c = eps ? UPoly(std::vector<BigRational>{h, h}) : UPoly(std::vector<BigRational>{-h, h});
    CGTerm t;
    t.numerator[beta] = c;
    add_into(t.numerator, 2 * beta, eps ? -c : c);
    t.denominator.push_back({1, 1, beta});
    return t;
}

CGTerm substitute(const CGTerm& f, int i, bool twisted) {
    CGTerm r;
    for (auto& [m, c] : f.numerator) {
        bool neg = twisted && (pairing_simple(m, i) & 1);
        add_into(r.numerator, simple_reflect(i, m), neg ? -c : c);
    }
    for (auto& fac : f.denominator) {
        Factor g = fac;
        g.m = simple_reflect(i, fac.m);
        if (twisted && (pairing_simple(fac.m, i) & 1)) g.sign = -g.sign;
        r.denominator.push_back(g);
    }
    std::sort(r.denominator.begin(), r.denominator.end(), factor_less);
    return r;
}

CGTerm act_simple(const CGTerm& f, int i, bool strict) {
    if (strict)
        for (auto& fac : f.denominator)
            if (!is_positive(simple_reflect(i, fac.m)))
                throw std::invalid_argument("act_simple: denominator root becomes negative (non-reduced extension)");
    Root ai = simple_root(i);
    CGTerm r = substitute(f, i, false) * j_factor(ai, 0) + substitute(f, i, true) * j_factor(ai, 1);
    if (strict && !r.squarefree()) throw std::logic_error("act_simple: denominator not squarefree");
    return r;
}

CGTerm monomial_acted(const Monomial& a, const std::vector<int>& word) {
    CGTerm f = CGTerm::monomial(a);
    for (size_t k = word.size(); k-- > 0;) f = act_simple(f, word[k]);
    return f;
}

CGTerm one_acted(const std::vector<int>& word) { return monomial_acted(Monomial{}, word); }

TruncSeries one_acted_closed_form(const std::vector<int>& word, int order) {
    auto phi = phi_set(word);
    size_t l = phi.size();
    if (l > 20) throw std::invalid_argument("one_acted_closed_form: word too long for the 2^l sum");
    TruncSeries total(5, order);
    for (uint32_t mask = 0; mask < (1u << l); ++mask) {
        TruncSeries prod = series_one(order);
        Root v{};
        for (size_t k = 0; k < l && !prod.is_zero(); ++k) {
            int eps = (mask >> k) & 1;
            int s = (pairing(phi[k], v) & 1) ? -1 : 1;
            /* J(s y, eps) = sum over j >= 1 of c_j y^j */
            TruncSeries jf(5, order);
            int hb = height(phi[k]);
            for (int j = 1; j * hb <= order; ++j) {
                int sj = (j & 1) ? s : 1;
                UPoly c = UPoly::monomial(BigRational(sj, 2), j);
                if (j >= 2) c -= UPoly::monomial(BigRational(sj, 2), j - 2);
                if (j == 1) c -= UPoly(BigRational(eps ? -s : s, 2));
                jf.add_term(j * phi[k], c);
            }
            prod = mul_trunc(prod, jf);
            if (eps) v = v + phi[k];
        }
        total += prod;
    }
    return total;
}

BigRational act_pointwise(const Monomial& a, const std::vector<int>& word, const std::array<BigRational, 5>& x,
                          const BigRational& u) {
    /* F_k = x^a | s_il | ... | s_ik, so F_1 = x^a|w and
     * F_k(x) = F_{k+1}(s x) J(x_i,0) + F_{k+1}(eps s x) J(x_i,1) */
    auto rec = [&](auto&& self, size_t k, const std::array<BigRational, 5>& p) -> BigRational {
        if (k == word.size()) return mono_value(a, p);
        int i = word[k];
        std::array<BigRational, 5> y, z;
        for (int j = 1; j <= 5; ++j) {
            /* (s_i x)^{alpha_j} = x^{s_i alpha_j} */
            y[j - 1] = mono_value(simple_reflect(i, simple_root(j)), p);
            z[j - 1] = adjacent(i, j) ? -y[j - 1] : y[j - 1];
        }
        return self(self, k + 1, y) * j_value(p[i - 1], u, 0) + self(self, k + 1, z) * j_value(p[i - 1], u, 1);
    };
    return rec(rec, 0, x);
}

}
