#pragma once

#include "cgd4/rootsys.hpp"
#include "cgd4/series.hpp"

#include <map>
#include <vector>

namespace cgd4 {

/* Laurent polynomial in x1..x5 with coefficients in Q[u] */
using XLaurent = std::map<Monomial, UPoly>;

/* numerator / prod (1 - sign u x^beta); every beta a real root, each
 * (beta, sign) at most once */
struct CGTerm {
    XLaurent numerator;
    FactorList denominator;

    static CGTerm constant(const UPoly& c);
    static CGTerm monomial(const Monomial& m, const UPoly& c = UPoly(1));
    bool squarefree() const;
    /* value at x (all nonzero) and u; throws on a vanishing denominator */
    BigRational evaluate(const std::array<BigRational, 5>& x, const BigRational& u) const;
    /* power-series expansion; needs a polynomial numerator and positive roots */
    TruncSeries expand(int order) const;
};

CGTerm operator+(const CGTerm& a, const CGTerm& b);
CGTerm operator*(const CGTerm& a, const CGTerm& b);

/* J(x^beta, eps) = (x^beta/2) ((u - x^beta)/(1 - u x^beta) - (-1)^eps) */
CGTerm j_factor(const Root& beta, int eps);

/* f(s_i x) or, twisted, f(eps_i s_i x) */
CGTerm substitute(const CGTerm& f, int i, bool twisted);

/* f|s_i = f(s_i x) J(x_i,0) + f(eps_i s_i x) J(x_i,1). With strict set, a
 * denominator root sent to a negative root is an error. */
CGTerm act_simple(const CGTerm& f, int i, bool strict = true);

/* 1|w for w = s_il ... s_i1 by iterated act_simple */
CGTerm one_acted(const std::vector<int>& word);
/* x^a|w by iterated act_simple */
CGTerm monomial_acted(const Monomial& a, const std::vector<int>& word);

/* 1|w by the explicit 2^l sign sum over delta in {0,1}^l */
TruncSeries one_acted_closed_form(const std::vector<int>& word, int order);

/* pointwise value of (x^a)|w, recursing on the definition of the action */
BigRational act_pointwise(const Monomial& a, const std::vector<int>& word, const std::array<BigRational, 5>& x,
                          const BigRational& u);

/* sum over W of 1|w, truncated at total degree N */
TruncSeries z_w(int order);
/* same, forcing the exact rational kernel (no int64 fast path) */
TruncSeries z_w_exact_kernel(int order);
/* reference: sum of expanded one_acted over the enumerated elements */
TruncSeries z_w_reference(int order);

/* prod (1 - x^{2n delta})^4 prod_{beta > 0 real} (1 - x^{2 beta}) */
TruncSeries delta_product(int order);
/* Z_W / (Delta prod (1 - u^2 x^{(2n-1) delta})^2) */
TruncSeries z_tilde(int order);
/* divide an order-N Z_W by the normalizing product */
TruncSeries normalize_zw(const TruncSeries& zw);

/* Z~(y,y,y,y,xi;u) on the box y-degree <= ydeg, xi-degree <= xdeg */
struct DiagonalSeries {
    int ydeg = 0, xdeg = 0;
    std::vector<UPoly> c; /* index b (ydeg+1) + a for y^a xi^b */

    DiagonalSeries() = default;
    DiagonalSeries(int ydeg, int xdeg);
    UPoly& at(int a, int b) { return c[size_t(b) * (ydeg + 1) + a]; }
    const UPoly& at(int a, int b) const { return c[size_t(b) * (ydeg + 1) + a]; }
};

/* the kernel run directly on the specialized grading: elements are pruned by
 * the bidegree of x^{sum Phi(w)}, which only grows along a word */
DiagonalSeries z_tilde_diagonal(int xdeg, int ydeg);
/* specialization of a truncated Z~; cells with a + b > order are left zero */
DiagonalSeries specialize_diagonal(const TruncSeries& zt, int xdeg, int ydeg);

/* Laurent series truncated at total degree <= order (negative exponents allowed) */
struct LaurentSeries {
    int order = 0;
    XLaurent terms;

    void add(const Monomial& m, const UPoly& c);
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        return a.order == b.order && a.terms == b.terms;
    }
};

/* Laurent polynomial in z = x^delta with coefficients in Z[u] */
using ZLaurent = std::map<int, UPoly>;
std::string zlaurent_str(const ZLaurent& c);
ZLaurent zlaurent_at(const ZLaurent& c, const BigRational& u);

/* the decreasingly sorted 8 differences +-(a1-a2), +-(a5-a1-a2), +-(a3+a4-a5), +-(a3-a4) */
std::array<int, 8> monomial_order_key(const Monomial& a);
int v_index(const Monomial& a, int i);

/* C_g with Z_{W,g} = C_g(x^delta) Z_W, by descent on the order key */
ZLaurent c_g(const Monomial& a);

/* inverses m = w^-1 with H(w) + ht(w^-1 a) <= N, via w^-1 = v t(mu) */
std::vector<Mat5> inverses_for_monomial(const Monomial& a, int order);

/* sum over W of x^a|w truncated at total degree N */
LaurentSeries z_w_g(const Monomial& a, int order);
/* reference by iterated act_simple and expansion */
LaurentSeries z_w_g_reference(const Monomial& a, int order);
/* C_g(x^delta) Z_W truncated at total degree N */
LaurentSeries cg_times_zw(const ZLaurent& c, int order);

}
