#pragma once

#include "cgd4/cocycle.hpp"

#include <map>

namespace cgd4 {

/* polynomial in x5 with coefficients in Q[u], keyed by the x5 exponent */
using X5Poly = std::map<int, UPoly>;

/* Z~ = sum_{l even} P_l x5^l / prod (1 - u x_j) + sum_{l odd} P_l x5^l
 *    = sum_{|k| even} Q_k(x5) x̄^k / (1 - u x5) + sum_{|k| odd} Q_k(x5) x̄^k */
struct SlicePolynomials {
    int order = 0;
    int dmax = 0; /* P_l complete for l <= dmax */
    int kmax = 0; /* Q_k complete for |k| <= kmax */
    std::map<int, XLaurent> P;
    std::map<Monomial, X5Poly> Q;

    const XLaurent& p(int l) const;
    const X5Poly& q(const Monomial& k) const;
    /* P_l(c, c, c, c; u) */
    UPoly p_at(int l, const BigRational& c) const;
    nlohmann::json to_json() const;
};

/* needs order >= 5 dmax; the degree bound of the functional equations is
 * verified on every extracted slice and a violation throws */
SlicePolynomials extract_slices(const TruncSeries& z, int dmax);

/* P_l(y,y,y,y;u) as polynomials in y: p[l][a] is the coefficient of y^a */
struct DiagonalSlices {
    int dmax = 0;
    std::map<int, std::vector<UPoly>> p;

    UPoly p_at(int l, const BigRational& c) const;
    nlohmann::json to_json() const;
};
/* from the diagonal kernel at xi-degree dmax; the y-degree bound 4(l - l mod 2)
 * and palindromy are checked with four spare coefficients, a violation throws */
DiagonalSlices diagonal_slices(int dmax);
DiagonalSlices diagonal_slices(const DiagonalSeries& d, int dmax);
DiagonalSlices diagonal_slices(const SlicePolynomials& s);
/* the two routes agree for l <= s.dmax */
CheckReport diagonal_slices_check(const SlicePolynomials& s, const DiagonalSlices& d);

/* P_0 = Q_0 = 1, palindromy of every P_l and Q_k, symmetry in x̄ and
 * evenness of P_l for odd l */
CheckReport slice_structure_check(const SlicePolynomials& s);
/* P_l(1;u) for odd l and P_l(1;u)/(1-u)^4 for even l have non-negative
 * coefficients through u^udeg */
CheckReport positivity_check(const SlicePolynomials& s, int udeg);

/* R(x̄;u) = 1/[(P^2;P^2)(u^2P^2;P^2) prod (x_i^2;P^2)(u^2 x_i^-2 P^2;P^2)
 * prod_{i<j} (x_i x_j;P)], P = x1x2x3x4/u^2, through x̄-degree N */
ResidueSeries residue_closed_form(int order);
/* R(u x̄; u), whose coefficients are polynomials in u */
GSeries<UPoly> residue_scaled(const ResidueSeries& r);
/* sum over even |k| <= N of Q_k(u;u) x̄^k */
GSeries<UPoly> residue_from_slices(const SlicePolynomials& s, int order);

CheckReport residue_consistency_check(const SlicePolynomials& s, int order);
CheckReport residue_consistency_check(int order);
/* R(u x̄;u) from the slices, times the x̄-dependent Pochhammer factors,
 * depends on x̄ only through x1x2x3x4 */
CheckReport residue_factor_check(const SlicePolynomials& s, int order);

/* base-x^delta Pochhammer families (a; x^delta) of the Macdonald product */
struct PochFamily {
    Monomial a;
    int mult = 1;
};
const std::vector<PochFamily>& macdonald_families();
/* F_MD(x) as a truncated product */
TruncSeries macdonald_F(int order);
/* F_MD = Z_W(x;-1), Delta(x) = F_MD(x^2), and the product over real roots */
CheckReport macdonald_check(int order);

/* R(x̄;-1) = F_MD(x̄,-1) / [2 (P;P^2)^2 Delta_5(x̄,-1)], through x̄-degree N */
CheckReport u_minus_one_check(int order);

using Point4 = std::array<BigRational, 4>;
/* (1-u^2) prod (1 - u^2/x_i^2) prod_{i<j} (1 - u^2/(x_i x_j)) */
BigRational lambda_t(const Point4& x, const BigRational& u);
struct ResidueValue {
    BigRational value;  /* product with K factors per Pochhammer symbol */
    double log10_tail;  /* log10 of a bound on |log(true/value)| */
};
/* throws std::domain_error outside |P| < 1 or when a tail factor is not small */
ResidueValue residue_value(const Point4& x, const BigRational& u, int cutoff);
struct LambdaTSample {
    Point4 x;
    BigRational u;
};
const std::vector<LambdaTSample>& default_lambda_t_samples();
/* R(x̄;u) = lambda_t R(u/x1,..,u/x4; u/P) within the certified tail bound */
CheckReport lambda_t_check(const std::vector<LambdaTSample>& samples, int cutoff);

/* shortest word with w alpha = alpha5 */
std::vector<int> word_to_alpha5(const Root& alpha);
/* (1/2) R(w x̄;u) f_w(x;u) at x^alpha = 1/(zeta u), n5(alpha) = 1, as a series in
 * y = first four coordinates of w x */
ResidueSeries c_alpha_zeta(const Root& alpha, int zeta, int order);
/* f_w at the pole against (1,1,1) Lambda~_w (1, zeta, 0)^t at random points */
CheckReport c_alpha_dual_route_check(const Root& alpha, int samples, unsigned seed);

/* Z~ times prod over real beta > 0 of (1 - u^2 x^{2 beta}) has integer
 * coefficients of u-degree at most the x-degree */
CheckReport clearance_check(const TruncSeries& zt);

}
