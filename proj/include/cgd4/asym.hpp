#pragma once

#include "cgd4/cocycle.hpp"
#include "cgd4/report.hpp"

#include <gmpxx.h>

#include <array>
#include <map>
#include <vector>

namespace cgd4 {

/* Laurent series in rho, or in s = rho^{1/2} when half is set. c[k] is the
 * coefficient of the power lo + k; coefficients are known through hi() and
 * everything below lo vanishes. */
struct LaurentSeries1 {
    bool half = false;
    int lo = 0;
    std::vector<BigRational> c;

    LaurentSeries1() = default;
    LaurentSeries1(bool half, int lo, int hi);
    static LaurentSeries1 monomial(bool half, int e, const BigRational& v, int hi);

    int hi() const { return lo + int(c.size()) - 1; }
    BigRational coeff(int e) const;
    void add(int e, const BigRational& v);  /* ignored outside the window */
    LaurentSeries1 truncated(int hi) const;
    /* exponents and window doubled: a rho-series viewed in rho^{1/2} */
    LaurentSeries1 to_half() const;
    /* needs even support; throws std::domain_error otherwise */
    LaurentSeries1 to_rho() const;
    /* lowest exponent with a non-zero coefficient, or INT_MIN when none is known */
    int valuation() const;
    mpf_class eval(const mpf_class& x) const;
    std::string str(int terms = 8) const;
    nlohmann::json to_json() const;

    LaurentSeries1& operator+=(const LaurentSeries1& o);
    friend LaurentSeries1 operator+(LaurentSeries1 a, const LaurentSeries1& b) { return a += b; }
    friend LaurentSeries1 operator*(const LaurentSeries1& a, const LaurentSeries1& b);
    LaurentSeries1 scaled(const BigRational& v) const;
    LaurentSeries1 shifted(int e) const;
};

/* keeps the rho-exponents congruent to c mod n */
LaurentSeries1 u_operator(const LaurentSeries1& f, int n, int c);

/* R_1 = (rho;rho)^-11 and R_2 = (rho;rho)^-8 (rho;rho^2)^-6 (1 - 1/rho)^-7
 * through rho^hi */
LaurentSeries1 r_n_series(int n, int hi);

/* the root alpha in Phi_n and a word for w_alpha with w_alpha alpha = alpha5:
 * alpha5 and the identity for n = 1, -alpha4 + delta and s4 t for n = 2 */
Root phi_n_alpha(int n);
const std::vector<int>& w_alpha_word(int n);

/* (f^{e,e}, f^{e,o}, f^{o,e}) of f_w = (1 + u x5)||w at a rational point */
std::array<BigRational, 3> f_w_parity_eval(const std::vector<int>& word, const std::array<BigRational, 5>& x,
                                           const BigRational& u);
/* the same triple at x̄ = 1, x5 = s^x5pow, u = s^upow as series in s = rho^{1/2}
 * through s^hi; throws std::domain_error on a pole */
std::array<LaurentSeries1, 3> f_w_parity_formal(const std::vector<int>& word, int x5pow, int upow, int hi);

/* S_n(D,u) as a series in rho^{1/2}, rho = u^{-2/n}, through rho^{hi/2} */
LaurentSeries1 s_n_series(int D, int n, int hi);

/* f_{s4 t}(1, rho^{1/2}; rho^-1) against the closed triple, and u-parities
 * (even, odd, odd) of the components for a few words */
CheckReport f_w_triple_check(int hi);
/* sign (-1)^{floor(n/2)}, rho-valuation at least 3 floor(n/2) floor((n+1)/2)
 * (attained for some D) and
 * constant sign of the coefficients of S_n for every class of D */
CheckReport leading_term_check(int n, int hi);
/* coefficient of prod t_i^7 in prod e^{-t_i} prod_{i<j} (t_i - t_j)^2 (t_i + t_j) */
BigRational kernel_constant();

/* Q_n(D,q) from the iterated residue at z = 1 of the integral representation,
 * with coefficients in R[zeta]/(zeta^4 - 1) evaluated in binary floating point */
class QnEvaluator {
public:
    /* cutoff 0 picks the Pochhammer cutoff per family automatically */
    QnEvaluator(int n, const BigRational& q, int cutoff = 0);
    ~QnEvaluator();
    QnEvaluator(QnEvaluator&&) noexcept;

    int n() const;
    const BigRational& q() const;
    mpf_class q_n(int D) const;
    /* I_{n,zeta}(D) as coefficients of zeta^0..zeta^3 */
    std::array<mpf_class, 4> i_n(int D) const;
    /* log10 of the bound on the dropped Pochhammer factors' log-series coefficients */
    double log10_tail() const;
    /* R_{n,zeta}(1) and f^{e}, f^{o} at z = 1 as zeta-coefficients */
    std::array<mpf_class, 4> r_at_one() const;
    std::array<mpf_class, 4> f_at_one(int parity) const;
    /* largest zeta-odd coefficient of R_{n,zeta} near 1, relative to the largest */
    double zeta_parity_defect() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

struct QnFit {
    int n = 0, residue = 0, modulus = 0;
    std::vector<int> Ds;
    std::vector<mpf_class> values;
    std::vector<mpf_class> coeffs; /* in D, constant term first */
    mpf_class lead;
    /* relative mismatch of the fitted polynomial at one extra D */
    double reproduce_log10 = 0;
    nlohmann::json to_json() const;
};
/* fits Q_n on D = residue + modulus j, with modulus 2n and degree 10 or 7 */
QnFit q_n_fit(const QnEvaluator& ev, int residue);
/* closed leading coefficient: D^10 S_1/(2^4 prod (2j)!/(4+j)!) or D^7 S_2/(7! 2^7) */
mpf_class q_n_leading_closed(int n, int D, const BigRational& q, int hi);
/* the fit reproduces a further value, its top coefficient matches the closed
 * leading coefficient, I_{n,-zeta} = (-1)^D I_{n,zeta} and R_{n,zeta}(1) = R_n(rho/zeta^2) */
CheckReport q_n_check(int n, const BigRational& q);

/* h as a ratio of polynomials in z1, z2 */
using Poly2 = std::map<std::pair<int, int>, BigRational>;
struct SymSumParams {
    BigRational a1, a2;
    int m = 0;
    Poly2 hnum{{{0, 0}, BigRational(1)}};
    Poly2 hden{{{0, 0}, BigRational(1)}};
};
struct SymSumValue {
    BigRational lhs, rhs;
};
/* both sides of the r = 2 integral lemma, the right side as a sum of iterated
 * residues at the poles a_j^{+-1}; throws std::invalid_argument on degenerate a */
SymSumValue sym_sum_values(const SymSumParams& p);
CheckReport sym_sum_residue_check(const std::vector<SymSumParams>& params);
const std::vector<SymSumParams>& default_sym_sum_params();

}
