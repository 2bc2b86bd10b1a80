#pragma once

#include "cgd4/cg.hpp"
#include "cgd4/report.hpp"

#include <array>

namespace cgd4 {

/* (f^{e,e}, f^{e,o}, f^{o,e}): parity in |x̄-degree| (eps5) first, then in the
 * x5-degree (eps1) */
struct ParityVector {
    TruncSeries ee, eo, oe;

    TruncSeries& operator[](int k) { return k == 0 ? ee : k == 1 ? eo : oe; }
    const TruncSeries& operator[](int k) const { return k == 0 ? ee : k == 1 ? eo : oe; }
    TruncSeries sum() const { return ee + eo + oe; }
};

/* throws std::invalid_argument on a nonzero o,o part when claim_cg is set;
 * otherwise that part is dropped */
ParityVector parity_decompose(const TruncSeries& f, bool claim_cg = false);
/* the o,o projection, for reporting */
TruncSeries oo_part(const TruncSeries& f);

template <class T>
using Matrix3 = std::array<std::array<T, 3>, 3>;
using LambdaMatrix = Matrix3<CGTerm>;
using SeriesMatrix3 = Matrix3<TruncSeries>;

/* Lambda_{s_i}: bar(f|s_i)(x) = Lambda_{s_i}(x) bar f(s_i x) */
LambdaMatrix lambda_simple(int i);
/* -x_i^{-2} Lambda_{s_i}, the cocycle of the normalized action f||s_i */
LambdaMatrix lambda_tilde_simple(int i);
/* Lambda_w for the word i1..il (w = s_il ... s_i1), built by the cocycle relation */
LambdaMatrix lambda_word(const std::vector<int>& word);
LambdaMatrix lambda_tilde_word(const std::vector<int>& word);

/* f||s_i = -x_i^{-2} f|s_i, without the positivity check on denominators */
CGTerm norm_act_simple(const CGTerm& f, int i);
/* f||w = f||s_il||...||s_i1 */
CGTerm norm_act(const CGTerm& f, const std::vector<int>& word);
/* f_w = (1 + u x5)||w */
CGTerm f_w(const std::vector<int>& word);

LambdaMatrix identity3();
LambdaMatrix operator*(const LambdaMatrix& a, const LambdaMatrix& b);
/* entries evaluated at x |-> s_i x */
LambdaMatrix substitute(const LambdaMatrix& m, int i);
/* exact equality of rational functions (common denominator, numerator difference) */
bool cg_equal(const CGTerm& a, const CGTerm& b);
bool lambda_equal(const LambdaMatrix& a, const LambdaMatrix& b);
Matrix3<BigRational> evaluate(const LambdaMatrix& m, const std::array<BigRational, 5>& x, const BigRational& u);

/* the point s_i x, i.e. coordinates x^{s_i alpha_j} */
std::array<BigRational, 5> reflect_point(int i, const std::array<BigRational, 5>& x);

/* the u-parity of entry (r, c) is r' + c' mod 2 with weights (0, 1, 1) */
int lambda_entry_parity(int r, int c);

/* Coxeter relations s_i^2 = 1 and the braid relations, at the cocycle level */
CheckReport cocycle_relation_check();
/* bar(x^a|w) at random points vs Lambda_w(x) bar(x^a)(wx), via act_pointwise */
CheckReport cocycle_pointwise_check(int samples, unsigned seed);
/* u-parity pattern of Lambda_w for all words up to the given length */
CheckReport lambda_parity_check(int max_length);

/* the printed matrices B0 = E11 and B1 */
SeriesMatrix3 b0_matrix(int order);
SeriesMatrix3 b1_matrix(int order);

/* Z0 = (1,0,0), B0 = E11, Z1 = (I - x^delta B0)^{-1} B1 Z0, and the u^0, u^1
 * parts of Z(x;u) = B(x;u) Z(x; u x^delta), on a z_tilde series */
CheckReport b0_b1_recursion_check(const TruncSeries& zt);
CheckReport b0_b1_recursion_check(int order);

/* Z~ = Z~ || s_i for i = 1..5, as exact coefficient symmetries:
 * G = (1 - u x_i) Z~_i^+ is s_i-invariant and x_i Z~_i^-(x) = Z~_i^-(s_i x) */
CheckReport w_invariance_check(const TruncSeries& zt);
/* the o,o component of a CG-generated series vanishes */
CheckReport oo_vanishing_check(const TruncSeries& zt);
/* the structure axioms for a(k;u), the coefficients of Z~: o,o vanishing,
 * parity u^j with j = |k| mod 2, 2 <= j <= |k| for |k| > 1 (dominance and the
 * weight bound), and the generating functions a(k̄,0) = u^|k̄|, a(0̄,l) = u^l,
 * a(k̄,1) = u [k̄ = 0] */
CheckReport axioms_check(const TruncSeries& zt);

}
