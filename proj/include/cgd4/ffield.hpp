#pragma once

#include "cgd4/report.hpp"
#include "cgd4/residue.hpp"
#include "cgd4/sqrtq.hpp"

#include <gmpxx.h>

#include <vector>

namespace cgd4 {

/* the prime field F_q, q prime with q = 1 mod 4; elements are longs in [0, q) */
class Fq {
public:
    explicit Fq(long q);
    long q() const noexcept { return q_; }
    long reduce(long a) const { a %= q_; return a < 0 ? a + q_ : a; }
    long add(long a, long b) const { return (a + b) % q_; }
    long sub(long a, long b) const { return (a - b + q_) % q_; }
    long mul(long a, long b) const { return (a * b) % q_; }
    long neg(long a) const { return a ? q_ - a : 0; }
    long pow(long a, long e) const;
    long inv(long a) const; /* throws std::domain_error on 0 */
    /* 1 for a non-zero square, -1 for a non-square, 0 for 0 */
    int legendre(long a) const;

private:
    long q_;
};

/* coefficients over F_q, constant term first, no trailing zeros */
struct FqPoly {
    std::vector<long> c;

    FqPoly() = default;
    explicit FqPoly(std::vector<long> coeffs);
    static FqPoly constant(long a) { return FqPoly({a}); }
    static FqPoly x() { return FqPoly({0, 1}); }
    /* the index-th monic polynomial of degree deg: index written in base q
     * gives the lower coefficients */
    static FqPoly monic_from_index(const Fq& F, int deg, long index);

    int degree() const { return int(c.size()) - 1; } /* -1 for zero */
    bool is_zero() const { return c.empty(); }
    long lead() const { return c.empty() ? 0 : c.back(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    std::string str() const;
    friend bool operator==(const FqPoly&, const FqPoly&) = default;
    friend auto operator<=>(const FqPoly&, const FqPoly&) = default;
};

FqPoly add(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly sub(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly mul(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly scale(const Fq& F, const FqPoly& a, long s);
/* throws std::domain_error on division by zero */
void divmod(const Fq& F, const FqPoly& a, const FqPoly& b, FqPoly& quo, FqPoly& rem);
FqPoly mod(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly monic(const Fq& F, const FqPoly& a);
/* monic gcd; gcd(0, 0) = 0 */
FqPoly gcd(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly derivative(const Fq& F, const FqPoly& a);
FqPoly pow_mod(const Fq& F, const FqPoly& a, const mpz_class& e, const FqPoly& m);

/* d = lead * prod a_i^i with a_i monic, squarefree and pairwise coprime;
 * parts[i-1] = a_i, trailing ones dropped */
std::vector<FqPoly> squarefree_decomposition(const Fq& F, const FqPoly& d);
bool is_squarefree(const Fq& F, const FqPoly& d);
/* d = lead * d0 * d1^2 with d0 squarefree, d0 and d1 monic */
struct SquarefreeSplit {
    FqPoly d0, d1;
};
SquarefreeSplit squarefree_split(const Fq& F, const FqPoly& d);

/* monic irreducibles of F_q[x] by degree, built on demand */
class IrreducibleTable {
public:
    explicit IrreducibleTable(const Fq& F) : F_(F) {}
    /* not thread-safe; call before sharing the table */
    void ensure(int deg);
    /* throws std::out_of_range for a degree not yet built */
    const std::vector<FqPoly>& of_degree(int deg) const;
    int max_degree() const { return int(by_deg_.size()) - 1; }
    const Fq& field() const { return F_; }

private:
    Fq F_;
    std::vector<std::vector<FqPoly>> by_deg_{{}};
};
/* number of monic irreducibles of degree n, (1/n) sum_{e|n} mu(e) q^{n/e} */
long count_irreducibles(long q, int n);

struct PrimePower {
    FqPoly p;
    int l = 0;
};
/* factorization of a monic polynomial by trial division; the table must
 * already hold all degrees up to deg d / 2 */
std::vector<PrimePower> factor(const FqPoly& d, const IrreducibleTable& table);

/* (d/m) for monic m, by reciprocity (q = 1 mod 4) and the constant rule
 * (c/m) = sgn(c)^{deg m}; (d/1) = 1 */
int quad_symbol(const Fq& F, const FqPoly& d, const FqPoly& m);
/* Euler criterion d^{(|m|-1)/2} mod m for irreducible monic m */
int quad_symbol_euler(const Fq& F, const FqPoly& d, const FqPoly& m);

/* L(s, chi_d0) as a polynomial in T = q^{-s} */
struct LFunctionPoly {
    long q = 0;
    /* constant d0: L = 1/(1 - sgn q T) and c is empty */
    bool rational = false;
    int sgn = 1;
    std::vector<long long> c;

    /* value at s = 1/2 */
    SqrtQNumber at_half() const;
    nlohmann::json to_json() const;
};
/* d0 squarefree, monic unless constant. c_n for n <= (deg d0 - 1)/2 by direct
 * summation, the rest by the functional equation; direct = true sums every
 * coefficient. Throws std::invalid_argument when d0 is not squarefree. */
LFunctionPoly l_function(const Fq& F, const FqPoly& d0, bool direct = false);

/* P_d(chi_d0) at s' = 0: odd l contribute P_l(1;q^{-deg p/2}), even l
 * P_l(chi_d0(p);q^{-deg p/2}). Throws std::out_of_range when some P_l is missing. */
SqrtQNumber p_d_correction(const Fq& F, const FqPoly& d, const DiagonalSlices& slices, IrreducibleTable& table);
SqrtQNumber p_d_correction(const Fq& F, const std::vector<PrimePower>& fac, const FqPoly& d0,
                           const DiagonalSlices& slices);

/* number of symbol evaluations moment_bruteforce spends on degree D */
double moment_cost(long q, int D);
/* sum over monic d of degree D of L(1/2, chi_d0)^4 P_d(chi_d0), exactly */
SqrtQNumber moment_bruteforce(long q, int D, const DiagonalSlices& slices, int jobs = 1);
/* Coeff_{xi^D} Z~(1,xi;sqrt q): P_D(1;sqrt q)/(1 - sqrt q)^4 for even D, P_D(1;sqrt q) for odd D */
SqrtQNumber moment_via_series(long q, int D, const DiagonalSlices& slices);

struct AsymRow {
    int D = 0;
    SqrtQNumber exact;
    mpf_class predicted, residual;
    double normalized = 0; /* residual q^{-D theta/2} */
};
struct AsymTable {
    long q = 0;
    int n_terms = 0;
    double theta = 0;
    std::vector<AsymRow> rows;
    double C = 0; /* max |normalized| */
    bool non_increasing = true; /* |normalized| along D */

    nlohmann::json to_json() const;
    std::string to_csv() const;
};
/* exact moments against sum_{n <= N} Q_n(D,q) q^{D/2n}; theta must lie in
 * (1/(N+1), 1/N), 0 picks the midpoint */
AsymTable asym_compare(long q, int Dlo, int Dhi, int N, double theta, const DiagonalSlices& slices);

/* small fixed-size checks */
CheckReport quad_symbol_check(long q, int maxdeg, unsigned seed);
CheckReport l_function_check(long q, int maxdeg);
CheckReport p_d_positivity_check(long q, int maxdeg, const DiagonalSlices& slices);
CheckReport moment_identity_check(long q, int Dmax, const DiagonalSlices& slices, int jobs);

}
