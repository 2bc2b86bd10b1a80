#include <doctest.h>

#include "cgd4/ffield.hpp"

#include <random>

using namespace cgd4;

namespace {

const DiagonalSlices& slices8() {
    static const DiagonalSlices s = diagonal_slices(8);
    return s;
}

FqPoly P(std::vector<long> c) { return FqPoly(std::move(c)); }

}

TEST_CASE("F_q validation and arithmetic") {
    for (long bad : {2L, 3L, 7L, 9L, 21L, 25L}) CHECK_THROWS_AS(Fq{bad}, std::invalid_argument);
    Fq F(13);
    CHECK(F.mul(F.inv(5), 5) == 1);
    CHECK(F.legendre(4) == 1);
    CHECK(F.legendre(2) == -1);
    CHECK(F.legendre(-1) == 1); /* q = 1 mod 4 */
    CHECK_THROWS_AS(F.inv(0), std::domain_error);

    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        std::vector<long> a(1 + rng() % 7), b(1 + rng() % 4);
        for (auto& v : a) v = rng() % 13;
        for (auto& v : b) v = rng() % 13;
        FqPoly A(a), B(b);
        if (B.is_zero()) continue;
        FqPoly q, r;
        divmod(F, A, B, q, r);
        CHECK(add(F, mul(F, q, B), r) == A);
        CHECK(r.degree() < B.degree());
        FqPoly g = gcd(F, A, B);
        if (!A.is_zero()) {
            CHECK(mod(F, A, g).is_zero());
            CHECK(mod(F, B, g).is_zero());
        }
    }
    CHECK(derivative(F, P({1, 2, 3})) == P({2, 6}));
    CHECK_THROWS_AS(mod(F, P({1}), FqPoly()), std::domain_error);
}

TEST_CASE("squarefree decomposition") {
    Fq F(5);
    /* (x+1)^5 has zero derivative */
    FqPoly x1 = P({1, 1}), x2 = P({2, 1});
    FqPoly f = P({1, 0, 0, 0, 0, 1});
    auto parts = squarefree_decomposition(F, f);
    REQUIRE(parts.size() == 5);
    CHECK(parts[4] == x1);
    CHECK(!is_squarefree(F, f));

    FqPoly g = mul(F, mul(F, mul(F, x1, x1), x2), mul(F, x2, x2)); /* (x+1)^2 (x+2)^3 */
    auto s = squarefree_split(F, g);
    CHECK(s.d0 == x2);
    CHECK(s.d1 == mul(F, x1, x2));

    std::mt19937 rng(5);
    for (int t = 0; t < 200; ++t) {
        FqPoly d = FqPoly::monic_from_index(F, 1 + rng() % 12, rng() % 244140625);
        auto sp = squarefree_split(F, d);
        CHECK(is_squarefree(F, sp.d0));
        CHECK(mul(F, sp.d0, mul(F, sp.d1, sp.d1)) == d);
    }
}

TEST_CASE("irreducibles and factorization") {
    for (long q : {5L, 13L}) {
        Fq F(q);
        IrreducibleTable T(F);
        int top = q == 5 ? 4 : 2;
        T.ensure(top);
        for (int n = 1; n <= top; ++n) CHECK(long(T.of_degree(n).size()) == count_irreducibles(q, n));
        CHECK_THROWS_AS(T.of_degree(top + 1), std::out_of_range);
        std::mt19937 rng(7);
        for (int t = 0; t < 100; ++t) {
            FqPoly d = FqPoly::monic_from_index(F, 1 + rng() % (2 * top), rng());
            FqPoly prod = FqPoly::constant(1);
            for (auto& pp : factor(d, T))
                for (int i = 0; i < pp.l; ++i) prod = mul(F, prod, pp.p);
            CHECK(prod == d);
        }
    }
    CHECK(count_irreducibles(5, 4) == 150);
}

TEST_CASE("quadratic symbol") {
    Fq F(5);
    /* Euler: x^{(5-1)/2} = x^2 = 1 mod x+1 */
    CHECK(quad_symbol(F, FqPoly::x(), P({1, 1})) == 1);
    CHECK(quad_symbol_euler(F, FqPoly::x(), P({1, 1})) == 1);
    /* chi_d(1) = 1 */
    CHECK(quad_symbol(F, FqPoly::x(), FqPoly::constant(1)) == 1);
    CHECK(quad_symbol(F, FqPoly(), FqPoly::constant(1)) == 1);
    /* constant rule: 2 is not a square mod 5 */
    CHECK(quad_symbol(F, FqPoly::constant(2), P({0, 1})) == -1);
    CHECK(quad_symbol(F, FqPoly::constant(2), P({1, 0, 1})) == 1);
    CHECK(quad_symbol(F, P({1, 1}), mul(F, P({1, 1}), P({2, 1}))) == 0);
    CHECK_THROWS_AS(quad_symbol(F, FqPoly::x(), P({1, 2})), std::invalid_argument);
    for (long q : {5L, 13L}) {
        auto rep = quad_symbol_check(q, 3, 11);
        CHECK_MESSAGE(rep.pass, rep.first_failure);
        CHECK(rep.compared > 300);
    }
}

TEST_CASE("L-functions") {
    Fq F(5);
    auto z = l_function(F, FqPoly::constant(1));
    CHECK(z.rational);
    SqrtQNumber one(5, 1), r5 = SqrtQNumber::sqrt_q(5);
    CHECK(z.at_half() == one / (one - r5));
    CHECK(l_function(F, P({3, 1})).c == std::vector<long long>{1});
    /* deg 2: c_1 = sum over a of chi(x + a) */
    FqPoly d0 = P({2, 0, 1});
    long long c1 = 0;
    for (long a = 0; a < 5; ++a) c1 += quad_symbol(F, d0, P({a, 1}));
    auto L = l_function(F, d0);
    REQUIRE(L.c.size() == 2);
    CHECK(L.c[1] == c1);
    CHECK(L.c == l_function(F, d0, true).c);
    CHECK_THROWS_AS(l_function(F, mul(F, P({1, 1}), P({1, 1}))), std::invalid_argument);
    for (long q : {5L, 13L}) {
        auto rep = l_function_check(q, q == 5 ? 4 : 3);
        CHECK_MESSAGE(rep.pass, rep.first_failure);
    }
}

TEST_CASE("correction polynomials P_d") {
    const auto& s = slices8();
    Fq F(5);
    IrreducibleTable T(F);
    SqrtQNumber r5 = SqrtQNumber::sqrt_q(5), one(5, 1);
    /* squarefree: |d|^{-1/2} */
    CHECK(p_d_correction(F, P({1, 2, 0, 1}), s, T) == one / r5.pow(3));
    /* d = (x+1)^2: d0 = 1, P_2(1;5^{-1/2}) */
    FqPoly sq = mul(F, P({1, 1}), P({1, 1}));
    CHECK(p_d_correction(F, sq, s, T) == eval_upoly(s.p_at(2, 1), one / r5));
    /* d = x^2 (x+2): chi_{x+2}(x) = (2/5) = -1 */
    FqPoly d = mul(F, mul(F, FqPoly::x(), FqPoly::x()), P({2, 1}));
    CHECK(p_d_correction(F, d, s, T) == eval_upoly(s.p_at(2, -1), one / r5) / r5);
    for (long q : {5L, 13L}) {
        auto rep = p_d_positivity_check(q, q == 5 ? 4 : 3, s);
        CHECK_MESSAGE(rep.pass, rep.first_failure);
    }
    auto small = diagonal_slices(2);
    CHECK_THROWS_AS(p_d_correction(F, P({0, 0, 0, 1}), small, T), std::out_of_range);
}

TEST_CASE("moment identity") {
    const auto& s = slices8();
    CHECK(moment_bruteforce(5, 1, s) == SqrtQNumber::sqrt_q(5));
    CHECK(moment_bruteforce(13, 1, s) == SqrtQNumber::sqrt_q(13));
    CHECK(moment_via_series(5, 1, s) == SqrtQNumber::sqrt_q(5));
    for (long q : {5L, 13L}) {
        auto rep = moment_identity_check(q, 3, s, 2);
        CHECK_MESSAGE(rep.pass, rep.first_failure);
    }
    /* extended tier */
    CHECK(moment_bruteforce(5, 4, s, 1) == moment_via_series(5, 4, s));
    CHECK(moment_bruteforce(5, 4, s, 3) == moment_bruteforce(5, 4, s, 1));
    CHECK_THROWS_AS(moment_via_series(5, 9, s), std::out_of_range);
    CHECK_THROWS_AS(moment_bruteforce(7, 1, s), std::invalid_argument);
    CHECK(moment_cost(5, 4) == 625.0 * 6);
}

TEST_CASE("asymptotic comparison table") {
    const auto& s = slices8();
    auto t = asym_compare(5, 3, 8, 2, 0.4, s);
    REQUIRE(t.rows.size() == 6);
    CHECK(t.C > 4.8e14);
    CHECK(t.C < 5.0e14);
    /* q = 5 is pre-asymptotic: the main terms dwarf the exact moments */
    CHECK_FALSE(t.non_increasing);
    for (auto& r : t.rows) CHECK(r.normalized < 0);
    CHECK(t.rows[0].exact == SqrtQNumber(5, 0, 210));
    CHECK(t.to_csv().find("D,q,exact") == 0);
    CHECK(t.to_json()["rows"].size() == 6);
    CHECK_THROWS_AS(asym_compare(5, 3, 8, 2, 0.6, s), std::invalid_argument);
    CHECK_THROWS_AS(asym_compare(5, 3, 8, 3, 0.3, s), std::invalid_argument);
    auto t1 = asym_compare(13, 1, 2, 1, 0, s);
    CHECK(t1.theta == doctest::Approx(0.75));
    CHECK(t1.rows[0].exact == SqrtQNumber::sqrt_q(13));
}
