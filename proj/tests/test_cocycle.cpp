#include <doctest.h>

#include "cgd4/cocycle.hpp"

using namespace cgd4;

namespace {

Monomial X(int i, int e = 1) {
    Monomial m{};
    m[i - 1] = e;
    return m;
}

}

TEST_CASE("parity_decompose on monomials") {
    auto one = parity_decompose(series_one(4));
    CHECK(one.ee == series_one(4));
    CHECK(one.eo.is_zero());
    CHECK(one.oe.is_zero());

    auto p5 = parity_decompose(series_monomial(4, X(5), UPoly(1)));
    CHECK(p5.eo == series_monomial(4, X(5), UPoly(1)));
    CHECK(p5.ee.is_zero());
    auto p1 = parity_decompose(series_monomial(4, X(1), UPoly(1)));
    CHECK(p1.oe == series_monomial(4, X(1), UPoly(1)));

    TruncSeries oo = series_monomial(4, Monomial{1, 0, 0, 0, 1}, UPoly(2));
    CHECK_THROWS_AS(parity_decompose(oo, true), std::invalid_argument);
    CHECK(parity_decompose(oo).sum().is_zero());
    CHECK(oo_part(oo) == oo);
}

TEST_CASE("o,o part of z_tilde vanishes") {
    TruncSeries zt = z_tilde(12);
    CHECK_NOTHROW(parity_decompose(zt, true));
    CHECK(oo_vanishing_check(zt).pass);
    CHECK(parity_decompose(zt).sum() == zt);
}

TEST_CASE("structure axioms of z_tilde") {
    TruncSeries zt = z_tilde(12);
    auto rep = axioms_check(zt);
    CHECK_MESSAGE(rep.pass, rep.first_failure);
    CHECK(rep.compared > 10000);

    /* u^5 in degree 3 is above the weight bound */
    TruncSeries bad = zt;
    bad.add_term(X(1) + X(3) + X(5), UPoly::monomial(1, 5));
    auto r1 = axioms_check(bad);
    CHECK_FALSE(r1.pass);
    CHECK(r1.first_failure.find("weight") != std::string::npos);
    TruncSeries bad2 = zt;
    bad2.add_term(X(1) + X(5), UPoly::u());
    auto r2 = axioms_check(bad2);
    CHECK_FALSE(r2.pass);
    CHECK(r2.first_failure.find("o,o") != std::string::npos);
}

TEST_CASE("lambda_simple shape") {
    std::array<BigRational, 5> x{BigRational(2, 3), BigRational(-3, 5), BigRational(5, 7), BigRational(1, 4),
                                 BigRational(-7, 2)};
    for (int i = 1; i <= 5; ++i) {
        auto at0 = evaluate(lambda_simple(i), x, BigRational(0));
        BigRational xi = x[i - 1];
        int mid = i <= 4 ? 1 : 2;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                BigRational want = r != c ? BigRational(0) : r == mid ? -xi : -xi * xi;
                CHECK(at0[r][c] == want);
            }
        auto m = lambda_simple(i);
        int b = i <= 4 ? 2 : 1;
        CHECK(cg_equal(m[0][b], m[b][0]));
        CHECK(cg_equal(m[0][0], m[b][b]));
    }
    /* Lambda~ = -x_i^{-2} Lambda */
    auto t = evaluate(lambda_tilde_simple(3), x, BigRational(1, 3));
    auto l = evaluate(lambda_simple(3), x, BigRational(1, 3));
    CHECK(t[0][2] == -l[0][2] / (x[2] * x[2]));
    CHECK(t[1][1] == BigRational(1) / x[2]);
}

TEST_CASE("cocycle relations") {
    auto rep = cocycle_relation_check();
    CHECK_MESSAGE(rep.pass, rep.first_failure);
    CHECK(rep.compared == 20);
}

TEST_CASE("cocycle against the pointwise action") {
    auto rep = cocycle_pointwise_check(25, 11);
    CHECK_MESSAGE(rep.pass, rep.first_failure);
    CHECK(rep.compared == 100);
}

TEST_CASE("u-parity pattern of Lambda_w") {
    auto rep = lambda_parity_check(3);
    CHECK_MESSAGE(rep.pass, rep.first_failure);
    CHECK(rep.compared > 9 * 20);
    CHECK(lambda_entry_parity(0, 0) == 0);
    CHECK(lambda_entry_parity(0, 2) == 1);
    CHECK(lambda_entry_parity(1, 2) == 0);
}

TEST_CASE("B0/B1 recursion") {
    auto b1 = b1_matrix(6);
    CHECK(b1[1][0] == series_monomial(6, X(5), UPoly(1)));
    TruncSeries xb(5, 6);
    for (int j = 1; j <= 4; ++j) xb.add_term(X(j), UPoly(1));
    CHECK(b1[2][0] == xb);
    CHECK(b1[0][0].is_zero());
    CHECK(b1[0][1] == series_monomial(6, Monomial{1, 1, 1, 1, 1}, UPoly(1)));

    auto rep = b0_b1_recursion_check(10);
    CHECK_MESSAGE(rep.pass, rep.first_failure);

    /* a perturbed Z~ is caught with a witness */
    TruncSeries bad = z_tilde(8);
    bad.add_term(X(2), UPoly::u());
    auto rb = b0_b1_recursion_check(bad);
    CHECK_FALSE(rb.pass);
    CHECK(rb.first_failure.find("x2") != std::string::npos);
}

TEST_CASE("W-invariance of z_tilde") {
    auto rep = w_invariance_check(z_tilde(12));
    CHECK_MESSAGE(rep.pass, rep.first_failure);
    CHECK(rep.compared > 1000);

    /* breaking the symmetry in x1 alone fails */
    TruncSeries bad = z_tilde(8);
    bad.add_term(X(1, 2), UPoly(1));
    CHECK_FALSE(w_invariance_check(bad).pass);
}
