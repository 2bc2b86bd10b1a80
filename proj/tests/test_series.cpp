#include <doctest.h>

#include "cgd4/series.hpp"
#include "cgd4/sqrtq.hpp"

#include <random>

using namespace cgd4;

namespace {

Monomial X(int i, int e = 1) {
    Monomial m{};
    m[i - 1] = e;
    return m;
}

TruncSeries random_series(std::mt19937& rng, int order, int terms) {
    TruncSeries s(5, order);
    std::uniform_int_distribution<int> e(0, 2), c(-3, 3), ud(0, 2);
    for (int t = 0; t < terms; ++t) {
        Monomial m{e(rng), e(rng), e(rng), e(rng), e(rng)};
        s.add_term(m, UPoly::monomial(c(rng), ud(rng)));
    }
    return s;
}

}

TEST_CASE("rational fast path and promotion") {
    BigRational a(INT64_MAX - 1), b(5);
    BigRational c = a * b;
    CHECK(!c.is_small());
    CHECK((c / b) == a);
    CHECK((c / b).is_small());
    CHECK(BigRational(6, -4) == BigRational(-3, 2));
    CHECK(BigRational::parse("-12/8") == BigRational(-3, 2));
    CHECK((BigRational(1, 3) + BigRational(1, 6)) == BigRational(1, 2));
    BigRational big = BigRational(3).pow(80);
    CHECK(big.str() == "147808829414345923316083210206383297601");
    CHECK((big - big).is_zero());
}

TEST_CASE("simplex index is a graded bijection") {
    for (int nv : {4, 5}) {
        auto ix = SimplexIndex::get(nv, 7);
        for (size_t r = 0; r < ix->size(); ++r) {
            CHECK(ix->rank(ix->monomial(r)) == r);
            if (r) CHECK(ix->degree(r) >= ix->degree(r - 1));
        }
    }
}

TEST_CASE("mul_trunc examples") {
    TruncSeries a = series_one(2), b = series_one(2);
    a.add_term(X(1), 1);
    b.add_term(X(1), -1);
    TruncSeries expect = series_one(2);
    expect.add_term(X(1, 2), -1);
    CHECK(mul_trunc(a, b) == expect);

    TruncSeries g(5, 6);
    for (int m = 0; m <= 6; ++m) g.add_term(X(5, m), UPoly::monomial(1, m));
    TruncSeries f = series_one(6);
    f.add_term(X(5), UPoly::monomial(-1, 1));
    CHECK(mul_trunc(g, f) == series_one(6));
    CHECK(mul_trunc(g, series_one(6)) == g);
}

TEST_CASE("ring laws on random inputs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        auto a = random_series(rng, 5, 6), b = random_series(rng, 5, 6), c = random_series(rng, 5, 6);
        CHECK(mul_trunc(mul_trunc(a, b), c) == mul_trunc(a, mul_trunc(b, c)));
        CHECK(mul_trunc(a, b + c) == mul_trunc(a, b) + mul_trunc(a, c));
        CHECK(mul_trunc(a, b) == mul_trunc(b, a));
    }
}

TEST_CASE("invert_unit") {
    TruncSeries s = series_one(4);
    s.add_term(X(5), UPoly::monomial(-1, 1));
    TruncSeries inv = invert_unit(s);
    TruncSeries expect(5, 4);
    for (int m = 0; m <= 4; ++m) expect.add_term(X(5, m), UPoly::monomial(1, m));
    CHECK(inv == expect);
    CHECK(invert_unit(series_one(3)) == series_one(3));

    TruncSeries t(5, 2);
    t.add_term(X(1, 0), 2);
    t.add_term(X(1), -1);
    TruncSeries e2(5, 2);
    e2.add_term(X(1, 0), BigRational(1, 2));
    e2.add_term(X(1), BigRational(1, 4));
    e2.add_term(X(1, 2), BigRational(1, 8));
    CHECK(invert_unit(t) == e2);

    TruncSeries bad(5, 2);
    bad.add_term(X(1, 0), UPoly::u());
    CHECK_THROWS(invert_unit(bad));
}

TEST_CASE("expand_factor_list") {
    TruncSeries e = expand_factor_list({{1, 2, X(1, 2)}}, 4);
    TruncSeries expect = series_one(4);
    expect.add_term(X(1, 2), UPoly::monomial(1, 2));
    expect.add_term(X(1, 4), UPoly::monomial(1, 4));
    CHECK(e == expect);
    CHECK(expand_factor_list({}, 3) == series_one(3));

    TruncSeries pair = expand_factor_list({{1, 1, X(1)}, {-1, 1, X(1)}}, 6);
    TruncSeries q = series_one(6);
    q.add_term(X(1, 2), UPoly::monomial(-1, 2));
    CHECK(pair == invert_unit(q));
    CHECK_THROWS(expand_factor_list({{1, 0, Monomial{}}}, 3));

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> ex(0, 2), sg(0, 1), up(0, 2);
    for (int trial = 0; trial < 5; ++trial) {
        FactorList fl;
        for (int k = 0; k < 4; ++k) {
            Monomial m{ex(rng), ex(rng), ex(rng), ex(rng), ex(rng)};
            if (total_degree(m) == 0) m[0] = 1;
            fl.push_back({sg(rng) ? 1 : -1, up(rng), m});
        }
        CHECK(mul_trunc(expand_factor_list(fl, 6), expand_product(fl, 6)) == series_one(6));
    }
}

TEST_CASE("twist_signs") {
    TruncSeries s = series_one(3);
    s.add_term(X(1), 1);
    s.add_term(X(5), 1);
    TruncSeries t = twist_signs(s, Twist::Eps5);
    CHECK(t.coeff(X(1)) == UPoly(-1));
    CHECK(t.coeff(X(5)) == UPoly(1));
    CHECK(twist_signs(twist_signs(s, Twist::Eps1), Twist::Eps1) == s);

    /* exhaustive parity table: eps1 eps5 multiplies by (-1)^(k5 + |kbar|) */
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            Monomial m{a, 0, 0, 0, b};
            TruncSeries one = series_monomial(3, m, 1);
            TruncSeries both = twist_signs(twist_signs(one, Twist::Eps1), Twist::Eps5);
            CHECK(both.coeff(m) == UPoly((a + b) % 2 ? -1 : 1));
        }
}

TEST_CASE("sqrtq and specialize") {
    SqrtQNumber r5 = SqrtQNumber::sqrt_q(5);
    CHECK(r5 * r5 == SqrtQNumber(5, 5));
    CHECK((SqrtQNumber(5, 1) / (SqrtQNumber(5, 1) - r5)) * (SqrtQNumber(5, 1) - r5) == SqrtQNumber(5, 1));
    CHECK(SqrtQNumber(5, 2, -1).sign() == -1);
    CHECK(SqrtQNumber(5, 3, -1).sign() == 1);

    TruncSeries s = series_one(2);
    s.add_term(X(5), UPoly::u());
    std::array<BigRational, 5> pt{1, 1, 1, 1, 1};
    CHECK(specialize(s, pt, r5, 1) == SqrtQNumber(5, 1, 1));
    TruncSeries u2 = series_monomial(1, Monomial{}, UPoly::monomial(1, 2));
    CHECK(specialize(u2, pt, r5, 0) == SqrtQNumber(5, 5));
    CHECK_THROWS(specialize(s, pt, r5, 3));
}

TEST_CASE("json round trip") {
    std::mt19937 rng(11);
    auto a = random_series(rng, 4, 8);
    a.add_term(X(2), UPoly(BigRational(-7, 3)));
    CHECK(series_from_json(series_to_json(a)) == a);
    CHECK_THROWS(series_from_json("{\"order\":1,\"terms\":[{\"k\":[2,0,0,0,0],\"u\":[\"1\"]}]}"));
}
