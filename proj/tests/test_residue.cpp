#include <doctest.h>

#include "cgd4/residue.hpp"

using namespace cgd4;

namespace {

Monomial X(int i, int e = 1) {
    Monomial m{};
    m[i - 1] = e;
    return m;
}

const SlicePolynomials& slices16() {
    static const SlicePolynomials s = extract_slices(z_tilde(16), 3);
    return s;
}

}

TEST_CASE("closed form of R") {
    ResidueSeries r = residue_closed_form(8);
    CHECK(r.coeff(Monomial{}) == LaurentPoly(1));
    CHECK(r.coeff(X(1) + X(2)) == LaurentPoly(1));
    CHECK(r.coeff(X(3, 2)) == LaurentPoly(1));
    r.for_each([](const Monomial& m, const LaurentPoly&) { CHECK(xbar_degree(m) % 2 == 0); });
    auto sc = residue_scaled(r);
    CHECK(sc.coeff(X(1) + X(2)) == UPoly::monomial(1, 2));
}

TEST_CASE("slice polynomials") {
    const auto& s = slices16();
    CHECK(s.kmax == 8);
    CHECK(s.p_at(1, 1) == UPoly::u());
    auto rep = slice_structure_check(s);
    CHECK_MESSAGE(rep.pass, rep.first_failure);
    CHECK(rep.compared > 50);
    CHECK_THROWS_AS(extract_slices(z_tilde(8), 2), std::invalid_argument);
    CHECK_THROWS_AS(s.p(7), std::out_of_range);
    CHECK(s.to_json()["P"].contains("2"));
}

TEST_CASE("residue from slices matches the closed form") {
    const auto& s = slices16();
    auto rep = residue_consistency_check(s, 8);
    CHECK_MESSAGE(rep.pass, rep.first_failure);
    auto fac = residue_factor_check(s, 8);
    CHECK_MESSAGE(fac.pass, fac.first_failure);

    /* a perturbed slice is caught */
    SlicePolynomials bad = s;
    bad.Q[X(1) + X(2)][1] += UPoly(1);
    CHECK_FALSE(residue_consistency_check(bad, 8).pass);
}

TEST_CASE("positivity of P_l at 1") {
    auto rep = positivity_check(slices16(), 30);
    CHECK_MESSAGE(rep.pass, rep.first_failure);
    SlicePolynomials bad = slices16();
    bad.P[1][Monomial{}] = UPoly(-1);
    CHECK_FALSE(positivity_check(bad, 30).pass);
}

TEST_CASE("Macdonald identity and u = -1") {
    auto m = macdonald_check(12);
    CHECK_MESSAGE(m.pass, m.first_failure);
    auto u = u_minus_one_check(8);
    CHECK_MESSAGE(u.pass, u.first_failure);
}

TEST_CASE("lambda_t functional equation") {
    auto rep = lambda_t_check(default_lambda_t_samples(), 40);
    CHECK_MESSAGE(rep.pass, rep.first_failure);
    CHECK(rep.compared == 6);
    CHECK(lambda_t(default_lambda_t_samples()[0].x, 0) == BigRational(1));
    /* swapping x1 and x2 is a symmetry of both sides */
    auto s = default_lambda_t_samples()[1];
    auto a = residue_value(s.x, s.u, 20);
    std::swap(s.x[0], s.x[1]);
    CHECK(residue_value(s.x, s.u, 20).value == a.value);
    CHECK_THROWS_AS(residue_value({BigRational(2), BigRational(2), BigRational(2), BigRational(2)}, 1, 10),
                    std::domain_error);
}

TEST_CASE("C_{alpha,zeta}") {
    CHECK(word_to_alpha5(X(5)).empty());
    CHECK(word_to_alpha5(X(1) + X(5)) == std::vector<int>{1});
    ResidueSeries r = residue_closed_form(6);
    ResidueSeries c1 = c_alpha_zeta(X(5), 1, 6);
    CHECK(c1 == r);
    CHECK(c_alpha_zeta(X(5), -1, 6).is_zero());
    CHECK_NOTHROW(c_alpha_zeta(X(1) + X(5), 1, 6));
    CHECK_THROWS_AS(c_alpha_zeta(X(1), 1, 6), std::invalid_argument);

    for (const Root& a : {X(5), X(1) + X(5), X(1) + X(2) + X(5)}) {
        auto rep = c_alpha_dual_route_check(a, 6, 5);
        CHECK_MESSAGE(rep.pass, rep.first_failure);
        CHECK(rep.compared > 10);
    }
}

TEST_CASE("clearance of z_tilde") {
    auto rep = clearance_check(z_tilde(12));
    CHECK_MESSAGE(rep.pass, rep.first_failure);
}

TEST_CASE("diagonal slices from the specialized kernel") {
    auto full = extract_slices(z_tilde(16), 3);
    auto d = diagonal_slices(5);
    auto rep = diagonal_slices_check(full, d);
    CHECK_MESSAGE(rep.pass, rep.first_failure);
    CHECK(rep.compared > 20);
    CHECK(d.p_at(1, 1) == UPoly::u());
    CHECK(d.p_at(3, 1) == full.p_at(3, 1));
    CHECK(d.p_at(2, -1) == full.p_at(2, -1));
    CHECK(d.to_json()["P"].contains("5"));

    /* cells with a + b <= 16 agree with the full series */
    auto spec = specialize_diagonal(z_tilde(16), 5, 12);
    auto dd = z_tilde_diagonal(5, 12);
    for (int b = 0; b <= 5; ++b)
        for (int a = 0; a + b <= 16 && a <= 12; ++a) CHECK(spec.at(a, b) == dd.at(a, b));
    CHECK_THROWS_AS(diagonal_slices(dd, 5), std::invalid_argument);
}
