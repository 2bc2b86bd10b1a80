#include "cgd4/cocycle.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace cgd4 {

namespace {

using Point = std::array<BigRational, 5>;

/* 0: x̄-parity, 1: x5-parity; component index ee=0, eo=1, oe=2, oo=3 */
int component_of(const Monomial& m) {
    int p = xbar_degree(m) & 1, q = m[4] & 1;
    return p && q ? 3 : p ? 2 : q ? 1 : 0;
}

Monomial unit(int i, int e = 1) {
    Monomial m{};
    m[i - 1] = e;
    return m;
}

BigRational mono_value(const Monomial& m, const Point& x) {
    BigRational v(1);
    for (int j = 0; j < 5; ++j) {
        if (m[j] >= 0) v *= x[j].pow(m[j]);
        else v /= x[j].pow(-m[j]);
    }
    return v;
}

CGTerm scalar_term(const Monomial& m, const UPoly& c) { return CGTerm::monomial(m, c); }

bool is_zero_term(const CGTerm& t) { return t.numerator.empty(); }

/* coefficient of u^k, as a series with constant coefficients */
TruncSeries u_coefficient(const TruncSeries& s, int k) {
    TruncSeries out(5, s.order());
    for (size_t r = 0; r < s.size(); ++r) {
        const UPoly& c = s.at(r);
        if (k <= c.degree() && !c[k].is_zero()) out.at(r) = UPoly(c[k]);
    }
    return out;
}

/* first monomial where two series differ, or empty */
std::string first_difference(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order()) return "order mismatch";
    const auto& ix = a.index();
    for (size_t r = 0; r < a.size(); ++r)
        if (a.at(r) != b.at(r))
            return monomial_str(ix.monomial(r)) + ": " + a.at(r).str() + " vs " + b.at(r).str();
    return {};
}

std::string word_str(const std::vector<int>& w) {
    std::ostringstream os;
    os << "[";
    for (size_t k = 0; k < w.size(); ++k) os << (k ? " " : "") << w[k];
    os << "]";
    return os.str();
}

Point random_point(std::mt19937& rng) {
    std::uniform_int_distribution<int> n(1, 9), d(2, 11), sg(0, 1);
    Point p;
    for (auto& c : p) c = BigRational(sg(rng) ? n(rng) : -n(rng), d(rng));
    return p;
}

/* parity components of a pointwise-evaluated function: the four twists by
 * eps5 (x̄ -> -x̄) and eps1 (x5 -> -x5) */
template <class F>
std::array<BigRational, 4> components_at(F&& f, const Point& x) {
    std::array<BigRational, 4> vals;
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) {
            Point y = x;
            for (int j = 0; j < 4; ++j)
                if (s) y[j] = -y[j];
            if (t) y[4] = -y[4];
            vals[2 * s + t] = f(y);
        }
    std::array<BigRational, 4> out;
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
            BigRational acc;
            for (int s = 0; s < 2; ++s)
                for (int t = 0; t < 2; ++t) {
                    bool neg = ((p & s) ^ (q & t)) & 1;
                    acc += neg ? -vals[2 * s + t] : vals[2 * s + t];
                }
            out[p && q ? 3 : p ? 2 : q ? 1 : 0] = acc / BigRational(4);
        }
    return out;
}

}

ParityVector parity_decompose(const TruncSeries& f, bool claim_cg) {
    ParityVector v{TruncSeries(5, f.order()), TruncSeries(5, f.order()), TruncSeries(5, f.order())};
    const auto& ix = f.index();
    for (size_t r = 0; r < f.size(); ++r) {
        if (f.at(r).is_zero()) continue;
        int c = component_of(ix.monomial(r));
        if (c == 3) {
            if (claim_cg)
                throw std::invalid_argument("parity_decompose: nonzero o,o part at " + monomial_str(ix.monomial(r)));
            continue;
        }
        v[c].at(r) = f.at(r);
    }
    return v;
}

TruncSeries oo_part(const TruncSeries& f) {
    TruncSeries out(5, f.order());
    const auto& ix = f.index();
    for (size_t r = 0; r < f.size(); ++r)
        if (!f.at(r).is_zero() && component_of(ix.monomial(r)) == 3) out.at(r) = f.at(r);
    return out;
}

LambdaMatrix identity3() {
    LambdaMatrix m;
    for (int k = 0; k < 3; ++k) m[k][k] = CGTerm::constant(UPoly(1));
    return m;
}

LambdaMatrix lambda_simple(int i) {
    if (i < 1 || i > 5) throw std::invalid_argument("lambda_simple: generator out of range");
    UPoly u = UPoly::u();
    Factor den{1, 2, unit(i, 2)};
    /* -x_i a and -x_i b with a = (1-u^2) x_i/(1-u^2 x_i^2), b = -u(1-x_i^2)/(1-u^2 x_i^2) */
    CGTerm diag = scalar_term(unit(i, 2), u * u - UPoly(1));
    diag.denominator.push_back(den);
    CGTerm off = scalar_term(unit(i), u);
    off.numerator[unit(i, 3)] = -u;
    off.denominator.push_back(den);
    CGTerm mid = scalar_term(unit(i), UPoly(-1));
    LambdaMatrix m;
    if (i <= 4) {
        m[0][0] = diag, m[0][2] = off, m[1][1] = mid, m[2][0] = off, m[2][2] = diag;
    } else {
        m[0][0] = diag, m[0][1] = off, m[1][0] = off, m[1][1] = diag, m[2][2] = mid;
    }
    return m;
}

LambdaMatrix lambda_tilde_simple(int i) {
    CGTerm s = scalar_term(unit(i, -2), UPoly(-1));
    LambdaMatrix m = lambda_simple(i);
    for (auto& row : m)
        for (auto& e : row)
            if (!is_zero_term(e)) e = s * e;
    return m;
}

LambdaMatrix operator*(const LambdaMatrix& a, const LambdaMatrix& b) {
    LambdaMatrix r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                if (!is_zero_term(a[i][k]) && !is_zero_term(b[k][j])) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    return r;
}

LambdaMatrix substitute(const LambdaMatrix& m, int i) {
    LambdaMatrix r;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (!is_zero_term(m[a][b])) r[a][b] = substitute(m[a][b], i, false);
    return r;
}

LambdaMatrix lambda_word(const std::vector<int>& word) {
    /* bar(f|s_i1|...) : Lambda_w(x) = Lambda_{s_i1}(x) Lambda_{w'}(s_i1 x), w' the rest */
    LambdaMatrix m = identity3();
    for (size_t k = word.size(); k-- > 0;) m = lambda_simple(word[k]) * substitute(m, word[k]);
    return m;
}

LambdaMatrix lambda_tilde_word(const std::vector<int>& word) {
    LambdaMatrix m = identity3();
    for (size_t k = word.size(); k-- > 0;) m = lambda_tilde_simple(word[k]) * substitute(m, word[k]);
    return m;
}

CGTerm norm_act_simple(const CGTerm& f, int i) {
    return scalar_term(unit(i, -2), UPoly(-1)) * act_simple(f, i, false);
}

CGTerm norm_act(const CGTerm& f, const std::vector<int>& word) {
    CGTerm g = f;
    for (size_t k = word.size(); k-- > 0;) g = norm_act_simple(g, word[k]);
    return g;
}

CGTerm f_w(const std::vector<int>& word) {
    CGTerm g = CGTerm::constant(UPoly(1)) + CGTerm::monomial(unit(5), UPoly::u());
    return norm_act(g, word);
}

bool cg_equal(const CGTerm& a, const CGTerm& b) {
    if (is_zero_term(b)) return is_zero_term(a);
    CGTerm d = a + CGTerm::constant(UPoly(-1)) * b;
    return d.numerator.empty();
}

bool lambda_equal(const LambdaMatrix& a, const LambdaMatrix& b) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!cg_equal(a[i][j], b[i][j])) return false;
    return true;
}

Matrix3<BigRational> evaluate(const LambdaMatrix& m, const Point& x, const BigRational& u) {
    Matrix3<BigRational> r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!is_zero_term(m[i][j])) r[i][j] = m[i][j].evaluate(x, u);
    return r;
}

Point reflect_point(int i, const Point& x) {
    Point y;
    for (int j = 1; j <= 5; ++j) y[j - 1] = mono_value(simple_reflect(i, simple_root(j)), x);
    return y;
}

int lambda_entry_parity(int r, int c) { return ((r > 0) + (c > 0)) & 1; }

CheckReport cocycle_relation_check() {
    CheckReport rep("cocycle_relations", 0);
    for (int i = 1; i <= 5; ++i) {
        rep.expect(lambda_equal(lambda_word({i, i}), identity3()), "s" + std::to_string(i) + "^2");
        rep.expect(lambda_equal(lambda_word({i}), lambda_simple(i)), "single letter " + std::to_string(i));
    }
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            bool ok = adjacent(i, j) ? lambda_equal(lambda_word({i, j, i}), lambda_word({j, i, j}))
                                     : lambda_equal(lambda_word({i, j}), lambda_word({j, i}));
            rep.expect(ok, "braid " + std::to_string(i) + "," + std::to_string(j));
        }
    return rep;
}

CheckReport cocycle_pointwise_check(int samples, unsigned seed) {
    CheckReport rep("cocycle_pointwise", 0);
    std::mt19937 rng(seed);
    auto els = enumerate_weyl(14);
    std::vector<const EnumeratedElement*> pool;
    for (auto& e : els)
        if (e.w.length >= 1 && e.w.length <= 5) pool.push_back(&e);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> ex(-2, 2), co(-3, 3);
    std::uniform_int_distribution<int> un(-5, 5), ud(3, 9);
    for (int t = 0; t < samples; ++t) {
        const auto& w = pool[pick(rng)]->w.word;
        /* f: three monomials avoiding the o,o component */
        std::vector<std::pair<Monomial, int>> f;
        while (f.size() < 3) {
            Monomial a{ex(rng), ex(rng), ex(rng), ex(rng), ex(rng)};
            int c = co(rng);
            if (component_of(a) != 3 && c) f.push_back({a, c});
        }
        Point x = random_point(rng);
        BigRational u(un(rng), ud(rng));
        try {
            auto lhs = components_at(
                [&](const Point& y) {
                    BigRational s;
                    for (auto& [a, c] : f) s += BigRational(c) * act_pointwise(a, w, y, u);
                    return s;
                },
                x);
            Point y = x;
            for (int i : w) y = reflect_point(i, y);
            std::array<BigRational, 3> fbar;
            for (auto& [a, c] : f) fbar[component_of(a)] += BigRational(c) * mono_value(a, y);
            auto lam = evaluate(lambda_word(w), x, u);
            for (int r = 0; r < 3; ++r) {
                BigRational rhs;
                for (int k = 0; k < 3; ++k) rhs += lam[r][k] * fbar[k];
                rep.expect(lhs[r] == rhs, "word " + word_str(w) + " component " + std::to_string(r));
            }
            rep.expect(lhs[3].is_zero(), "word " + word_str(w) + " has an o,o part");
        } catch (const std::domain_error&) {
            --t; /* sample hit a pole; draw again */
        }
    }
    return rep;
}

CheckReport lambda_parity_check(int max_length) {
    CheckReport rep("lambda_parity", max_length);
    std::mt19937 rng(7);
    for (auto& e : enumerate_weyl(3 * max_length * max_length)) {
        if (e.w.length > max_length) continue;
        auto lam = lambda_word(e.w.word);
        Point x = random_point(rng);
        BigRational u(3, 7);
        auto p = evaluate(lam, x, u), m = evaluate(lam, x, -u);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                BigRational want = lambda_entry_parity(r, c) ? -p[r][c] : p[r][c];
                rep.expect(m[r][c] == want, "word " + word_str(e.w.word) + " entry " + std::to_string(r) +
                                                 std::to_string(c));
            }
    }
    return rep;
}

SeriesMatrix3 b0_matrix(int order) {
    SeriesMatrix3 m;
    for (auto& row : m)
        for (auto& e : row) e = TruncSeries(5, order);
    m[0][0] = series_one(order);
    return m;
}

SeriesMatrix3 b1_matrix(int order) {
    SeriesMatrix3 m;
    for (auto& row : m)
        for (auto& e : row) e = TruncSeries(5, order);
    /* x^delta / x5 and x^delta (1/x1 + ... + 1/x4) */
    m[0][1].add_term(kDelta - unit(5), UPoly(1));
    for (int j = 1; j <= 4; ++j) {
        m[0][2].add_term(kDelta - unit(j), UPoly(1));
        m[2][0].add_term(unit(j), UPoly(1));
    }
    m[1][0].add_term(unit(5), UPoly(1));
    return m;
}

CheckReport b0_b1_recursion_check(const TruncSeries& zt) {
    const int n = zt.order();
    CheckReport rep("b0_b1_recursion", n);
    ParityVector z0 = parity_decompose(u_coefficient(zt, 0), true);
    ParityVector z1 = parity_decompose(u_coefficient(zt, 1), true);
    SeriesMatrix3 b0 = b0_matrix(n), b1 = b1_matrix(n);
    auto apply = [&](const SeriesMatrix3& b, const ParityVector& v) {
        ParityVector r{TruncSeries(5, n), TruncSeries(5, n), TruncSeries(5, n)};
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k)
                if (!b[i][k].is_zero() && !v[k].is_zero()) r[i] += mul_trunc(b[i][k], v[k]);
        return r;
    };
    auto compare = [&](const ParityVector& a, const ParityVector& b, const std::string& what) {
        for (int k = 0; k < 3; ++k) {
            std::string d = first_difference(a[k], b[k]);
            rep.expect(d.empty(), what + " component " + std::to_string(k) + " at " + d);
        }
    };
    ParityVector e1{series_one(n), TruncSeries(5, n), TruncSeries(5, n)};
    compare(z0, e1, "Z0 = (1,0,0)");
    /* u^0 part of Z(x;u) = B(x;u) Z(x; u x^delta) */
    compare(apply(b0, z0), z0, "B0 Z0 = Z0");
    /* u^1 part: Z1 = x^delta B0 Z1 + B1 Z0 */
    ParityVector rhs = apply(b0, z1);
    for (int k = 0; k < 3; ++k) rhs[k] = rhs[k].shifted(kDelta);
    ParityVector b1z0 = apply(b1, z0);
    for (int k = 0; k < 3; ++k) rhs[k] += b1z0[k];
    compare(z1, rhs, "u^1 functional equation");
    /* solved form (I - x^delta B0)^{-1} B1 Z0, the inverse being diag(1/(1 - x^delta), 1, 1) */
    ParityVector solved = b1z0;
    solved[0].div_binomial(1, 0, kDelta);
    compare(z1, solved, "Z1 recursion");
    TruncSeries lin(5, n);
    for (int j = 1; j <= 5; ++j) lin.add_term(unit(j), UPoly(1));
    std::string d = first_difference(z1.sum(), lin);
    rep.expect(d.empty(), "Z1 component sum at " + d);
    return rep;
}

CheckReport b0_b1_recursion_check(int order) { return b0_b1_recursion_check(z_tilde(order)); }

CheckReport w_invariance_check(const TruncSeries& zt) {
    const int n = zt.order();
    CheckReport rep("w_invariance", n);
    ParityVector v = parity_decompose(zt, true);
    const auto& ix = zt.index();
    for (int i = 1; i <= 5; ++i) {
        /* eps_i negates the neighbours of i: x5 for a leaf, x̄ for the hub */
        TruncSeries plus = i <= 4 ? v.ee + v.oe : v.ee + v.eo;
        const TruncSeries& minus = i <= 4 ? v.eo : v.oe;
        TruncSeries g = plus;
        g.mul_binomial(1, 1, unit(i));
        for (int part = 0; part < 2; ++part) {
            const TruncSeries& s = part == 0 ? g : minus;
            /* x_i-exponent k pairs with v_i - k (G) or v_i - 1 - k (odd part) */
            for (size_t r = 0; r < s.size(); ++r) {
                const Monomial& m = ix.monomial(r);
                Monomial p = m;
                p[i - 1] = v_index(m, i) - part - m[i - 1];
                std::string where = "s" + std::to_string(i) + (part ? " odd " : " even ") + monomial_str(m);
                if (p[i - 1] < 0) {
                    rep.expect(s.at(r).is_zero(), where + " beyond palindromic degree");
                } else if (total_degree(p) <= n && p[i - 1] > m[i - 1]) {
                    rep.expect(s.at(r) == s.coeff(p), where + " vs " + monomial_str(p));
                }
            }
        }
    }
    return rep;
}

CheckReport oo_vanishing_check(const TruncSeries& zt) {
    CheckReport rep("oo_vanishing", zt.order());
    TruncSeries oo = oo_part(zt);
    const auto& ix = oo.index();
    for (size_t r = 0; r < oo.size(); ++r) {
        if (component_of(ix.monomial(r)) != 3) continue;
        rep.expect(oo.at(r).is_zero(), monomial_str(ix.monomial(r)) + ": " + oo.at(r).str());
    }
    return rep;
}

CheckReport axioms_check(const TruncSeries& zt) {
    CheckReport rep("axioms", zt.order());
    const auto& ix = zt.index();
    for (size_t r = 0; r < zt.size(); ++r) {
        const Monomial& k = ix.monomial(r);
        const UPoly& a = zt.at(r);
        const int kb = xbar_degree(k), n = kb + k[4];
        const std::string tag = monomial_str(k) + ": " + a.str();
        if ((kb & 1) && (k[4] & 1)) rep.expect(a.is_zero(), tag + " (o,o part)");
        for (int j = 0; j <= a.degree(); ++j) {
            if (a[j].is_zero()) continue;
            rep.expect((j - n) % 2 == 0, tag + " (u-parity)");
            if (n > 1) rep.expect(j >= 2 && j <= n, tag + " (weight bounds)");
        }
        if (k[4] == 0) rep.expect(a == UPoly::monomial(1, kb), tag + " (k5 = 0 slice)");
        if (kb == 0) rep.expect(a == UPoly::monomial(1, k[4]), tag + " (x5 series)");
        if (k[4] == 1) rep.expect(a == (kb == 0 ? UPoly::u() : UPoly()), tag + " (k5 = 1 slice)");
    }
    return rep;
}

}
