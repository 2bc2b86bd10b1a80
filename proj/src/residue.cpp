#include "cgd4/residue.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace cgd4 {

namespace {

using Point = std::array<BigRational, 5>;
using Series4 = GSeries<UPoly>;

Monomial unit(int i, int e = 1) {
    Monomial m{};
    m[i - 1] = e;
    return m;
}

const Monomial kOnes{1, 1, 1, 1, 0};

template <class C>
std::string first_difference(const GSeries<C>& a, const GSeries<C>& b) {
    if (a.order() != b.order() || a.nvars() != b.nvars()) return "shape mismatch";
    const auto& ix = a.index();
    for (size_t r = 0; r < a.size(); ++r)
        if (a.at(r) != b.at(r))
            return monomial_str(ix.monomial(r), a.nvars()) + ": " + a.at(r).str() + " vs " + b.at(r).str();
    return {};
}

std::string word_str(const std::vector<int>& w) {
    std::ostringstream os;
    os << "[";
    for (size_t k = 0; k < w.size(); ++k) os << (k ? " " : "") << w[k];
    os << "]";
    return os.str();
}

std::string root_str(const Root& r) {
    std::ostringstream os;
    os << "(" << r[0] << "," << r[1] << "," << r[2] << "," << r[3] << "," << r[4] << ")";
    return os.str();
}

int bound_of(int l) { return l - (l & 1); }

UPoly coeff_of(const XLaurent& p, const Monomial& k) {
    auto it = p.find(k);
    return it == p.end() ? UPoly() : it->second;
}

/* log10 |q| for q != 0, valid far outside the double range */
double log10_abs(const BigRational& q) {
    mpq_class v = q.to_mpq();
    long en = 0, ed = 0;
    double n = mpz_get_d_2exp(&en, v.get_num_mpz_t());
    double d = mpz_get_d_2exp(&ed, v.get_den_mpz_t());
    return std::log10(std::fabs(n)) - std::log10(d) + double(en - ed) * std::log10(2.0);
}

/* log10(10^a + 10^b) */
double log10_add(double a, double b) {
    if (a == -INFINITY) return b;
    if (b == -INFINITY) return a;
    double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log10(1 + std::pow(10.0, lo - hi));
}

BigRational abs(const BigRational& q) { return q.sign() < 0 ? -q : q; }

/* prod_{k<K} (1 - a b^k); adds log10 of the tail bound 2|a||b|^K/(1-|b|) */
BigRational poch(const BigRational& a, const BigRational& b, int cutoff, double& log10_tail) {
    if (abs(b) >= BigRational(1)) throw std::domain_error("residue_value: Pochhammer base not inside the unit disc");
    BigRational v(1), t = a;
    for (int k = 0; k < cutoff; ++k) {
        BigRational f = BigRational(1) - t;
        if (f.is_zero()) throw std::domain_error("residue_value: vanishing Pochhammer factor");
        v *= f;
        t *= b;
    }
    if (t.is_zero()) return v;
    if (abs(t) > BigRational(1, 2)) throw std::domain_error("residue_value: cutoff too small for the tail bound");
    double l = std::log10(2.0) + log10_abs(t) - log10_abs(BigRational(1) - abs(b));
    log10_tail = log10_add(log10_tail, l);
    return v;
}

/* a truncated product in x̄ (4 variables) with a separate constant */
struct SpecProduct {
    Series4 s;
    BigRational c{1};
};

/* multiply (or divide) by prod_{k >= k0} (1 - x^{a + k base}) at x5 = -1 */
void apply_family(SpecProduct& p, const Monomial& a, const Monomial& base, bool divide, int k0 = 0) {
    const int n = p.s.order();
    for (int k = k0;; ++k) {
        Monomial m = a + k * base;
        BigRational sgn = (m[4] & 1) ? BigRational(-1) : BigRational(1);
        Monomial mb = m;
        mb[4] = 0;
        int d = xbar_degree(mb);
        if (d > n) break;
        if (!is_nonneg(mb)) throw std::logic_error("u_minus_one_check: negative exponent in a product factor");
        if (d == 0) {
            BigRational f = BigRational(1) - sgn;
            if (f.is_zero()) throw std::logic_error("u_minus_one_check: vanishing constant factor");
            if (divide) p.c /= f;
            else p.c *= f;
            if (xbar_degree(base) == 0) break;
            continue;
        }
        if (divide) p.s.div_binomial(sgn, 0, mb);
        else p.s.mul_binomial(sgn, 0, mb);
    }
}

Point random_point(std::mt19937& rng) {
    std::uniform_int_distribution<int> n(1, 9), d(2, 11), sg(0, 1);
    Point p;
    for (auto& c : p) c = BigRational(sg(rng) ? n(rng) : -n(rng), d(rng));
    return p;
}

BigRational mono_value(const Monomial& m, const Point& x) {
    BigRational v(1);
    for (int j = 0; j < 5; ++j) {
        if (m[j] >= 0) v *= x[j].pow(m[j]);
        else v /= x[j].pow(-m[j]);
    }
    return v;
}

}

const XLaurent& SlicePolynomials::p(int l) const {
    auto it = P.find(l);
    if (it == P.end()) throw std::out_of_range("SlicePolynomials: P_" + std::to_string(l) + " not extracted");
    return it->second;
}

const X5Poly& SlicePolynomials::q(const Monomial& k) const {
    auto it = Q.find(k);
    if (it == Q.end()) throw std::out_of_range("SlicePolynomials: Q_" + monomial_str(k, 4) + " not extracted");
    return it->second;
}

UPoly SlicePolynomials::p_at(int l, const BigRational& c) const {
    UPoly out;
    for (auto& [k, v] : p(l)) out += v * c.pow(xbar_degree(k));
    return out;
}

nlohmann::json SlicePolynomials::to_json() const {
    nlohmann::json j;
    j["order"] = order;
    j["dmax"] = dmax;
    j["kmax"] = kmax;
    nlohmann::json pj = nlohmann::json::object();
    for (auto& [l, poly] : P) {
        nlohmann::json t = nlohmann::json::object();
        for (auto& [k, c] : poly) t[monomial_str(k, 4)] = c.str();
        pj[std::to_string(l)] = t;
    }
    j["P"] = pj;
    nlohmann::json qj = nlohmann::json::object();
    for (auto& [k, poly] : Q) {
        if (poly.empty()) continue;
        nlohmann::json t = nlohmann::json::object();
        for (auto& [e, c] : poly) t[std::to_string(e)] = c.str();
        qj[monomial_str(k, 4)] = t;
    }
    j["Q"] = qj;
    return j;
}

SlicePolynomials extract_slices(const TruncSeries& z, int dmax) {
    const int n = z.order();
    if (dmax < 0 || n < 5 * dmax)
        throw std::invalid_argument("extract_slices: order " + std::to_string(n) + " too small for dmax " +
                                    std::to_string(dmax) + " (need order >= 5 dmax)");
    SlicePolynomials s;
    s.order = n;
    s.dmax = dmax;
    s.kmax = n / 2;

    std::map<int, Series4> raw_p;
    for (int l = 0; l <= dmax; ++l) raw_p.emplace(l, Series4(4, n - l));
    std::map<Monomial, X5Poly> raw_q;
    z.for_each([&](const Monomial& m, const UPoly& c) {
        Monomial k = m;
        k[4] = 0;
        if (m[4] <= dmax) raw_p.at(m[4]).add_term(k, c);
        if (xbar_degree(m) <= s.kmax) raw_q[k][m[4]] = c;
    });

    for (auto& [l, ser] : raw_p) {
        if (!(l & 1))
            for (int j = 1; j <= 4; ++j) ser.mul_binomial(1, 1, unit(j));
        int b = bound_of(l);
        XLaurent& out = s.P[l];
        ser.for_each([&](const Monomial& k, const UPoly& c) {
            for (int j = 0; j < 4; ++j)
                if (k[j] > b)
                    throw std::logic_error("extract_slices: P_" + std::to_string(l) + " has the term " +
                                           monomial_str(k, 4) + " beyond degree " + std::to_string(b));
            out[k] = c;
        });
    }

    auto ix = SimplexIndex::get(4, s.kmax);
    for (size_t r = 0; r < ix->size(); ++r) {
        const Monomial& k = ix->monomial(r);
        int kd = xbar_degree(k), b = bound_of(kd);
        X5Poly col;
        auto it = raw_q.find(k);
        if (it != raw_q.end()) col = it->second;
        if (!(kd & 1)) {
            X5Poly t;
            for (auto& [e, c] : col) {
                t[e] += c;
                if (e + 1 <= n - kd) t[e + 1] -= c * UPoly::u();
            }
            col.clear();
            for (auto& [e, c] : t)
                if (!c.is_zero()) col[e] = c;
        }
        for (auto& [e, c] : col)
            if (e > b)
                throw std::logic_error("extract_slices: Q_" + monomial_str(k, 4) + " has x5^" + std::to_string(e) +
                                       " beyond degree " + std::to_string(b));
        s.Q[k] = std::move(col);
    }
    return s;
}

UPoly DiagonalSlices::p_at(int l, const BigRational& c) const {
    auto it = p.find(l);
    if (it == p.end()) throw std::out_of_range("DiagonalSlices: P_" + std::to_string(l) + " not extracted");
    UPoly out;
    BigRational ca(1);
    for (auto& v : it->second) {
        out += v * ca;
        ca *= c;
    }
    return out;
}

nlohmann::json DiagonalSlices::to_json() const {
    nlohmann::json j;
    j["dmax"] = dmax;
    nlohmann::json pj = nlohmann::json::object();
    for (auto& [l, poly] : p) {
        nlohmann::json t = nlohmann::json::object();
        for (size_t a = 0; a < poly.size(); ++a)
            if (!poly[a].is_zero()) t[std::to_string(a)] = poly[a].str();
        pj[std::to_string(l)] = t;
    }
    j["P"] = pj;
    return j;
}

DiagonalSlices diagonal_slices(int dmax) {
    if (dmax < 0) throw std::invalid_argument("diagonal_slices: negative dmax");
    return diagonal_slices(z_tilde_diagonal(dmax, 4 * dmax + 4), dmax);
}

DiagonalSlices diagonal_slices(const DiagonalSeries& d, int dmax) {
    if (dmax > d.xdeg || d.ydeg < 4 * bound_of(dmax) + 4)
        throw std::invalid_argument("diagonal_slices: series box too small for dmax " + std::to_string(dmax));
    DiagonalSlices out;
    out.dmax = dmax;
    for (int l = 0; l <= dmax; ++l) {
        std::vector<UPoly> col(d.ydeg + 1);
        for (int a = 0; a <= d.ydeg; ++a) col[a] = d.at(a, l);
        if (!(l & 1))
            for (int j = 0; j < 4; ++j)
                for (int a = d.ydeg; a >= 1; --a) col[a] -= col[a - 1] * UPoly::u();
        const int b = 4 * bound_of(l);
        std::string tag = "diagonal_slices: P_" + std::to_string(l);
        for (int a = b + 1; a <= d.ydeg; ++a)
            if (!col[a].is_zero()) throw std::logic_error(tag + " has y^" + std::to_string(a) + " beyond degree " +
                                                          std::to_string(b));
        col.resize(b + 1);
        for (int a = 0; a <= b; ++a)
            if (col[a] != col[b - a]) throw std::logic_error(tag + " not palindromic at y^" + std::to_string(a));
        out.p[l] = std::move(col);
    }
    return out;
}

DiagonalSlices diagonal_slices(const SlicePolynomials& s) {
    DiagonalSlices out;
    out.dmax = s.dmax;
    for (auto& [l, poly] : s.P) {
        std::vector<UPoly> col(4 * bound_of(l) + 1);
        for (auto& [k, c] : poly) col[xbar_degree(k)] += c;
        out.p[l] = std::move(col);
    }
    return out;
}

CheckReport diagonal_slices_check(const SlicePolynomials& s, const DiagonalSlices& d) {
    CheckReport rep("diagonal_slices", s.order);
    auto from_full = diagonal_slices(s);
    for (int l = 0; l <= std::min(s.dmax, d.dmax); ++l) {
        const auto& a = from_full.p.at(l);
        const auto& b = d.p.at(l);
        rep.expect(a.size() == b.size(), "P_" + std::to_string(l) + " degree differs");
        for (size_t k = 0; k < std::min(a.size(), b.size()); ++k)
            rep.expect(a[k] == b[k], "P_" + std::to_string(l) + " at y^" + std::to_string(k) + ": " + a[k].str() +
                                         " vs " + b[k].str());
    }
    return rep;
}

CheckReport slice_structure_check(const SlicePolynomials& s) {
    CheckReport rep("slice_structure", s.order);
    const XLaurent one{{Monomial{}, UPoly(1)}};
    rep.expect(s.p(0) == one, "P_0 != 1");
    rep.expect(s.q(Monomial{}) == X5Poly{{0, UPoly(1)}}, "Q_0 != 1");

    for (auto& [l, poly] : s.P) {
        int b = bound_of(l);
        std::string tag = "P_" + std::to_string(l) + " at ";
        for (auto& [k, c] : poly) {
            for (int j = 0; j < 4; ++j) {
                Monomial k2 = k;
                k2[j] = b - k[j];
                rep.expect(coeff_of(poly, k2) == c, tag + monomial_str(k, 4) + " not palindromic in x" +
                                                        std::to_string(j + 1));
            }
            Monomial srt = k;
            std::sort(srt.begin(), srt.begin() + 4);
            rep.expect(coeff_of(poly, srt) == c, tag + monomial_str(k, 4) + " not symmetric");
            if (l & 1) rep.expect(!(xbar_degree(k) & 1), tag + monomial_str(k, 4) + " breaks evenness");
        }
    }
    for (auto& [k, poly] : s.Q) {
        int b = bound_of(xbar_degree(k));
        for (auto& [e, c] : poly) {
            auto it = poly.find(b - e);
            rep.expect(it != poly.end() && it->second == c,
                       "Q_" + monomial_str(k, 4) + " not palindromic at x5^" + std::to_string(e));
        }
    }
    return rep;
}

CheckReport positivity_check(const SlicePolynomials& s, int udeg) {
    CheckReport rep("positivity", s.order);
    rep.extra["udeg"] = udeg;
    for (auto& [l, poly] : s.P) {
        UPoly v = s.p_at(l, 1);
        std::vector<BigRational> c(udeg + 1);
        if (l & 1) {
            for (int j = 0; j <= udeg && j <= v.degree(); ++j) c[j] = v[j];
        } else {
            /* times 1/(1-u)^4 = sum C(j+3,3) u^j */
            for (int a = 0; a <= v.degree() && a <= udeg; ++a)
                for (int j = 0; a + j <= udeg; ++j)
                    c[a + j] += v[a] * BigRational((long long)(j + 1) * (j + 2) * (j + 3) / 6);
        }
        for (int j = 0; j <= udeg; ++j)
            rep.expect(c[j].sign() >= 0, "P_" + std::to_string(l) + " coefficient of u^" + std::to_string(j) +
                                             " is " + c[j].str());
        rep.extra["P" + std::to_string(l) + "(1)"] = v.str();
    }
    return rep;
}

ResidueSeries residue_closed_form(int order) {
    if (order < 0) throw std::invalid_argument("residue_closed_form: negative order");
    ResidueSeries r = ResidueSeries::one(4, order);
    auto z = [](int k) { return k * kOnes; };
    for (int k = 0; 4 * (2 * k + 2) <= order; ++k) {
        r.div_binomial(1, -4 * (k + 1), z(2 * k + 2));
        r.div_binomial(1, 2 - 4 * (k + 1), z(2 * k + 2));
    }
    for (int i = 1; i <= 4; ++i) {
        for (int k = 0; 2 + 8 * k <= order; ++k) r.div_binomial(1, -4 * k, unit(i, 2) + z(2 * k));
        for (int k = 0; 8 * k + 6 <= order; ++k) r.div_binomial(1, -2 - 4 * k, unit(i, -2) + z(2 * k + 2));
    }
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            for (int k = 0; 2 + 4 * k <= order; ++k) r.div_binomial(1, -2 * k, unit(i) + unit(j) + z(k));
    return r;
}

GSeries<UPoly> residue_scaled(const ResidueSeries& r) {
    Series4 out(4, r.order());
    const auto& ix = r.index();
    for (size_t i = 0; i < r.size(); ++i) {
        const LaurentPoly& c = r.at(i);
        if (c.is_zero()) continue;
        int low = c.low() + ix.degree(i);
        if (low < 0)
            throw std::logic_error("residue_scaled: negative u-power at " + monomial_str(ix.monomial(i), 4));
        out.at(i) = c.body().shifted(low);
    }
    return out;
}

GSeries<UPoly> residue_from_slices(const SlicePolynomials& s, int order) {
    if (order > s.kmax)
        throw std::invalid_argument("residue_from_slices: order " + std::to_string(order) + " exceeds kmax " +
                                    std::to_string(s.kmax));
    Series4 out(4, order);
    const auto& ix = out.index();
    for (size_t r = 0; r < out.size(); ++r) {
        if (ix.degree(r) & 1) continue;
        UPoly v;
        for (auto& [e, c] : s.q(ix.monomial(r))) v += c.shifted(e);
        out.at(r) = v;
    }
    return out;
}

CheckReport residue_consistency_check(const SlicePolynomials& s, int order) {
    CheckReport rep("residue_consistency", order);
    Series4 closed = residue_scaled(residue_closed_form(order));
    closed.for_each([&](const Monomial& m, const UPoly&) {
        rep.expect(!(xbar_degree(m) & 1), "closed form has an odd term at " + monomial_str(m, 4));
    });
    Series4 slices = residue_from_slices(s, order);
    std::string d = first_difference(closed, slices);
    rep.expect(d.empty(), d);
    rep.extra["terms"] = closed.nnz();
    return rep;
}

CheckReport residue_consistency_check(int order) {
    TruncSeries zt = z_tilde(2 * order);
    return residue_consistency_check(extract_slices(zt, 2 * order / 5), order);
}

CheckReport residue_factor_check(const SlicePolynomials& s, int order) {
    CheckReport rep("residue_factor", order);
    Series4 g = residue_from_slices(s, order);
    auto z = [](int k) { return k * kOnes; };
    for (int i = 1; i <= 4; ++i) {
        for (int k = 0; 2 + 8 * k <= order; ++k) g.mul_binomial(1, 2 + 4 * k, unit(i, 2) + z(2 * k));
        for (int k = 0; 8 * k + 6 <= order; ++k) g.mul_binomial(1, 4 + 4 * k, unit(i, -2) + z(2 * k + 2));
    }
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            for (int k = 0; 2 + 4 * k <= order; ++k) g.mul_binomial(1, 2 + 2 * k, unit(i) + unit(j) + z(k));
    g.for_each([&](const Monomial& m, const UPoly& c) {
        bool diag = m[0] == m[1] && m[1] == m[2] && m[2] == m[3];
        rep.expect(diag, "term " + monomial_str(m, 4) + " (" + c.str() + ") is not a power of x1x2x3x4");
    });
    /* what remains is 1/[(u^4 z^2; u^4 z^2)(u^6 z^2; u^4 z^2)] */
    Series4 want = Series4::one(4, order);
    for (int k = 0; 4 * (2 * k + 2) <= order; ++k) {
        want.div_binomial(1, 4 * (k + 1), z(2 * k + 2));
        want.div_binomial(1, 6 + 4 * k, z(2 * k + 2));
    }
    std::string d = first_difference(g, want);
    rep.expect(d.empty(), d);
    return rep;
}

const std::vector<PochFamily>& macdonald_families() {
    static const std::vector<PochFamily> fams = [] {
        std::vector<PochFamily> f;
        for (int i = 1; i <= 4; ++i) {
            f.push_back({unit(i), 1});
            f.push_back({kDelta - unit(i), 1});
            f.push_back({unit(i) + unit(5), 1});
            f.push_back({kDelta - unit(i) - unit(5), 1});
        }
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) f.push_back({unit(i) + unit(j) + unit(5), 1});
        f.push_back({kDelta, 4});
        f.push_back({unit(5), 1});
        f.push_back({kDelta - unit(5), 1});
        return f;
    }();
    return fams;
}

TruncSeries macdonald_F(int order) {
    TruncSeries f = series_one(order);
    for (auto& fam : macdonald_families())
        for (int t = 0; t < fam.mult; ++t)
            for (int k = 0; total_degree(fam.a + k * kDelta) <= order; ++k)
                f.mul_binomial(1, 0, fam.a + k * kDelta);
    return f;
}

CheckReport macdonald_check(int order) {
    CheckReport rep("macdonald", order);
    TruncSeries f = macdonald_F(order);
    std::string d = first_difference(f, substitute_u(z_w(order), -1));
    rep.expect(d.empty(), "Z_W(x;-1): " + d);

    TruncSeries roots = series_one(order);
    for (auto& b : positive_real_roots(order)) roots.mul_binomial(1, 0, b);
    for (int k = 1; 6 * k <= order; ++k)
        for (int t = 0; t < 4; ++t) roots.mul_binomial(1, 0, k * kDelta);
    d = first_difference(f, roots);
    rep.expect(d.empty(), "root product: " + d);

    TruncSeries sq(5, order);
    f.truncated(order / 2).for_each([&](const Monomial& m, const UPoly& c) { sq.add_term(2 * m, c); });
    d = first_difference(sq, delta_product(order));
    rep.expect(d.empty(), "Delta(x) vs F_MD(x^2): " + d);
    return rep;
}

CheckReport u_minus_one_check(int order) {
    CheckReport rep("u_minus_one", order);
    ResidueSeries r = residue_closed_form(order);
    Series4 lhs(4, order);
    for (size_t i = 0; i < r.size(); ++i)
        if (!r.at(i).is_zero()) lhs.at(i) = UPoly(r.at(i).eval(-1));

    SpecProduct p{Series4::one(4, order)};
    const Monomial d5 = kOnes + kOnes;
    Monomial delta = kDelta;
    for (auto& fam : macdonald_families())
        for (int t = 0; t < fam.mult; ++t) apply_family(p, fam.a, delta, false);
    p.c /= 2;
    for (int t = 0; t < 2; ++t) apply_family(p, kOnes, d5, true);
    for (auto& fam : macdonald_families())
        for (int t = 0; t < fam.mult; ++t)
            apply_family(p, 2 * fam.a, 2 * delta, true, fam.a == unit(5) ? 1 : 0);
    Series4 rhs = p.s.scaled(p.c);
    std::string d = first_difference(lhs, rhs);
    rep.expect(d.empty(), d);
    rep.extra["terms"] = lhs.nnz();
    return rep;
}

BigRational lambda_t(const Point4& x, const BigRational& u) {
    BigRational u2 = u * u, v = BigRational(1) - u2;
    for (int i = 0; i < 4; ++i) v *= BigRational(1) - u2 / (x[i] * x[i]);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) v *= BigRational(1) - u2 / (x[i] * x[j]);
    return v;
}

ResidueValue residue_value(const Point4& x, const BigRational& u, int cutoff) {
    if (cutoff < 1) throw std::invalid_argument("residue_value: cutoff must be >= 1");
    for (auto& c : x)
        if (c.is_zero()) throw std::domain_error("residue_value: zero coordinate");
    if (u.is_zero()) throw std::domain_error("residue_value: u = 0");
    BigRational P = x[0] * x[1] * x[2] * x[3] / (u * u), P2 = P * P, u2 = u * u;
    double tail = -INFINITY;
    BigRational den = poch(P2, P2, cutoff, tail) * poch(u2 * P2, P2, cutoff, tail);
    for (int i = 0; i < 4; ++i) {
        den *= poch(x[i] * x[i], P2, cutoff, tail);
        den *= poch(u2 / (x[i] * x[i]) * P2, P2, cutoff, tail);
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) den *= poch(x[i] * x[j], P, cutoff, tail);
    return {BigRational(1) / den, tail};
}

const std::vector<LambdaTSample>& default_lambda_t_samples() {
    static const std::vector<LambdaTSample> s = {
        {{BigRational(1, 3), BigRational(1, 4), BigRational(1, 5), BigRational(1, 6)}, BigRational(2)},
        {{BigRational(1, 2), BigRational(1, 3), BigRational(2, 7), BigRational(1, 5)}, BigRational(1, 4)},
        {{BigRational(-1, 2), BigRational(1, 3), BigRational(1, 4), BigRational(-2, 5)}, BigRational(-3, 2)},
    };
    return s;
}

CheckReport lambda_t_check(const std::vector<LambdaTSample>& samples, int cutoff) {
    CheckReport rep("lambda_t", cutoff);
    double worst_bound = -INFINITY, worst_err = -INFINITY;
    for (size_t t = 0; t < samples.size(); ++t) {
        const auto& [x, u] = samples[t];
        std::string tag = "sample " + std::to_string(t);
        try {
            ResidueValue lhs = residue_value(x, u, cutoff);
            BigRational P = x[0] * x[1] * x[2] * x[3] / (u * u);
            Point4 y;
            for (int i = 0; i < 4; ++i) y[i] = u / x[i];
            ResidueValue r2 = residue_value(y, u / P, cutoff);
            BigRational rhs = lambda_t(x, u) * r2.value;
            /* |lhs/rhs - 1| <= e^T - 1 <= T e^T with T the summed tails */
            double lt = log10_add(lhs.log10_tail, r2.log10_tail);
            double lb = lt == -INFINITY ? -INFINITY : lt + std::pow(10.0, lt) * std::log10(std::exp(1.0));
            BigRational diff = lhs.value - rhs;
            double le = diff.is_zero() ? -INFINITY : log10_abs(diff) - log10_abs(lhs.value);
            worst_bound = std::max(worst_bound, lb);
            worst_err = std::max(worst_err, le);
            std::ostringstream os;
            os << tag << ": log10 relative error " << le << " above log10 bound " << lb;
            rep.expect(le <= lb, os.str());
            std::ostringstream ob;
            ob << tag << ": log10 bound " << lb << " not below -20";
            rep.expect(lb < -20, ob.str());
        } catch (const std::domain_error& e) {
            rep.expect(false, tag + ": " + e.what());
        }
    }
    auto num = [](double v) { return v == -INFINITY ? nlohmann::json("-inf") : nlohmann::json(v); };
    rep.extra["log10_bound"] = num(worst_bound);
    rep.extra["log10_error"] = num(worst_err);
    return rep;
}

std::vector<int> word_to_alpha5(const Root& alpha) {
    if (!is_real_root(alpha) || !is_positive(alpha))
        throw std::invalid_argument("word_to_alpha5: " + root_str(alpha) + " is not a positive real root");
    const Root a5 = unit(5);
    for (int budget : {4, 8, 16, 32, 64})
        for (auto& e : enumerate_weyl(budget))
            if (act(e.w.action, alpha) == a5) return e.w.word;
    throw std::invalid_argument("word_to_alpha5: no short word found for " + root_str(alpha));
}

ResidueSeries c_alpha_zeta(const Root& alpha, int zeta, int order) {
    if (zeta != 1 && zeta != -1) throw std::invalid_argument("c_alpha_zeta: zeta must be 1 or -1");
    if (!is_real_root(alpha) || !is_positive(alpha) || alpha[4] != 1)
        throw std::invalid_argument("c_alpha_zeta: needs a positive real root with n5 = 1, got " + root_str(alpha));
    auto word = word_to_alpha5(alpha);
    Mat5 w = from_word(word).action;
    CGTerm f = f_w(word);
    auto zpow = [&](int e) { return (e & 1) && zeta < 0 ? BigRational(-1) : BigRational(1); };

    ResidueSeries d = ResidueSeries::one(4, order);
    LaurentPoly cst(1);
    Monomial sh{};
    for (const Factor& fac : f.denominator) {
        Monomial n = act(w, fac.m);
        BigRational c = BigRational(fac.sign) * zpow(n[4]);
        int q = fac.upow - n[4];
        Monomial nb = n;
        nb[4] = 0;
        bool pos = nb[0] >= 0 && nb[1] >= 0 && nb[2] >= 0 && nb[3] >= 0;
        bool neg = nb[0] <= 0 && nb[1] <= 0 && nb[2] <= 0 && nb[3] <= 0;
        if (pos && neg) {
            if (q != 0 || c == BigRational(1))
                throw std::domain_error("c_alpha_zeta: f_w has a pole on the locus");
            cst = cst * LaurentPoly(BigRational(1) / (BigRational(1) - c));
        } else if (pos) {
            d.div_binomial(c, q, nb);
        } else if (neg) {
            /* 1/(1 - c u^q y^nb) = -c^-1 u^-q y^-nb / (1 - c^-1 u^-q y^-nb) */
            cst = cst * LaurentPoly::monomial(-BigRational(1) / c, -q);
            sh = sh - nb;
            d.div_binomial(BigRational(1) / c, -q, (-1) * nb);
        } else {
            throw std::domain_error("c_alpha_zeta: denominator of mixed sign in the w-coordinates");
        }
    }

    std::map<Monomial, LaurentPoly> num;
    for (auto& [m, c] : f.numerator) {
        Monomial n = act(w, m);
        Monomial nb = n + sh;
        nb[4] = 0;
        num[nb] += LaurentPoly(c, -n[4]) * LaurentPoly(zpow(n[4]));
    }
    ResidueSeries top(4, order);
    for (auto& [m, c] : num) {
        if (c.is_zero()) continue;
        if (!is_nonneg(m))
            throw std::domain_error("c_alpha_zeta: f_w is not a power series in the w-coordinates at " +
                                    monomial_str(m, 4));
        top.add_term(m, c);
    }
    ResidueSeries out = mul_trunc(mul_trunc(top, d), residue_closed_form(order));
    LaurentPoly half = cst * LaurentPoly(BigRational(1, 2));
    for (size_t r = 0; r < out.size(); ++r)
        if (!out.at(r).is_zero()) out.at(r) = out.at(r) * half;
    return out;
}

CheckReport c_alpha_dual_route_check(const Root& alpha, int samples, unsigned seed) {
    CheckReport rep("c_alpha_dual_route", 0);
    auto word = word_to_alpha5(alpha);
    CGTerm f = f_w(word);
    LambdaMatrix lam = lambda_tilde_word(word);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> un(-5, 5), ud(3, 9);
    Monomial rest = alpha;
    rest[4] = 0;
    int skipped = 0;
    for (int t = 0; t < samples; ++t) {
        for (int zeta : {1, -1}) {
            Point x = random_point(rng);
            BigRational u(un(rng), ud(rng));
            if (u.is_zero()) u = BigRational(1, 2);
            /* put x on the locus x^alpha = 1/(zeta u) */
            x[4] = BigRational(zeta) / (u * mono_value(rest, x));
            std::string tag = "word " + word_str(word) + " zeta " + std::to_string(zeta);
            try {
                Point y = x;
                for (int i : word) y = reflect_point(i, y);
                rep.expect(u * y[4] == BigRational(zeta), tag + ": w x misses the locus");
                auto m = evaluate(lam, x, u);
                BigRational rhs;
                for (int r = 0; r < 3; ++r) rhs += m[r][0] + BigRational(zeta) * m[r][1];
                rep.expect(f.evaluate(x, u) == rhs, tag + ": f_w differs from the Lambda~ route");
            } catch (const std::domain_error&) {
                ++skipped;
            }
        }
    }
    rep.extra["skipped"] = skipped;
    rep.extra["word"] = word;
    return rep;
}

CheckReport clearance_check(const TruncSeries& zt) {
    const int n = zt.order();
    CheckReport rep("clearance", n);
    TruncSeries c = zt;
    if (n >= 2)
        for (auto& b : positive_real_roots(n / 2)) c.mul_binomial(1, 2, 2 * b);
    int maxu = 0;
    c.for_each([&](const Monomial& m, const UPoly& v) {
        rep.expect(v.has_integer_coeffs(), monomial_str(m) + ": non-integer coefficient " + v.str());
        rep.expect(v.degree() <= total_degree(m),
                   monomial_str(m) + ": u-degree " + std::to_string(v.degree()) + " above the x-degree");
        maxu = std::max(maxu, v.degree());
    });
    rep.extra["max_u_degree"] = maxu;
    return rep;
}

}
