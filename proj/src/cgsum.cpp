#include "cgd4/cg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cgd4 {

namespace {

void zl_add(ZLaurent& dst, int k, const UPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = dst.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) dst.erase(it);
    }
}

ZLaurent zl_scaled(const ZLaurent& a, const UPoly& c) {
    ZLaurent r;
    for (auto& [k, p] : a) zl_add(r, k, p * c);
    return r;
}

void zl_accumulate(ZLaurent& dst, const ZLaurent& a) {
    for (auto& [k, p] : a) zl_add(dst, k, p);
}

struct CgSolver {
    std::map<Monomial, ZLaurent> memo;

    const ZLaurent& solve(const Monomial& a, int depth) {
        if (auto it = memo.find(a); it != memo.end()) return it->second;
        if (depth > 100000) throw std::logic_error("c_g: runaway recursion");
        auto key = monomial_order_key(a);
        ZLaurent out;
        if (key == std::array<int, 8>{}) {
            /* a = n delta */
            out[a[0]] = UPoly(1);
            return memo[a] = out;
        }
        int i = 0;
        for (int j = 1; j <= 5 && !i; ++j)
            if (2 * a[j - 1] > v_index(a, j)) i = j;
        if (!i) throw std::logic_error("c_g: no descent index for a non-central monomial");
        const int v = v_index(a, i);
        const int e = v - 2 * a[i - 1];  // s_i g = g x_i^e with e < 0
        Root ai = simple_root(i);
        auto check_less = [&](const Monomial& b) {
            if (!(monomial_order_key(b) < key)) throw std::logic_error("c_g: order key did not decrease");
        };
        if (v & 1) {
            /* Z_g = -Z_{x_i s_i g}; g = x_i s_i g forces Z_g = 0 */
            if (e != -1) {
                Monomial b = a + (e + 1) * ai;
                check_less(b);
                out = zl_scaled(solve(b, depth + 1), UPoly(-1));
            }
        } else {
            Monomial lower = a - ai;
            check_less(lower);
            UPoly u = UPoly::u();
            if (e == -2) {
                /* g = x_i^2 s_i g: Z_g = u Z_{g/x_i} */
                out = zl_scaled(solve(lower, depth + 1), u);
            } else {
                Monomial b1 = a + (e + 1) * ai, b2 = a + (e + 2) * ai;
                check_less(b1);
                check_less(b2);
                out = zl_scaled(solve(b1, depth + 1), u);
                zl_accumulate(out, zl_scaled(solve(lower, depth + 1), u));
                zl_accumulate(out, zl_scaled(solve(b2, depth + 1), UPoly(-1)));
            }
        }
        return memo[a] = out;
    }
};

/* lower bound on the inversion heights contributed by the pair +-alpha when
 * <mu, alpha> = c */
int pair_height_bound(int c) {
    int a = std::abs(c);
    return a <= 1 ? 0 : (a - 1) * (3 * a - 5);
}

}

std::string zlaurent_str(const ZLaurent& c) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, p] : c) {
        if (!first) os << " + ";
        first = false;
        os << "(" << p.str() << ")";
        if (k) os << "*z^" << k;
    }
    return os.str();
}

ZLaurent zlaurent_at(const ZLaurent& c, const BigRational& u) {
    ZLaurent r;
    for (auto& [k, p] : c) zl_add(r, k, UPoly(p.eval(u)));
    return r;
}

int v_index(const Monomial& a, int i) {
    int s = 0;
    for (int j = 1; j <= 5; ++j)
        if (adjacent(i, j)) s += a[j - 1];
    return s;
}

std::array<int, 8> monomial_order_key(const Monomial& a) {
    int d1 = a[0] - a[1], d2 = a[4] - a[0] - a[1], d3 = a[2] + a[3] - a[4], d4 = a[2] - a[3];
    std::array<int, 8> k{d1, -d1, d2, -d2, d3, -d3, d4, -d4};
    std::sort(k.begin(), k.end(), std::greater<int>());
    return k;
}

ZLaurent c_g(const Monomial& a) {
    CgSolver s;
    return s.solve(a, 0);
}

std::vector<Mat5> inverses_for_monomial(const Monomial& a, int order) {
    /* w^-1 = v t(mu) with v in W0, mu a finite coroot. Then
     * ht(w^-1 a) = ht(v abar) + 6 a1 - 6 <mu, abar>, and each finite positive
     * alpha contributes at least pair_height_bound(<mu, alpha>) to H(w). */
    const Root abar = finite_part(a);
    const auto& w0 = finite_weyl_group();
    int c1 = 0;
    for (auto& v : w0) c1 = std::max(c1, -height(act(v, abar)));
    const double bcoef = 8 * std::sqrt(72.0) + 6 * std::sqrt(double(std::max(0, pairing(abar, abar))));
    const double cc = -c1 + 6.0 * a[0];
    /* sum of bounds >= 18 Q - 8 sqrt(72 Q), Q = (mu, mu) */
    double disc = bcoef * bcoef + 72.0 * (order - cc);
    std::vector<Mat5> out;
    if (disc < 0) return out;
    double smax = (bcoef + std::sqrt(disc)) / 36.0;
    int rad = int(std::floor(smax / std::sqrt(2.0 - std::sqrt(3.0)))) + 1;
    const auto& pos = finite_positive_roots();
    for (int m2 = -rad; m2 <= rad; ++m2)
        for (int m3 = -rad; m3 <= rad; ++m3)
            for (int m4 = -rad; m4 <= rad; ++m4)
                for (int m5 = -rad; m5 <= rad; ++m5) {
                    Root mu{0, m2, m3, m4, m5};
                    int lb = -c1 + 6 * a[0] - 6 * pairing(mu, abar);
                    for (auto& al : pos) lb += pair_height_bound(pairing(mu, al));
                    if (lb > order) continue;
                    Mat5 t = translation_mat(mu);
                    for (auto& v : w0) {
                        Mat5 m = mat_mul(v, t);
                        int l = inversion_height_of_inverse(m).first + height(act(m, a));
                        if (l <= order) out.push_back(m);
                    }
                }
    return out;
}

}
