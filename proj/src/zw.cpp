#include "cgd4/cg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cgd4 {

namespace {

/* 1|w = sum over parity states s of x^{sum Phi(w)} S_s / 2^l, where s records
 * (|vbar| mod 2, v5 mod 2) for v = sum of delta_k beta_k. Each state series is
 * kept relative to the offset x^{sum Phi(w)} and scaled by 2^l so the
 * coefficients stay integral. Extending the word by beta with sign
 * t = (-1)^{<beta, v>} multiplies by t(u-1)(1+ty)/(1-tuy) (state kept) and
 * t(u+1)(1-ty)/(1-tuy) (state flipped by the parity of beta), y = x^beta. */

struct Overflow {};

inline void kadd(int64_t& a, int64_t b) {
    if (__builtin_add_overflow(a, b, &a)) throw Overflow{};
}
inline void ksub(int64_t& a, int64_t b) {
    if (__builtin_sub_overflow(a, b, &a)) throw Overflow{};
}
inline void kadd(BigRational& a, const BigRational& b) { a += b; }
inline void ksub(BigRational& a, const BigRational& b) { a -= b; }
inline bool kzero(int64_t a) { return a == 0; }
inline bool kzero(const BigRational& a) { return a.is_zero(); }

struct Node {
    int parent = -1;
    Root beta{};
    Root offset{};
    int length = 0;
    int H = 0;
    int rel = -1;  // relative order needed: max over emitting descendants e of budget_e - H_e
    bool emit = false;
    std::vector<int> children;
};

template <class T>
struct States {
    int R = 0, U = 0;
    size_t nr = 0;
    std::array<std::vector<T>, 4> s;
};

struct Tree {
    std::vector<Node> nodes;
    const SimplexIndex* ix = nullptr;  // index covering the largest relative order
};

template <class T>
void step(const Tree& tree, const States<T>& P, const Node& c, States<T>& C) {
    const SimplexIndex& ix = *tree.ix;
    C.R = c.rel;
    C.U = c.length + C.R + 1;
    C.nr = ix.degree_start(C.R + 1);
    const size_t nr = C.nr;
    const int U = C.U, PU = P.U;
    const Root& beta = c.beta;
    std::vector<size_t> pred(nr, SimplexIndex::npos);
    for (size_t r = ix.degree_start(height(beta)); r < nr; ++r) {
        Monomial d = ix.monomial(r) - beta;
        if (is_nonneg(d)) pred[r] = ix.rank(d);
    }
    const int bbar = xbar_degree(beta) & 1, b5 = beta[4] & 1;
    const int flip = (bbar << 1) | b5;
    std::vector<T> t;
    for (int s = 0; s < 4; ++s) {
        if (P.s[s].empty()) continue;
        const int s1 = s >> 1, s2 = s & 1;
        const bool neg = (s1 & b5) ^ (s2 & bbar);
        t.assign(nr * U, T(0));
        const int w = std::min(PU, U);
        for (size_t r = 0; r < nr; ++r)
            for (int k = 0; k < w; ++k) t[r * U + k] = P.s[s][r * PU + k];
        /* divide by (1 - t u y) */
        for (size_t r = 0; r < nr; ++r) {
            size_t p = pred[r];
            if (p == SimplexIndex::npos) continue;
            for (int k = 1; k < U; ++k) {
                const T& v = t[p * U + k - 1];
                if (kzero(v)) continue;
                if (neg) ksub(t[r * U + k], v);
                else kadd(t[r * U + k], v);
            }
        }
        auto& A = C.s[s];
        auto& B = C.s[s ^ flip];
        if (A.empty()) A.assign(nr * U, T(0));
        if (B.empty()) B.assign(nr * U, T(0));
        /* a = T + t T_shift, b = T - t T_shift;
         * A += t(u-1)a, B += t(u+1)b */
        T aprev(0), bprev(0), a(0), b(0);
        for (size_t r = 0; r < nr; ++r) {
            size_t p = pred[r];
            aprev = T(0);
            bprev = T(0);
            for (int k = 0; k < U; ++k) {
                a = t[r * U + k];
                b = a;
                if (p != SimplexIndex::npos) {
                    const T& sh = t[p * U + k];
                    if (neg) {
                        ksub(a, sh);
                        kadd(b, sh);
                    } else {
                        kadd(a, sh);
                        ksub(b, sh);
                    }
                }
                T& ar = A[r * U + k];
                T& br = B[r * U + k];
                if (neg) {
                    ksub(ar, aprev);
                    kadd(ar, a);
                    ksub(br, bprev);
                    ksub(br, b);
                } else {
                    kadd(ar, aprev);
                    ksub(ar, a);
                    kadd(br, bprev);
                    kadd(br, b);
                }
                aprev = a;
                bprev = b;
            }
        }
    }
}

template <class T, class Emit>
void dfs(const Tree& tree, int node, const States<T>& S, Emit& emit) {
    const Node& n = tree.nodes[node];
    if (n.emit) emit(n, S);
    for (int c : n.children) {
        if (tree.nodes[c].rel < 0) continue;
        States<T> C;
        step(tree, S, tree.nodes[c], C);
        dfs(tree, c, C, emit);
    }
}

template <class T, class Emit>
void run_kernel(const Tree& tree, Emit& emit) {
    const Node& root = tree.nodes[0];
    if (root.rel < 0) return;
    States<T> S;
    S.R = root.rel;
    S.U = S.R + 1;
    S.nr = tree.ix->degree_start(S.R + 1);
    S.s[0].assign(S.nr * S.U, T(0));
    S.s[0][0] = T(1);
    dfs(tree, 0, S, emit);
}

/* tree of enumerated elements. Relative degrees only grow along a word, so a
 * node needs the largest relative order among its emitting descendants. */
Tree build_tree(const std::vector<EnumeratedElement>& els, const std::vector<int>& budgets) {
    Tree tree;
    tree.nodes.resize(els.size());
    int maxb = 0;
    for (size_t k = 0; k < els.size(); ++k) {
        Node& n = tree.nodes[k];
        const auto& e = els[k];
        n.parent = e.parent;
        n.length = e.w.length;
        n.H = e.height_sum;
        if (!e.phi.empty()) n.beta = e.phi.back();
        for (auto& b : e.phi) n.offset = n.offset + b;
        n.emit = budgets[k] >= n.H;
        n.rel = n.emit ? budgets[k] - n.H : -1;
        if (e.parent >= 0) tree.nodes[e.parent].children.push_back(int(k));
    }
    for (size_t k = els.size(); k-- > 1;) {
        Node& n = tree.nodes[k];
        Node& p = tree.nodes[n.parent];
        p.rel = std::max(p.rel, n.rel);
    }
    for (auto& n : tree.nodes) maxb = std::max(maxb, n.rel);
    tree.ix = SimplexIndex::get(5, std::max(maxb, 0)).get();
    return tree;
}

template <class T>
TruncSeries z_w_kernel(int order) {
    auto els = enumerate_weyl(order);
    Tree tree = build_tree(els, std::vector<int>(els.size(), order));
    auto full = SimplexIndex::get(5, order);
    const int U = order + 1;
    TruncSeries out(5, order);
    if constexpr (std::is_same_v<T, int64_t>) {
        std::vector<__int128> acc(full->size() * U, 0);
        auto emit = [&](const Node& n, const States<T>& S) {
            for (size_t r = 0; r < S.nr; ++r) {
                size_t tr = full->rank(tree.ix->monomial(r) + n.offset);
                for (int k = 0; k < S.U && k < U; ++k) {
                    __int128 v = 0;
                    for (int s = 0; s < 4; ++s)
                        if (!S.s[s].empty()) v += S.s[s][r * S.U + k];
                    if (!v) continue;
                    v <<= (order - n.length);
                    if (__builtin_add_overflow(acc[tr * U + k], v, &acc[tr * U + k])) throw Overflow{};
                }
            }
        };
        run_kernel<T>(tree, emit);
        __int128 den = __int128(1) << order;
        for (size_t r = 0; r < full->size(); ++r) {
            std::vector<BigRational> c(U);
            for (int k = 0; k < U; ++k) c[k] = BigRational::from_i128(acc[r * U + k], den);
            out.at(r) = UPoly(std::move(c));
        }
    } else {
        std::vector<std::vector<BigRational>> acc(full->size(), std::vector<BigRational>(U));
        auto emit = [&](const Node& n, const States<T>& S) {
            BigRational scale = BigRational(1) / BigRational(2).pow(n.length);
            for (size_t r = 0; r < S.nr; ++r) {
                size_t tr = full->rank(tree.ix->monomial(r) + n.offset);
                for (int k = 0; k < S.U && k < U; ++k) {
                    BigRational v;
                    for (int s = 0; s < 4; ++s)
                        if (!S.s[s].empty()) v += S.s[s][r * S.U + k];
                    if (!v.is_zero()) acc[tr][k].addmul(v, scale);
                }
            }
        };
        run_kernel<T>(tree, emit);
        for (size_t r = 0; r < full->size(); ++r) out.at(r) = UPoly(std::move(acc[r]));
    }
    return out;
}

}

TruncSeries z_w(int order) {
    if (order < 0) throw std::invalid_argument("z_w: negative order");
    try {
        return z_w_kernel<int64_t>(order);
    } catch (const Overflow&) {
        return z_w_kernel<BigRational>(order);
    }
}

TruncSeries z_w_exact_kernel(int order) {
    if (order < 0) throw std::invalid_argument("z_w: negative order");
    return z_w_kernel<BigRational>(order);
}

TruncSeries z_w_reference(int order) {
    TruncSeries out(5, order);
    for (auto& e : enumerate_weyl(order)) out += one_acted(e.w.word).expand(order);
    return out;
}

TruncSeries delta_product(int order) {
    if (order < 0) throw std::invalid_argument("delta_product: negative order");
    TruncSeries s = series_one(order);
    if (order < 2) return s;
    for (const Root& b : positive_real_roots(order / 2)) s.mul_binomial(1, 0, 2 * b);
    for (int n = 1; 12 * n <= order; ++n)
        for (int k = 0; k < 4; ++k) s.mul_binomial(1, 0, (2 * n) * kDelta);
    return s;
}

TruncSeries normalize_zw(const TruncSeries& zw) {
    int order = zw.order();
    TruncSeries s = zw;
    if (order >= 2)
        for (const Root& b : positive_real_roots(order / 2)) s.div_binomial(1, 0, 2 * b);
    for (int n = 1; 12 * n <= order; ++n)
        for (int k = 0; k < 4; ++k) s.div_binomial(1, 0, (2 * n) * kDelta);
    for (int n = 1; 6 * (2 * n - 1) <= order; ++n)
        for (int k = 0; k < 2; ++k) s.div_binomial(1, 2, (2 * n - 1) * kDelta);
    return s;
}

TruncSeries z_tilde(int order) { return normalize_zw(z_w(order)); }

void LaurentSeries::add(const Monomial& m, const UPoly& c) {
    if (c.is_zero() || total_degree(m) > order) return;
    auto [it, fresh] = terms.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

LaurentSeries z_w_g(const Monomial& a, int order) {
    auto inv = inverses_for_monomial(a, order);
    LaurentSeries out;
    out.order = order;
    if (inv.empty()) return out;
    int hmax = 0;
    for (auto& m : inv) hmax = std::max(hmax, inversion_height_of_inverse(m).first);
    auto els = enumerate_weyl(hmax);
    std::set<Mat5> wanted(inv.begin(), inv.end());
    std::vector<int> budgets(els.size(), -1);
    size_t hits = 0;
    for (size_t k = 0; k < els.size(); ++k) {
        int ht = height(act(els[k].w.inverse, a));
        bool sel = els[k].height_sum + ht <= order;
        if (sel != bool(wanted.count(els[k].w.inverse)))
            throw std::logic_error("z_w_g: translation enumeration disagrees with the Weyl enumeration");
        if (sel) {
            budgets[k] = order - ht;
            ++hits;
        }
    }
    if (hits != wanted.size()) throw std::logic_error("z_w_g: element missing from the Weyl enumeration");
    Tree tree = build_tree(els, budgets);
    /* emitting nodes need their own w^-1 a */
    std::vector<Monomial> image(els.size());
    for (size_t k = 0; k < els.size(); ++k) image[k] = act(els[k].w.inverse, a);
    std::map<const Node*, size_t> where;
    for (size_t k = 0; k < tree.nodes.size(); ++k) where[&tree.nodes[k]] = k;
    auto emit_g = [&](const Node& n, const States<BigRational>& S) {
        const Monomial& m = image[where.at(&n)];
        int mbar = xbar_degree(m) & 1, m5 = m[4] & 1;
        BigRational scale = BigRational(1) / BigRational(2).pow(n.length);
        size_t nr = std::min(tree.ix->degree_start(order - height(m) - n.H + 1), S.nr);
        for (size_t r = 0; r < nr; ++r) {
            std::vector<BigRational> c(S.U);
            bool any = false;
            for (int s = 0; s < 4; ++s) {
                if (S.s[s].empty()) continue;
                bool neg = ((s >> 1) & m5) ^ ((s & 1) & mbar);
                for (int k = 0; k < S.U; ++k) {
                    const BigRational& v = S.s[s][r * S.U + k];
                    if (v.is_zero()) continue;
                    if (neg) c[k] -= v;
                    else c[k] += v;
                    any = true;
                }
            }
            if (!any) continue;
            for (auto& x : c) x *= scale;
            out.add(tree.ix->monomial(r) + n.offset + m, UPoly(std::move(c)));
        }
    };
    run_kernel<BigRational>(tree, emit_g);
    return out;
}

LaurentSeries z_w_g_reference(const Monomial& a, int order) {
    LaurentSeries out;
    out.order = order;
    auto inv = inverses_for_monomial(a, order);
    for (auto& m : inv) {
        CGTerm t = monomial_acted(a, reduced_word_of_inverse(m));
        int lo = 0;
        for (auto& [mono, c] : t.numerator) lo = std::min(lo, total_degree(mono));
        int room = order - lo;
        TruncSeries den = expand_factor_list(t.denominator, std::max(room, 0));
        const auto& ix = den.index();
        for (auto& [mono, c] : t.numerator) {
            int rem = order - total_degree(mono);
            if (rem < 0) continue;
            size_t end = ix.degree_start(rem + 1);
            for (size_t r = 0; r < end; ++r)
                if (!den.at(r).is_zero()) out.add(ix.monomial(r) + mono, c * den.at(r));
        }
    }
    return out;
}

LaurentSeries cg_times_zw(const ZLaurent& c, int order) {
    LaurentSeries out;
    out.order = order;
    if (c.empty()) return out;
    int kmin = c.begin()->first;
    int zorder = order - 6 * std::min(kmin, 0);
    TruncSeries z = z_w(zorder);
    for (auto& [k, p] : c) {
        z.for_each([&](const Monomial& m, const UPoly& v) {
            if (total_degree(m) + 6 * k <= order) out.add(m + k * kDelta, p * v);
        });
    }
    return out;
}

}
