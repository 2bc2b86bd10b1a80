#include "cgd4/cg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cgd4 {

/* Same parity-state recursion as the full kernel, on series in y = x̄-degree
 * and xi = x5-degree. Each step only multiplies by rational functions of
 * x^beta, so specializing before or after the recursion agrees. */

namespace {

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

struct DNode {
    int parent = -1;
    int ba = 0, bb = 0; /* bidegree of the last root */
    int bbar = 0, b5 = 0;
    int oa = 0, ob = 0; /* bidegree of the offset */
    int length = 0;
    std::vector<int> children;
};

std::vector<DNode> enumerate_diagonal(int xdeg, int ydeg) {
    std::vector<DNode> out(1);
    std::vector<Mat5> inv{identity_mat()};
    size_t lb = 0, le = 1;
    while (lb < le) {
        std::map<std::array<int, 25>, int> seen;
        for (size_t p = lb; p < le; ++p)
            for (int j = 1; j <= 5; ++j) {
                Root b = column(inv[p], j);
                if (!is_positive(b)) continue;
                int ba = xbar_degree(b), bb = b[4];
                if (out[p].oa + ba > ydeg || out[p].ob + bb > xdeg) continue;
                Mat5 m = mat_mul(inv[p], reflection_mat(j));
                std::array<int, 25> key;
                for (int r = 0; r < 5; ++r)
                    for (int c = 0; c < 5; ++c) key[5 * r + c] = m[r][c];
                if (!seen.emplace(key, int(out.size())).second) continue;
                DNode n;
                n.parent = int(p);
                n.ba = ba;
                n.bb = bb;
                n.bbar = ba & 1;
                n.b5 = bb & 1;
                n.oa = out[p].oa + ba;
                n.ob = out[p].ob + bb;
                n.length = out[p].length + 1;
                out[p].children.push_back(int(out.size()));
                out.push_back(n);
                inv.push_back(m);
            }
        lb = le;
        le = out.size();
    }
    return out;
}

template <class T>
struct DStates {
    int RA = 0, RB = 0, U = 0;
    std::array<std::vector<T>, 4> s;
    size_t cell(int a, int b) const { return size_t(b) * (RA + 1) + a; }
};

template <class T>
void dstep(const DStates<T>& P, const DNode& c, int xdeg, int ydeg, DStates<T>& C) {
    C.RA = ydeg - c.oa;
    C.RB = xdeg - c.ob;
    C.U = c.length + C.RA + C.RB + 1;
    const int U = C.U, PU = P.U, w = std::min(PU, U);
    const size_t ncell = size_t(C.RA + 1) * (C.RB + 1);
    std::vector<T> t;
    for (int s = 0; s < 4; ++s) {
        if (P.s[s].empty()) continue;
        const int s1 = s >> 1, s2 = s & 1;
        const bool neg = (s1 & c.b5) ^ (s2 & c.bbar);
        t.assign(ncell * U, T(0));
        for (int b = 0; b <= C.RB; ++b)
            for (int a = 0; a <= C.RA; ++a) {
                size_t pr = P.cell(a, b) * PU, r = C.cell(a, b) * U;
                for (int k = 0; k < w; ++k) t[r + k] = P.s[s][pr + k];
            }
        auto pred = [&](int a, int b) -> long {
            if (a < c.ba || b < c.bb) return -1;
            return long(C.cell(a - c.ba, b - c.bb));
        };
        /* divide by (1 - t u y) */
        for (int b = 0; b <= C.RB; ++b)
            for (int a = 0; a <= C.RA; ++a) {
                long p = pred(a, b);
                if (p < 0) continue;
                size_t r = C.cell(a, b) * U;
                for (int k = 1; k < U; ++k) {
                    const T& v = t[p * U + k - 1];
                    if (kzero(v)) continue;
                    if (neg) ksub(t[r + k], v);
                    else kadd(t[r + k], v);
                }
            }
        const int flip = (c.bbar << 1) | c.b5;
        auto& A = C.s[s];
        auto& B = C.s[s ^ flip];
        if (A.empty()) A.assign(ncell * U, T(0));
        if (B.empty()) B.assign(ncell * U, T(0));
        for (int b = 0; b <= C.RB; ++b)
            for (int a = 0; a <= C.RA; ++a) {
                long p = pred(a, b);
                size_t r = C.cell(a, b) * U;
                T aprev(0), bprev(0), av(0), bv(0);
                for (int k = 0; k < U; ++k) {
                    av = t[r + k];
                    bv = av;
                    if (p >= 0) {
                        const T& sh = t[p * U + k];
                        if (neg) {
                            ksub(av, sh);
                            kadd(bv, sh);
                        } else {
                            kadd(av, sh);
                            ksub(bv, sh);
                        }
                    }
                    T& ar = A[r + k];
                    T& br = B[r + k];
                    if (neg) {
                        ksub(ar, aprev);
                        kadd(ar, av);
                        ksub(br, bprev);
                        ksub(br, bv);
                    } else {
                        kadd(ar, aprev);
                        ksub(ar, av);
                        kadd(br, bprev);
                        kadd(br, bv);
                    }
                    aprev = av;
                    bprev = bv;
                }
            }
    }
}

template <class T>
DiagonalSeries z_w_diagonal(const std::vector<DNode>& nodes, int xdeg, int ydeg) {
    const int U = xdeg + ydeg + 1;
    int maxlen = 0;
    for (auto& n : nodes) maxlen = std::max(maxlen, n.length);
    const size_t ncell = size_t(ydeg + 1) * (xdeg + 1);
    std::vector<std::vector<BigRational>> acc(ncell, std::vector<BigRational>(U));
    std::vector<std::vector<__int128>> iacc;
    if constexpr (std::is_same_v<T, int64_t>) iacc.assign(ncell, std::vector<__int128>(U, 0));

    auto emit = [&](const DNode& n, const DStates<T>& S) {
        BigRational scale = BigRational(1) / BigRational(2).pow(n.length);
        for (int b = 0; b <= S.RB; ++b)
            for (int a = 0; a <= S.RA; ++a) {
                size_t r = S.cell(a, b) * S.U;
                size_t tr = size_t(b + n.ob) * (ydeg + 1) + (a + n.oa);
                for (int k = 0; k < S.U && k < U; ++k) {
                    if constexpr (std::is_same_v<T, int64_t>) {
                        __int128 v = 0;
                        for (int s = 0; s < 4; ++s)
                            if (!S.s[s].empty()) v += S.s[s][r + k];
                        if (!v) continue;
                        v <<= (maxlen - n.length);
                        if (__builtin_add_overflow(iacc[tr][k], v, &iacc[tr][k])) throw Overflow{};
                    } else {
                        BigRational v;
                        for (int s = 0; s < 4; ++s)
                            if (!S.s[s].empty()) v += S.s[s][r + k];
                        if (!v.is_zero()) acc[tr][k].addmul(v, scale);
                    }
                }
            }
    };
    auto dfs = [&](auto& self, int id, const DStates<T>& S) -> void {
        emit(nodes[id], S);
        for (int c : nodes[id].children) {
            DStates<T> C;
            dstep(S, nodes[c], xdeg, ydeg, C);
            self(self, c, C);
        }
    };
    DStates<T> S;
    S.RA = ydeg;
    S.RB = xdeg;
    S.U = U;
    S.s[0].assign(ncell * U, T(0));
    S.s[0][0] = T(1);
    dfs(dfs, 0, S);

    DiagonalSeries out(ydeg, xdeg);
    for (size_t r = 0; r < ncell; ++r) {
        if constexpr (std::is_same_v<T, int64_t>) {
            __int128 den = __int128(1) << maxlen;
            for (int k = 0; k < U; ++k) acc[r][k] = BigRational::from_i128(iacc[r][k], den);
        }
        out.c[r] = UPoly(std::move(acc[r]));
    }
    return out;
}

/* X / (1 - c u^p y^da xi^db) in place */
void diag_div(DiagonalSeries& s, int c, int p, int da, int db) {
    for (int b = db; b <= s.xdeg; ++b)
        for (int a = da; a <= s.ydeg; ++a) {
            const UPoly& v = s.at(a - da, b - db);
            if (v.is_zero()) continue;
            s.at(a, b) += v.shifted(p) * BigRational(c);
        }
}

}

DiagonalSeries::DiagonalSeries(int ydeg_, int xdeg_) : ydeg(ydeg_), xdeg(xdeg_), c(size_t(ydeg_ + 1) * (xdeg_ + 1)) {}

DiagonalSeries z_tilde_diagonal(int xdeg, int ydeg) {
    if (xdeg < 0 || ydeg < 0) throw std::invalid_argument("z_tilde_diagonal: negative degree");
    auto nodes = enumerate_diagonal(xdeg, ydeg);
    DiagonalSeries s;
    try {
        s = z_w_diagonal<int64_t>(nodes, xdeg, ydeg);
    } catch (const Overflow&) {
        s = z_w_diagonal<BigRational>(nodes, xdeg, ydeg);
    }
    for (const Root& b : positive_real_roots((xdeg + ydeg) / 2)) {
        int a = 2 * xbar_degree(b), c = 2 * b[4];
        if (a <= ydeg && c <= xdeg) diag_div(s, 1, 0, a, c);
    }
    for (int n = 1; 8 * n <= ydeg && 4 * n <= xdeg; ++n)
        for (int k = 0; k < 4; ++k) diag_div(s, 1, 0, 8 * n, 4 * n);
    for (int n = 1; 4 * (2 * n - 1) <= ydeg && 2 * (2 * n - 1) <= xdeg; ++n)
        for (int k = 0; k < 2; ++k) diag_div(s, 1, 2, 4 * (2 * n - 1), 2 * (2 * n - 1));
    return s;
}

DiagonalSeries specialize_diagonal(const TruncSeries& zt, int xdeg, int ydeg) {
    DiagonalSeries out(ydeg, xdeg);
    zt.for_each([&](const Monomial& m, const UPoly& v) {
        int a = xbar_degree(m), b = m[4];
        if (a <= ydeg && b <= xdeg) out.at(a, b) += v;
    });
    return out;
}

}
