#include "cgd4/rootsys.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cgd4 {

namespace {

constexpr int kCartan[5][5] = {
    {2, 0, 0, 0, -1},
    {0, 2, 0, 0, -1},
    {0, 0, 2, 0, -1},
    {0, 0, 0, 2, -1},
    {-1, -1, -1, -1, 2},
};

void check_gen(int i) {
    if (i < 1 || i > 5) throw std::invalid_argument("generator index must be in 1..5");
}

std::array<int, 25> flat(const Mat5& m) {
    std::array<int, 25> f{};
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) f[r * 5 + c] = m[r][c];
    return f;
}

}

Root simple_root(int i) {
    check_gen(i);
    Root r{};
    r[i - 1] = 1;
    return r;
}

int height(const Root& b) { return b[0] + b[1] + b[2] + b[3] + b[4]; }

int pairing(const Root& a, const Root& b) {
    int s = 0;
    for (int i = 0; i < 5; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < 5; ++j) s += a[i] * kCartan[i][j] * b[j];
    }
    return s;
}

int pairing_simple(const Root& b, int i) {
    check_gen(i);
    int s = 0;
    for (int j = 0; j < 5; ++j) s += b[j] * kCartan[j][i - 1];
    return s;
}

bool adjacent(int i, int j) { return kCartan[i - 1][j - 1] == -1; }

bool is_positive(const Root& b) {
    bool any = false;
    for (int x : b) {
        if (x < 0) return false;
        any |= x > 0;
    }
    return any;
}

bool is_real_root(const Root& b) { return pairing(b, b) == 2; }

Root simple_reflect(int i, const Root& b) {
    Root r = b;
    r[i - 1] -= pairing_simple(b, i);
    return r;
}

Root finite_part(const Root& b) { return b - b[0] * kDelta; }

Mat5 identity_mat() {
    Mat5 m{};
    for (int i = 0; i < 5; ++i) m[i][i] = 1;
    return m;
}

Mat5 reflection_mat(int i) {
    Mat5 m{};
    for (int c = 0; c < 5; ++c) {
        Root col = simple_reflect(i, simple_root(c + 1));
        for (int r = 0; r < 5; ++r) m[r][c] = col[r];
    }
    return m;
}

Mat5 mat_mul(const Mat5& a, const Mat5& b) {
    Mat5 m{};
    for (int r = 0; r < 5; ++r)
        for (int k = 0; k < 5; ++k) {
            if (!a[r][k]) continue;
            for (int c = 0; c < 5; ++c) m[r][c] += a[r][k] * b[k][c];
        }
    return m;
}

Root act(const Mat5& m, const Root& b) {
    Root r{};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) r[i] += m[i][j] * b[j];
    return r;
}

Root column(const Mat5& m, int i) { return {m[0][i - 1], m[1][i - 1], m[2][i - 1], m[3][i - 1], m[4][i - 1]}; }

WeylElement from_word(const std::vector<int>& word) {
    WeylElement w;
    w.word = word;
    w.action = identity_mat();
    w.inverse = identity_mat();
    for (int i : word) {
        check_gen(i);
        w.action = mat_mul(reflection_mat(i), w.action);
        w.inverse = mat_mul(w.inverse, reflection_mat(i));
    }
    w.length = int(word.size());
    return w;
}

std::vector<Root> phi_set(const std::vector<int>& word) {
    std::vector<Root> out;
    Mat5 prefix = identity_mat();
    for (int i : word) {
        check_gen(i);
        Root b = column(prefix, i);
        if (!is_positive(b) || std::find(out.begin(), out.end(), b) != out.end())
            throw std::invalid_argument("phi_set: word is not reduced");
        out.push_back(b);
        prefix = mat_mul(prefix, reflection_mat(i));
    }
    return out;
}

std::vector<EnumeratedElement> enumerate_weyl(int budget) {
    if (budget < 0) throw std::invalid_argument("enumerate_weyl: negative budget");
    std::vector<EnumeratedElement> out;
    EnumeratedElement id;
    id.w = from_word({});
    out.push_back(id);
    size_t layer_begin = 0, layer_end = 1;
    while (layer_begin < layer_end) {
        std::map<std::array<int, 25>, int> seen;
        for (size_t p = layer_begin; p < layer_end; ++p) {
            for (int j = 1; j <= 5; ++j) {
                const auto& par = out[p];
                Root b = column(par.w.inverse, j);
                if (!is_positive(b)) continue;
                int h = par.height_sum + height(b);
                if (h > budget) continue;
                Mat5 inv = mat_mul(par.w.inverse, reflection_mat(j));
                auto key = flat(inv);
                if (seen.count(key)) continue;
                EnumeratedElement e;
                e.w.word = par.w.word;
                e.w.word.push_back(j);
                e.w.inverse = inv;
                e.w.action = mat_mul(reflection_mat(j), par.w.action);
                e.w.length = par.w.length + 1;
                e.phi = par.phi;
                e.phi.push_back(b);
                e.height_sum = h;
                e.parent = int(p);
                e.last = j;
                seen[key] = int(out.size());
                out.push_back(std::move(e));
            }
        }
        layer_begin = layer_end;
        layer_end = out.size();
    }
    return out;
}

const std::vector<Mat5>& finite_weyl_group() {
    static const std::vector<Mat5> group = [] {
        std::vector<Mat5> g{identity_mat()};
        std::map<std::array<int, 25>, int> seen{{flat(g[0]), 0}};
        for (size_t k = 0; k < g.size(); ++k)
            for (int i = 2; i <= 5; ++i) {
                Mat5 m = mat_mul(g[k], reflection_mat(i));
                if (seen.emplace(flat(m), int(g.size())).second) g.push_back(m);
            }
        return g;
    }();
    return group;
}

Mat5 translation_mat(const Root& mu) {
    Mat5 m = identity_mat();
    for (int c = 0; c < 5; ++c) {
        Root fin = finite_part(simple_root(c + 1));
        int s = pairing(mu, fin);
        for (int r = 0; r < 5; ++r) m[r][c] -= s * kDelta[r];
    }
    return m;
}

std::pair<int, int> inversion_height_of_inverse(const Mat5& m) {
    /* beta = alpha + n delta; m beta = m alpha + n delta since m fixes delta */
    int hsum = 0, count = 0;
    const auto& pos = finite_positive_roots();
    for (int sgn : {1, -1}) {
        for (const Root& ap : pos) {
            Root a = sgn * ap;
            Root img = act(m, a);
            int c = img[0];
            Root g = finite_part(img);
            int chi_a = sgn < 0, chi_g = !is_positive(g);
            /* n in [chi_a, chi_g - c - 1] */
            int lo = chi_a, hi = chi_g - c - 1;
            if (hi < lo) continue;
            int k = hi - lo + 1;
            count += k;
            hsum += k * height(a) + 6 * (lo + hi) * k / 2;
        }
    }
    return {hsum, count};
}

std::vector<int> reduced_word_of_inverse(const Mat5& m0) {
    Mat5 m = m0;
    std::vector<int> rev;
    for (;;) {
        int j = 0;
        for (int i = 1; i <= 5 && !j; ++i)
            if (!is_positive(column(m, i))) j = i;
        if (!j) break;
        rev.push_back(j);
        m = mat_mul(m, reflection_mat(j));
        if (rev.size() > 10000) throw std::runtime_error("reduced_word_of_inverse: runaway");
    }
    if (m != identity_mat()) throw std::runtime_error("reduced_word_of_inverse: not in W");
    return {rev.rbegin(), rev.rend()};
}

int translation_length(const Root& lambda, const std::vector<int>& w0word) {
    Mat5 w0 = identity_mat();
    for (int i : w0word) {
        if (i < 2 || i > 5) throw std::invalid_argument("translation_length: w0 must use generators 2..5");
        w0 = mat_mul(reflection_mat(i), w0);
    }
    int total = 0;
    for (const Root& a : finite_positive_roots()) {
        int chi = !is_positive(finite_part(act(w0, a)));
        total += std::abs(pairing(lambda, a) + chi);
    }
    return total;
}

const std::vector<Root>& finite_positive_roots() {
    static const std::vector<Root> roots = [] {
        std::vector<Root> r;
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 1; ++b)
                for (int c = 0; c <= 1; ++c)
                    for (int h = 0; h <= 2; ++h) {
                        Root x{0, a, b, c, h};
                        if (height(x) > 0 && is_real_root(x)) r.push_back(x);
                    }
        std::sort(r.begin(), r.end(), [](const Root& x, const Root& y) {
            return height(x) != height(y) ? height(x) < height(y) : x > y;
        });
        return r;
    }();
    return roots;
}

std::vector<Root> positive_real_roots(int max_height) {
    if (max_height < 1) throw std::invalid_argument("positive_real_roots: max height must be >= 1");
    std::vector<Root> out;
    for (const Root& ap : finite_positive_roots())
        for (int sgn : {1, -1}) {
            Root a = sgn * ap;
            for (int n = sgn < 0; height(a) + 6 * n <= max_height; ++n) out.push_back(a + n * kDelta);
        }
    std::sort(out.begin(), out.end(), [](const Root& x, const Root& y) {
        return height(x) != height(y) ? height(x) < height(y) : x > y;
    });
    return out;
}

}
