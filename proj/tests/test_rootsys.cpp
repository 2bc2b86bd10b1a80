#include <doctest.h>

#include "cgd4/rootsys.hpp"

#include <map>
#include <random>
#include <set>

using namespace cgd4;

TEST_CASE("simple reflections") {
    CHECK(simple_reflect(1, simple_root(1)) == Root{-1, 0, 0, 0, 0});
    CHECK(simple_reflect(1, simple_root(5)) == Root{1, 0, 0, 0, 1});
    for (int i = 1; i <= 5; ++i) {
        CHECK(simple_reflect(i, kDelta) == kDelta);
        CHECK(act(mat_mul(reflection_mat(i), reflection_mat(i)), Root{3, 1, 4, 1, 5}) == Root{3, 1, 4, 1, 5});
    }
    CHECK(kDelta == kTheta + simple_root(1));
}

TEST_CASE("phi_set") {
    CHECK(phi_set({}).empty());
    auto p = phi_set({1, 5});
    REQUIRE(p.size() == 2);
    CHECK(p[0] == simple_root(1));
    CHECK(p[1] == Root{1, 0, 0, 0, 1});
    for (int i = 1; i <= 5; ++i) CHECK(phi_set({i}) == std::vector<Root>{simple_root(i)});
    CHECK_THROWS(phi_set({2, 2}));
    CHECK_THROWS(phi_set({1, 5, 1, 5, 1, 5}) .size());
}

TEST_CASE("enumerate_weyl small cases") {
    CHECK(enumerate_weyl(0).size() == 1);
    auto els = enumerate_weyl(12);
    std::map<int, int> by_len;
    for (auto& e : els) {
        by_len[e.w.length]++;
        CHECK(int(e.phi.size()) == e.w.length);
        CHECK(act(e.w.action, kDelta) == kDelta);
        CHECK(e.phi == phi_set(e.w.word));
        int h = 0;
        for (auto& b : e.phi) h += height(b);
        CHECK(h == e.height_sum);
        CHECK(mat_mul(e.w.action, e.w.inverse) == identity_mat());
    }
    CHECK(by_len[1] == 5);

    /* brute force over all words of length 2 with matrix dedup */
    std::set<Mat5> len2;
    int words = 0;
    std::set<Mat5> shorter{identity_mat()};
    for (int i = 1; i <= 5; ++i) shorter.insert(reflection_mat(i));
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            Mat5 m = mat_mul(reflection_mat(j), reflection_mat(i));
            if (!shorter.count(m)) {
                len2.insert(m);
                ++words;
            }
        }
    /* 20 ordered words, but commuting pairs coincide: 4 non-commuting pairs
     * give 8 elements, 6 commuting pairs give 6 */
    CHECK(words == 20);
    CHECK(len2.size() == 14);
    int count2 = 0;
    for (auto& e : enumerate_weyl(40))
        if (e.w.length == 2) ++count2;
    CHECK(count2 == 14);
}

TEST_CASE("enumeration is monotone in the budget") {
    auto a = enumerate_weyl(9), b = enumerate_weyl(10);
    std::set<Mat5> sb;
    for (auto& e : b) sb.insert(e.w.inverse);
    for (auto& e : a) CHECK(sb.count(e.w.inverse));
    CHECK(a.size() <= b.size());
    CHECK(enumerate_weyl(12).size() == 201);
    CHECK(enumerate_weyl(20).size() == 612);
}

TEST_CASE("finite Weyl group and translation decomposition") {
    CHECK(finite_weyl_group().size() == 192);
    CHECK(finite_positive_roots().size() == 12);
    /* every element reached by BFS has an inverse of the form v t(mu), and
     * the inversion data computed from the matrix matches the word */
    for (auto& e : enumerate_weyl(14)) {
        auto [h, l] = inversion_height_of_inverse(e.w.inverse);
        CHECK(h == e.height_sum);
        CHECK(l == e.w.length);
        auto word = reduced_word_of_inverse(e.w.inverse);
        CHECK(int(word.size()) == e.w.length);
        CHECK(from_word(word).inverse == e.w.inverse);
    }
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-2, 2), pick(0, 191);
    for (int t = 0; t < 30; ++t) {
        Root mu{0, c(rng), c(rng), c(rng), c(rng)};
        Mat5 m = mat_mul(finite_weyl_group()[pick(rng)], translation_mat(mu));
        auto word = reduced_word_of_inverse(m);
        CHECK(from_word(word).inverse == m);
        CHECK(inversion_height_of_inverse(m).second == int(word.size()));
        /* translation length formula for pure translations */
        if (m == translation_mat(mu)) CHECK(translation_length(mu) == int(word.size()));
        Mat5 tm = translation_mat(mu);
        CHECK(inversion_height_of_inverse(tm).second == translation_length(mu));
    }
}

TEST_CASE("translation_length") {
    CHECK(translation_length(Root{}) == 0);
    CHECK(translation_length(simple_root(5)) == 10);
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int t = 0; t < 20; ++t) {
        Root mu{0, c(rng), c(rng), c(rng), c(rng)};
        CHECK(translation_length(mu) == translation_length(-1 * mu));
    }
}

TEST_CASE("positive_real_roots") {
    CHECK(positive_real_roots(1).size() == 5);
    int finite = 0;
    auto roots = positive_real_roots(30);
    std::set<Root> all(roots.begin(), roots.end());
    for (auto& b : roots) {
        CHECK(is_real_root(b));
        CHECK(is_positive(b));
        if (b[0] == 0) ++finite;
        if (height(b) + 6 <= 30) CHECK(all.count(b + kDelta));
    }
    CHECK(finite == 12);
}
