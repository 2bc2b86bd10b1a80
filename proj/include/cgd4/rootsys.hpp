#pragma once

#include "cgd4/series.hpp"

#include <array>
#include <functional>
#include <vector>

namespace cgd4 {

/* Root-lattice vector in the simple-root basis alpha1..alpha5 of D4^(1):
 * alpha1 is the affine node, alpha5 the hub, alpha2..alpha4 the other leaves. */
using Root = Monomial;
using Mat5 = std::array<std::array<int, 5>, 5>;

inline constexpr Root kDelta{1, 1, 1, 1, 2};
inline constexpr Root kTheta{0, 1, 1, 1, 2};

Root simple_root(int i);
int height(const Root& b);
/* symmetric bilinear form from the Cartan matrix; (delta, .) = 0 */
int pairing(const Root& a, const Root& b);
/* <b, alpha_i^vee> */
int pairing_simple(const Root& b, int i);
bool adjacent(int i, int j);
bool is_positive(const Root& b);
bool is_real_root(const Root& b);
Root simple_reflect(int i, const Root& b);
/* finite part: b - b1*delta, so the alpha1 coordinate becomes zero */
Root finite_part(const Root& b);

Mat5 identity_mat();
Mat5 reflection_mat(int i);
Mat5 mat_mul(const Mat5& a, const Mat5& b);
Root act(const Mat5& m, const Root& b);
Root column(const Mat5& m, int i);

struct WeylElement {
    std::vector<int> word;  // i1..il, meaning w = s_il ... s_i1
    Mat5 action;            // w acting on roots
    Mat5 inverse;           // w^-1 acting on roots
    int length = 0;
};

WeylElement from_word(const std::vector<int>& word);

/* beta_k = s_i1 ... s_i(k-1) alpha_ik; throws on non-reduced words */
std::vector<Root> phi_set(const std::vector<int>& word);

struct EnumeratedElement {
    WeylElement w;
    std::vector<Root> phi;
    int height_sum = 0;
    int parent = -1;  // index of the element with the word shortened by one
    int last = 0;     // generator appended to the parent's word
};

/* all w with sum of heights over Phi(w) <= budget, in BFS order by length */
std::vector<EnumeratedElement> enumerate_weyl(int budget);

/* the finite Weyl group generated by s2..s5, as matrices on the affine lattice */
const std::vector<Mat5>& finite_weyl_group();
/* translation t(mu): beta -> beta - <mu, finite part of beta> delta */
Mat5 translation_mat(const Root& mu);
/* sum of heights of {beta > 0 : m beta < 0} and its size, for m = w^-1 */
std::pair<int, int> inversion_height_of_inverse(const Mat5& m);
/* a reduced word i1..il for w given m = w^-1 (peeling left descents) */
std::vector<int> reduced_word_of_inverse(const Mat5& m);

/* length of w0 t(lambda) = sum over finite positive alpha of |<lambda,alpha> + chi(w0 alpha)| */
int translation_length(const Root& lambda, const std::vector<int>& w0word = {});

/* the 12 positive roots of D4 (alpha1-coordinate zero) */
const std::vector<Root>& finite_positive_roots();
std::vector<Root> positive_real_roots(int max_height);

}
