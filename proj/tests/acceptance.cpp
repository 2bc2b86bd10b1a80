/* one pass/fail line per acceptance criterion; exit status 1 if any fails */
#include "cgd4/asym.hpp"
#include "cgd4/cg.hpp"
#include "cgd4/cocycle.hpp"
#include "cgd4/ffield.hpp"
#include "cgd4/residue.hpp"
#include "cgd4/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace cgd4;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;
    void take(const CheckReport& r) {
        if (!r.pass && pass) note = r.check + ": " + r.first_failure;
        pass = pass && r.pass;
    }
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = f();
    } catch (const std::exception& e) {
        o.pass = false;
        o.note = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %s (%.1fs)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, s, o.note.empty() ? "" : "  ",
                o.note.c_str());
    std::fflush(stdout);
}

Root X(int i) {
    Root r{};
    r[i - 1] = 1;
    return r;
}

}

int main() {
    const TruncSeries z25 = z_tilde(25);
    const TruncSeries z20 = z25.truncated(20), z14 = z25.truncated(14), z12 = z25.truncated(12),
                      z10 = z25.truncated(10);
    const SlicePolynomials s20 = extract_slices(z20, 4);

    criterion(1, "exact moment identity, q in {5, 13}, D <= 3; D = 4 at q = 5 from order-20 slices", [&] {
        Outcome o;
        for (long q : {5L, 13L}) o.take(moment_identity_check(q, 3, diagonal_slices(3), 1));
        DiagonalSlices d4 = diagonal_slices(s20);
        SqrtQNumber a = moment_bruteforce(5, 4, d4), b = moment_via_series(5, 4, d4);
        if (a != b) {
            o.pass = false;
            o.note = "D = 4: " + a.str() + " vs " + b.str();
        }
        return o;
    });
    criterion(2, "Z_W(x;0) = Delta at N = 16", [] {
        Outcome o;
        o.take(macdonald_specialization_check(16));
        return o;
    });
    criterion(3, "W-invariance of Z~ at N = 14", [&] {
        Outcome o;
        o.take(w_invariance_check(z14));
        return o;
    });
    criterion(4, "Z~ mod u^2 = 1 + u(x1 + ... + x5) at N = 10", [&] {
        Outcome o;
        o.take(low_order_check(z10));
        return o;
    });
    criterion(5, "structure axioms at N = 12", [&] {
        Outcome o;
        o.take(axioms_check(z12));
        o.take(oo_vanishing_check(z12));
        return o;
    });
    criterion(6, "palindromy of P_l (l <= 4) and Q_k (|k| <= 6)", [&] {
        Outcome o;
        o.take(slice_structure_check(s20));
        return o;
    });
    criterion(7, "residue identity through degree 8", [&] {
        Outcome o;
        SlicePolynomials s = extract_slices(z25.truncated(16), 1);
        o.take(residue_consistency_check(s, 8));
        o.take(residue_factor_check(s, 8));
        for (const Root& a : {X(5), X(1) + X(5), X(1) + X(2) + X(5)}) o.take(c_alpha_dual_route_check(a, 6, 5));
        return o;
    });
    criterion(8, "u = -1 residue through degree 8; F_MD = Z_W(x;-1) at N = 12", [] {
        Outcome o;
        o.take(u_minus_one_check(8));
        o.take(macdonald_check(12));
        return o;
    });
    criterion(9, "B0/B1 recursion reproduces Z~_1 at N = 10", [&] {
        Outcome o;
        o.take(b0_b1_recursion_check(z10));
        return o;
    });
    criterion(10, "C_g algorithm at N = 10, 10 random monomials", [] {
        Outcome o;
        CheckReport r = cg_algorithm_check(10, 10, 4);
        o.take(r);
        if (o.pass) o.note = "nonzero C_g: " + r.extra["nonzero"].dump() + ", vanishing: " + r.extra["vanishing"].dump();
        return o;
    });
    criterion(11, "positivity of P_l(1;u) through u-degree 30", [&] {
        Outcome o;
        SlicePolynomials s = extract_slices(z25, 5);
        o.take(positivity_check(s, 30));
        o.take(diagonal_slices_check(s, diagonal_slices(5)));
        return o;
    });
    criterion(12, "lambda_t functional equation, K = 40", [] {
        Outcome o;
        CheckReport r = lambda_t_check(default_lambda_t_samples(), 40);
        o.take(r);
        double b = r.extra.value("log10_bound", 0.0);
        if (o.pass && b >= -20) {
            o.pass = false;
            o.note = "tail bound 1e" + std::to_string(b) + " is not below 1e-20";
        } else if (o.pass) {
            o.note = "log10 bound " + std::to_string(b) + ", log10 error " + r.extra["log10_error"].dump();
        }
        return o;
    });
    criterion(13, "asymptotics n = 1, 2 at q = 5", [] {
        Outcome o;
        for (int n : {1, 2}) o.take(leading_term_check(n, 40));
        for (int n : {1, 2}) o.take(q_n_check(n, BigRational(5)));
        CheckReport b = asym_bound_check(5, 3, 8, 0.4);
        o.take(b);
        if (o.pass) o.note = "C = " + b.extra["C"].dump() + ", non-increasing: " + b.extra["nonIncreasing"].dump();
        return o;
    });
    criterion(14, "symmetrization lemma at r = 2", [] {
        Outcome o;
        o.take(sym_sum_residue_check(default_sym_sum_params()));
        return o;
    });
    criterion(15, "denominator clearance at N = 12", [&] {
        Outcome o;
        o.take(clearance_check(z12));
        return o;
    });

    std::printf("%d of 15 criteria failed\n", failures);
    return failures ? 1 : 0;
}
