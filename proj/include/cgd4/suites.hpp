#pragma once

#include "cgd4/cache.hpp"
#include "cgd4/report.hpp"

#include <string>
#include <vector>

namespace cgd4 {

struct RunConfig {
    int order = 0; /* 0 picks each check's default order */
    std::vector<long> qs{5};
    int dmin = 1, dmax = 3;
    int cutoff = 40;
    std::string cache_dir;
    std::string format = "json";
    int jobs = 1;
};

const std::vector<std::string>& suite_names();
/* throws std::invalid_argument for an unknown suite */
SuiteReport run_suite(const std::string& name, const RunConfig& cfg, Cache& cache);

/* Z_W at u = 0 against the product of (1 - x^{2 beta}) and (1 - x^{2n delta})^4 */
CheckReport macdonald_specialization_check(int order);
/* Z~ mod u^2 = 1 + u (x1 + ... + x5) */
CheckReport low_order_check(const TruncSeries& zt);
/* C_{x1^2 x2^2 x3^2} = -u^4/z + (u^2-1)^3; Z_{W,g} = C_g(x^delta) Z_W for count
 * random small g with C_g != 0 (and a few with C_g = 0); C_g at u = -1 is 0 or +-z^n */
CheckReport cg_algorithm_check(int order, int count, unsigned seed);
/* the residual |M - sum Q_n q^{D/2n}| q^{-D theta/2} stays below one constant C
 * (reported) on [Dlo, Dhi]; whether it is non-increasing is reported alongside */
CheckReport asym_bound_check(long q, int Dlo, int Dhi, double theta);
/* at large q the second term shrinks the residual of the first by 10x or more */
CheckReport asym_refinement_check(long q, int Dlo, int Dhi);

}
