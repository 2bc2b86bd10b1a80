#include "cgd4/ffield.hpp"

#include "cgd4/asym.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cgd4 {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

void trim(std::vector<long>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::string mpf_str(const mpf_class& x) {
    char* buf = nullptr;
    gmp_asprintf(&buf, "%.20Fe", x.get_mpf_t());
    std::string s(buf);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(buf, s.size() + 1);
    return s;
}

}

Fq::Fq(long q) : q_(q) {
    if (q < 5 || q > (1L << 31) || !is_prime(q) || q % 4 != 1)
        throw std::invalid_argument("F_q needs a prime q = 1 mod 4, got " + std::to_string(q));
}

long Fq::pow(long a, long e) const {
    long r = 1, b = reduce(a);
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

long Fq::inv(long a) const {
    a = reduce(a);
    if (a == 0) throw std::domain_error("F_q: inverse of 0");
    return pow(a, q_ - 2);
}

int Fq::legendre(long a) const {
    a = reduce(a);
    if (a == 0) return 0;
    return pow(a, (q_ - 1) / 2) == 1 ? 1 : -1;
}

FqPoly::FqPoly(std::vector<long> coeffs) : c(std::move(coeffs)) { trim(c); }

FqPoly FqPoly::monic_from_index(const Fq& F, int deg, long index) {
    FqPoly p;
    p.c.assign(deg + 1, 0);
    for (int i = 0; i < deg; ++i) {
        p.c[i] = index % F.q();
        index /= F.q();
    }
    p.c[deg] = 1;
    return p;
}

std::string FqPoly::str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c[i] != 1) os << c[i];
        if (i > 0) os << (c[i] != 1 ? "*" : "") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}

FqPoly add(const Fq& F, const FqPoly& a, const FqPoly& b) {
    std::vector<long> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] = F.add(c[i], b.c[i]);
    return FqPoly(std::move(c));
}

FqPoly sub(const Fq& F, const FqPoly& a, const FqPoly& b) {
    std::vector<long> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] = F.sub(c[i], b.c[i]);
    return FqPoly(std::move(c));
}

FqPoly mul(const Fq& F, const FqPoly& a, const FqPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<long> c(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a.c[i], b.c[j]));
    return FqPoly(std::move(c));
}

FqPoly scale(const Fq& F, const FqPoly& a, long s) {
    std::vector<long> c(a.c);
    for (auto& v : c) v = F.mul(v, F.reduce(s));
    return FqPoly(std::move(c));
}

void divmod(const Fq& F, const FqPoly& a, const FqPoly& b, FqPoly& quo, FqPoly& rem) {
    if (b.is_zero()) throw std::domain_error("F_q[x]: division by zero");
    std::vector<long> r(a.c);
    int db = b.degree();
    std::vector<long> qc(std::max(0, a.degree() - db + 1), 0);
    long li = F.inv(b.lead());
    for (int i = a.degree(); i >= db; --i) {
        long t = F.mul(r[i], li);
        if (t == 0) continue;
        qc[i - db] = t;
        for (int j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(t, b.c[j]));
    }
    quo = FqPoly(std::move(qc));
    rem = FqPoly(std::move(r));
}

FqPoly mod(const Fq& F, const FqPoly& a, const FqPoly& b) {
    FqPoly q, r;
    divmod(F, a, b, q, r);
    return r;
}

FqPoly monic(const Fq& F, const FqPoly& a) {
    if (a.is_zero()) return a;
    return scale(F, a, F.inv(a.lead()));
}

FqPoly gcd(const Fq& F, const FqPoly& a, const FqPoly& b) {
    FqPoly x = a, y = b;
    while (!y.is_zero()) {
        FqPoly r = mod(F, x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(F, x);
}

FqPoly derivative(const Fq& F, const FqPoly& a) {
    std::vector<long> c;
    for (int i = 1; i <= a.degree(); ++i) c.push_back(F.mul(a.c[i], F.reduce(i)));
    return FqPoly(std::move(c));
}

FqPoly pow_mod(const Fq& F, const FqPoly& a, const mpz_class& e, const FqPoly& m) {
    FqPoly r = mod(F, FqPoly::constant(1), m), b = mod(F, a, m);
    for (long i = long(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        r = mod(F, mul(F, r, r), m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(F, mul(F, r, b), m);
    }
    return r;
}

namespace {

void mul_into(const Fq& F, std::vector<FqPoly>& parts, size_t i, const FqPoly& f) {
    if (f.degree() <= 0) return;
    if (parts.size() <= i) parts.resize(i + 1, FqPoly::constant(1));
    parts[i] = mul(F, parts[i], f);
}

/* Yun's loop for the exponents prime to q, then the q-th root of what is left */
std::vector<FqPoly> sqf(const Fq& F, const FqPoly& f) {
    std::vector<FqPoly> parts;
    if (f.degree() <= 0) return parts;
    FqPoly fd = derivative(F, f);
    FqPoly c = gcd(F, f, fd), w, rem;
    divmod(F, f, c, w, rem);
    size_t i = 1;
    while (w.degree() > 0) {
        FqPoly y = gcd(F, w, c), fac, cq;
        divmod(F, w, y, fac, rem);
        mul_into(F, parts, i - 1, monic(F, fac));
        w = y;
        divmod(F, c, y, cq, rem);
        c = cq;
        ++i;
    }
    if (c.degree() > 0) {
        long q = F.q();
        std::vector<long> root;
        for (int k = 0; k * q <= c.degree(); ++k) root.push_back(c.c[k * q]);
        auto sub = sqf(F, monic(F, FqPoly(std::move(root))));
        for (size_t j = 0; j < sub.size(); ++j) mul_into(F, parts, (j + 1) * q - 1, sub[j]);
    }
    for (auto& p : parts)
        if (p.is_zero()) p = FqPoly::constant(1);
    while (!parts.empty() && parts.back().degree() == 0) parts.pop_back();
    return parts;
}

}

std::vector<FqPoly> squarefree_decomposition(const Fq& F, const FqPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("squarefree decomposition of 0");
    return sqf(F, monic(F, d));
}

bool is_squarefree(const Fq& F, const FqPoly& d) {
    if (d.is_zero()) return false;
    if (d.degree() == 0) return true;
    FqPoly fd = derivative(F, d);
    return !fd.is_zero() && gcd(F, d, fd).degree() == 0;
}

SquarefreeSplit squarefree_split(const Fq& F, const FqPoly& d) {
    auto parts = squarefree_decomposition(F, d);
    SquarefreeSplit s{FqPoly::constant(1), FqPoly::constant(1)};
    for (size_t i = 0; i < parts.size(); ++i) {
        int e = int(i) + 1;
        if (e & 1) s.d0 = mul(F, s.d0, parts[i]);
        for (int k = 0; k < e / 2; ++k) s.d1 = mul(F, s.d1, parts[i]);
    }
    return s;
}

void IrreducibleTable::ensure(int deg) {
    while (max_degree() < deg) {
        int k = max_degree() + 1;
        std::vector<FqPoly> out;
        long count = ipow(F_.q(), k);
        for (long idx = 0; idx < count; ++idx) {
            FqPoly p = FqPoly::monic_from_index(F_, k, idx);
            bool irr = true;
            for (int j = 1; irr && 2 * j <= k; ++j)
                for (auto& r : by_deg_[j])
                    if (mod(F_, p, r).is_zero()) {
                        irr = false;
                        break;
                    }
            if (irr) out.push_back(std::move(p));
        }
        by_deg_.push_back(std::move(out));
    }
}

const std::vector<FqPoly>& IrreducibleTable::of_degree(int deg) const {
    if (deg < 0 || deg > max_degree())
        throw std::out_of_range("irreducible table: degree " + std::to_string(deg) + " not built");
    return by_deg_[deg];
}

long count_irreducibles(long q, int n) {
    auto mu = [](int e) {
        int r = 1;
        for (int p = 2; p * p <= e; ++p)
            if (e % p == 0) {
                e /= p;
                if (e % p == 0) return 0;
                r = -r;
            }
        return e > 1 ? -r : r;
    };
    long s = 0;
    for (int e = 1; e <= n; ++e)
        if (n % e == 0) s += mu(e) * ipow(q, n / e);
    return s / n;
}

std::vector<PrimePower> factor(const FqPoly& d, const IrreducibleTable& table) {
    if (!d.is_monic()) throw std::invalid_argument("factor: polynomial must be monic");
    const Fq& F = table.field();
    std::vector<PrimePower> out;
    FqPoly rest = d;
    for (int k = 1; 2 * k <= rest.degree(); ++k) {
        for (auto& p : table.of_degree(k)) {
            int l = 0;
            for (;;) {
                FqPoly q, r;
                divmod(F, rest, p, q, r);
                if (!r.is_zero()) break;
                rest = std::move(q);
                ++l;
            }
            if (l) out.push_back({p, l});
            if (2 * k > rest.degree()) break;
        }
    }
    if (rest.degree() > 0) out.push_back({rest, 1});
    return out;
}

int quad_symbol(const Fq& F, const FqPoly& d, const FqPoly& m) {
    if (!m.is_monic()) throw std::invalid_argument("quad_symbol: m must be monic");
    int res = 1;
    FqPoly a = d, b = m;
    while (b.degree() > 0) {
        a = mod(F, a, b);
        if (a.is_zero()) return 0;
        if (b.degree() & 1) res *= F.legendre(a.lead());
        a = monic(F, a);
        std::swap(a, b);
    }
    return res;
}

int quad_symbol_euler(const Fq& F, const FqPoly& d, const FqPoly& m) {
    if (!m.is_monic() || m.degree() < 1) throw std::invalid_argument("quad_symbol_euler: m must be monic of positive degree");
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), F.q(), m.degree());
    e = (e - 1) / 2;
    FqPoly r = pow_mod(F, d, e, m);
    if (r.is_zero()) return 0;
    if (r.degree() == 0 && r.c[0] == 1) return 1;
    if (r.degree() == 0 && r.c[0] == F.q() - 1) return -1;
    throw std::logic_error("quad_symbol_euler: m is not irreducible");
}

SqrtQNumber LFunctionPoly::at_half() const {
    SqrtQNumber one(q, 1), rq = SqrtQNumber::sqrt_q(q);
    if (rational) return one / (one - rq * SqrtQNumber(q, sgn));
    SqrtQNumber t(q, 0, BigRational(1, q)), tk = one, s(q);
    for (long long v : c) {
        s += tk * SqrtQNumber(q, BigRational(v));
        tk *= t;
    }
    return s;
}

nlohmann::json LFunctionPoly::to_json() const {
    nlohmann::json j;
    j["q"] = q;
    j["rational"] = rational;
    if (rational) j["sgn"] = sgn;
    else j["coeffs"] = c;
    return j;
}

namespace {

long long char_sum(const Fq& F, const FqPoly& d0, int k) {
    long long s = 0;
    long count = ipow(F.q(), k);
    for (long idx = 0; idx < count; ++idx) s += quad_symbol(F, d0, FqPoly::monic_from_index(F, k, idx));
    return s;
}

/* d0 monic squarefree of positive degree */
std::vector<long long> l_coeffs(const Fq& F, const FqPoly& d0, bool direct) {
    int n = d0.degree();
    std::vector<long long> c(n, 0);
    int upto = direct ? n - 1 : (n - 1) / 2;
    for (int k = 0; k <= upto; ++k) c[k] = char_sum(F, d0, k);
    if (direct) return c;
    long q = F.q();
    if (n & 1) {
        int g = (n - 1) / 2;
        for (int k = 0; k < g; ++k) c[2 * g - k] = ipow(q, g - k) * c[k];
    } else {
        /* L = (1 - T) L* with L* of degree 2g palindromic up to q^{g-k} */
        int g = (n - 2) / 2;
        std::vector<long long> e(2 * g + 1, 0);
        long long acc = 0;
        for (int k = 0; k <= g; ++k) e[k] = acc += c[k];
        for (int k = 0; k < g; ++k) e[2 * g - k] = ipow(q, g - k) * e[k];
        for (int k = 0; k <= 2 * g; ++k) c[k] = e[k] - (k ? e[k - 1] : 0);
        c[2 * g + 1] = -e[2 * g];
    }
    return c;
}

}

LFunctionPoly l_function(const Fq& F, const FqPoly& d0, bool direct) {
    if (d0.is_zero()) throw std::invalid_argument("l_function: d0 = 0");
    LFunctionPoly L;
    L.q = F.q();
    if (d0.degree() == 0) {
        L.rational = true;
        L.sgn = F.legendre(d0.c[0]);
        return L;
    }
    if (!d0.is_monic()) throw std::invalid_argument("l_function: d0 must be monic");
    if (!is_squarefree(F, d0)) throw std::invalid_argument("l_function: " + d0.str() + " is not squarefree");
    L.c = l_coeffs(F, d0, direct);
    return L;
}

namespace {

/* P_l(c;u) at c = +-1 and u = q^{-k/2}, memoized */
class PdEval {
public:
    PdEval(long q, const DiagonalSlices& s) : q_(q), s_(s) {}

    const SqrtQNumber& value(int l, int c, int k) {
        auto key = std::make_tuple(l, c, k);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        if (l > s_.dmax) throw std::out_of_range("P_" + std::to_string(l) + " missing from the slices");
        SqrtQNumber u = (k & 1) ? SqrtQNumber(q_, 0, BigRational(1) / BigRational(ipow(q_, (k + 1) / 2)))
                                : SqrtQNumber(q_, BigRational(1) / BigRational(ipow(q_, k / 2)));
        return memo_.emplace(key, eval_upoly(s_.p_at(l, BigRational(c)), u)).first->second;
    }

    void prefill(int D) {
        for (int l = 1; l <= std::min(D, s_.dmax); ++l)
            for (int k = 1; k * l <= D; ++k)
                for (int c : {1, -1}) value(l, c, k);
    }

    SqrtQNumber pd(const Fq& F, const std::vector<PrimePower>& fac, const FqPoly& d0) {
        SqrtQNumber r(q_, 1);
        for (auto& pp : fac) {
            int c = 1;
            if (pp.l % 2 == 0) {
                c = quad_symbol(F, d0, pp.p);
                if (c == 0) throw std::logic_error("p_d_correction: p^l || d with l even divides d0");
            }
            r *= value(pp.l, c, pp.p.degree());
        }
        return r;
    }

    /* lookup only, for use after prefill from several threads */
    SqrtQNumber pd_const(const Fq& F, const std::vector<PrimePower>& fac, const FqPoly& d0) const {
        SqrtQNumber r(q_, 1);
        for (auto& pp : fac) {
            int c = pp.l % 2 == 0 ? quad_symbol(F, d0, pp.p) : 1;
            r *= memo_.at(std::make_tuple(pp.l, c, pp.p.degree()));
        }
        return r;
    }

private:
    long q_;
    const DiagonalSlices& s_;
    std::map<std::tuple<int, int, int>, SqrtQNumber> memo_;
};

FqPoly d0_of(const Fq& F, const std::vector<PrimePower>& fac) {
    FqPoly d0 = FqPoly::constant(1);
    for (auto& pp : fac)
        if (pp.l & 1) d0 = mul(F, d0, pp.p);
    return d0;
}

}

SqrtQNumber p_d_correction(const Fq& F, const std::vector<PrimePower>& fac, const FqPoly& d0,
                           const DiagonalSlices& slices) {
    PdEval ev(F.q(), slices);
    return ev.pd(F, fac, d0);
}

SqrtQNumber p_d_correction(const Fq& F, const FqPoly& d, const DiagonalSlices& slices, IrreducibleTable& table) {
    table.ensure(d.degree() / 2);
    auto fac = factor(d, table);
    return p_d_correction(F, fac, d0_of(F, fac), slices);
}

double moment_cost(long q, int D) {
    double per = 0;
    for (int k = 0; k <= (D - 1) / 2; ++k) per += std::pow(double(q), k);
    return std::pow(double(q), D) * std::max(per, 1.0);
}

SqrtQNumber moment_bruteforce(long q, int D, const DiagonalSlices& slices, int jobs) {
    Fq F(q);
    if (D < 0) throw std::invalid_argument("moment_bruteforce: D < 0");
    if (D > slices.dmax) throw std::out_of_range("moment_bruteforce: slices stop at P_" + std::to_string(slices.dmax));
    IrreducibleTable table(F);
    table.ensure(D / 2);
    PdEval pd(q, slices);
    pd.prefill(D);
    long count = ipow(q, D);
    jobs = std::max(1, std::min<int>(jobs, int(std::min<long>(count, 256))));
    std::vector<SqrtQNumber> part(jobs, SqrtQNumber(q));
    auto work = [&](int t) {
        SqrtQNumber acc(q);
        for (long idx = t; idx < count; idx += jobs) {
            FqPoly d = FqPoly::monic_from_index(F, D, idx);
            auto fac = factor(d, table);
            FqPoly d0 = squarefree_split(F, d).d0;
            if (d0 != d0_of(F, fac)) throw std::logic_error("moment_bruteforce: squarefree split disagrees with factorization of " + d.str());
            SqrtQNumber L = l_function(F, d0).at_half();
            SqrtQNumber L2 = L * L;
            acc += L2 * L2 * pd.pd_const(F, fac, d0);
        }
        part[t] = std::move(acc);
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> th;
        for (int t = 0; t < jobs; ++t) th.emplace_back(work, t);
        for (auto& x : th) x.join();
    }
    SqrtQNumber s(q);
    for (auto& v : part) s += v;
    return s;
}

SqrtQNumber moment_via_series(long q, int D, const DiagonalSlices& slices) {
    if (D < 0) throw std::invalid_argument("moment_via_series: D < 0");
    if (D > slices.dmax) throw std::out_of_range("moment_via_series: slices stop at P_" + std::to_string(slices.dmax));
    SqrtQNumber u = SqrtQNumber::sqrt_q(q), one(q, 1);
    SqrtQNumber v = eval_upoly(slices.p_at(D, BigRational(1)), u);
    if (D % 2 == 0) v = v / (one - u).pow(4);
    return v;
}

nlohmann::json AsymTable::to_json() const {
    nlohmann::json j;
    j["q"] = q;
    j["terms"] = n_terms;
    j["theta"] = theta;
    j["C"] = C;
    j["nonIncreasing"] = non_increasing;
    nlohmann::json rs = nlohmann::json::array();
    for (auto& r : rows)
        rs.push_back({{"D", r.D},
                      {"exact", r.exact.str()},
                      {"exactApprox", r.exact.to_double()},
                      {"predicted", mpf_str(r.predicted)},
                      {"residual", mpf_str(r.residual)},
                      {"normalized", r.normalized}});
    j["rows"] = rs;
    return j;
}

std::string AsymTable::to_csv() const {
    std::ostringstream os;
    os << "D,q,exact,exact_approx,predicted,residual,normalized\n";
    os.precision(17);
    for (auto& r : rows)
        os << r.D << "," << q << ",\"" << r.exact.str() << "\"," << r.exact.to_double() << "," << mpf_str(r.predicted)
           << "," << mpf_str(r.residual) << "," << r.normalized << "\n";
    return os.str();
}

AsymTable asym_compare(long q, int Dlo, int Dhi, int N, double theta, const DiagonalSlices& slices) {
    if (N < 1 || N > 2) throw std::invalid_argument("asym_compare: N must be 1 or 2");
    double lo = 1.0 / (N + 1), hi = 1.0 / N;
    if (theta == 0) theta = (lo + hi) / 2;
    if (!(theta > lo && theta < hi)) throw std::invalid_argument("asym_compare: theta outside (1/(N+1), 1/N)");
    if (Dlo < 1 || Dhi < Dlo) throw std::invalid_argument("asym_compare: bad D range");
    Fq F(q);
    std::vector<QnEvaluator> ev;
    for (int n = 1; n <= N; ++n) ev.emplace_back(n, BigRational(q));
    const int prec = 320;
    mpf_class rq(0, prec);
    rq = sqrt(mpf_class(q, prec));
    AsymTable t;
    t.q = q;
    t.n_terms = N;
    t.theta = theta;
    for (int D = Dlo; D <= Dhi; ++D) {
        AsymRow r;
        r.D = D;
        r.exact = moment_via_series(q, D, slices);
        mpf_class ex(0, prec), pred(0, prec);
        ex = mpf_class(r.exact.a().to_mpq(), prec) + mpf_class(r.exact.b().to_mpq(), prec) * rq;
        for (int n = 1; n <= N; ++n) {
            mpf_class base(rq, prec), pw(1, prec);
            if (n == 2) base = sqrt(base);
            mpf_pow_ui(pw.get_mpf_t(), base.get_mpf_t(), D);
            pred += ev[n - 1].q_n(D) * pw;
        }
        r.predicted = pred;
        r.residual = mpf_class(ex - pred, prec);
        r.normalized = r.residual.get_d() / std::pow(double(q), D * theta / 2);
        t.rows.push_back(std::move(r));
    }
    for (size_t i = 0; i < t.rows.size(); ++i) {
        double a = std::fabs(t.rows[i].normalized);
        t.C = std::max(t.C, a);
        if (i && a > std::fabs(t.rows[i - 1].normalized)) t.non_increasing = false;
    }
    return t;
}

CheckReport quad_symbol_check(long q, int maxdeg, unsigned seed) {
    CheckReport rep("quad_symbol", maxdeg);
    Fq F(q);
    IrreducibleTable table(F);
    table.ensure(maxdeg);
    std::mt19937 rng(seed);
    auto rand_poly = [&](int deg, bool monic_) {
        std::vector<long> c(deg + 1);
        for (auto& v : c) v = long(rng() % q);
        if (monic_) c[deg] = 1;
        else if (c[deg] == 0) c[deg] = 1 + long(rng() % (q - 1));
        return FqPoly(std::move(c));
    };
    /* Euler criterion on every irreducible modulus */
    for (int k = 1; k <= maxdeg; ++k)
        for (auto& m : table.of_degree(k))
            for (int t = 0; t < 4; ++t) {
                FqPoly d = rand_poly(int(rng() % (2 * maxdeg + 1)), false);
                rep.expect(quad_symbol(F, d, m) == quad_symbol_euler(F, d, m),
                           "(" + d.str() + " / " + m.str() + ") against Euler");
            }
    /* composite moduli through the factorization */
    table.ensure(maxdeg);
    for (int t = 0; t < 200; ++t) {
        FqPoly m = rand_poly(1 + int(rng() % maxdeg), true);
        FqPoly d = rand_poly(int(rng() % (2 * maxdeg + 1)), false);
        int prod = 1;
        for (auto& pp : factor(m, table))
            for (int i = 0; i < pp.l; ++i) prod *= quad_symbol_euler(F, d, pp.p);
        rep.expect(quad_symbol(F, d, m) == prod, "(" + d.str() + " / " + m.str() + ") against factored Euler");
    }
    /* reciprocity for coprime monic pairs */
    for (int t = 0; t < 200; ++t) {
        FqPoly a = rand_poly(1 + int(rng() % maxdeg), true), b = rand_poly(1 + int(rng() % maxdeg), true);
        if (gcd(F, a, b).degree() > 0) continue;
        rep.expect(quad_symbol(F, a, b) * quad_symbol(F, b, a) == 1, "reciprocity " + a.str() + ", " + b.str());
    }
    /* chi_d(1) = 1 and the constant rule */
    for (long c = 1; c < q; ++c) {
        rep.expect(quad_symbol(F, FqPoly::constant(c), FqPoly::constant(1)) == 1, "chi(1)");
        FqPoly m = rand_poly(1 + int(rng() % maxdeg), true);
        int s = F.legendre(c);
        rep.expect(quad_symbol(F, FqPoly::constant(c), m) == (m.degree() % 2 ? s : 1), "constant rule " + m.str());
    }
    return rep;
}

CheckReport l_function_check(long q, int maxdeg) {
    CheckReport rep("l_function", maxdeg);
    Fq F(q);
    for (int n = 1; n <= maxdeg; ++n) {
        long count = ipow(q, n);
        for (long idx = 0; idx < count; ++idx) {
            FqPoly d0 = FqPoly::monic_from_index(F, n, idx);
            if (!is_squarefree(F, d0)) continue;
            auto L = l_function(F, d0), Ld = l_function(F, d0, true);
            rep.expect(L.c == Ld.c, "functional equation completion for " + d0.str());
            rep.expect(int(L.c.size()) == n && L.c[0] == 1, "shape for " + d0.str());
            /* degree bound: the character sums vanish from degree deg d0 on */
            rep.expect(char_sum(F, d0, n) == 0, "c_n = 0 for " + d0.str());
        }
    }
    return rep;
}

CheckReport p_d_positivity_check(long q, int maxdeg, const DiagonalSlices& slices) {
    CheckReport rep("p_d_positivity", maxdeg);
    Fq F(q);
    IrreducibleTable table(F);
    table.ensure(maxdeg / 2);
    PdEval pd(q, slices);
    for (int n = 1; n <= maxdeg; ++n) {
        long count = ipow(q, n);
        SqrtQNumber sq = SqrtQNumber(q, 1) / SqrtQNumber::sqrt_q(q).pow(n);
        for (long idx = 0; idx < count; ++idx) {
            FqPoly d = FqPoly::monic_from_index(F, n, idx);
            auto fac = factor(d, table);
            SqrtQNumber v = pd.pd(F, fac, d0_of(F, fac));
            rep.expect(v.sign() >= 0, "P_d < 0 for d = " + d.str());
            if (is_squarefree(F, d)) rep.expect(v == sq, "P_d != |d|^{-1/2} for squarefree " + d.str());
        }
    }
    return rep;
}

CheckReport moment_identity_check(long q, int Dmax, const DiagonalSlices& slices, int jobs) {
    CheckReport rep("moment_identity", Dmax);
    for (int D = 0; D <= Dmax; ++D) {
        SqrtQNumber a = moment_bruteforce(q, D, slices, jobs), b = moment_via_series(q, D, slices);
        rep.expect(a == b, "q = " + std::to_string(q) + ", D = " + std::to_string(D) + ": " + a.str() + " vs " + b.str());
        rep.extra["D" + std::to_string(D)] = a.str();
    }
    return rep;
}

}
