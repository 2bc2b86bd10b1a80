#include "cgd4/series.hpp"

#include <json.hpp>

#include <map>
#include <mutex>
#include <sstream>

namespace cgd4 {

std::string monomial_str(const Monomial& m, int nvars) {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < nvars; ++i) {
        if (m[i] == 0) continue;
        if (any) os << "*";
        os << "x" << (i + 1);
        if (m[i] != 1) os << "^" << m[i];
        any = true;
    }
    return any ? os.str() : "1";
}

SimplexIndex::SimplexIndex(int nvars, int order) : nv_(nvars), n_(order) {
    if (nvars < 1 || nvars > 5 || order < 0) throw std::invalid_argument("SimplexIndex: bad shape");
    int top = order + nvars + 2;
    binom_.assign(top + 1, std::vector<size_t>(nvars + 2, 0));
    for (int a = 0; a <= top; ++a) {
        binom_[a][0] = 1;
        for (int b = 1; b <= nvars + 1 && b <= a; ++b)
            binom_[a][b] = binom_[a - 1][b - 1] + (b <= a - 1 ? binom_[a - 1][b] : 0);
    }
    size_t total = binom_[order + nvars][nvars];
    monos_.resize(total);
    degs_.resize(total);
    start_.resize(order + 2);
    for (int d = 0; d <= order + 1; ++d) start_[d] = d == 0 ? 0 : binom_[d - 1 + nvars][nvars];
    Monomial m{};
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == nvars - 1) {
            m[i] = left;
            size_t r = rank(m);
            monos_[r] = m;
            return;
        }
        for (int e = 0; e <= left; ++e) {
            m[i] = e;
            rec(i + 1, left - e);
        }
        m[i] = 0;
    };
    for (int d = 0; d <= order; ++d) rec(0, d);
    for (size_t r = 0; r < total; ++r) degs_[r] = total_degree(monos_[r]);
}

size_t SimplexIndex::rank(const Monomial& m) const {
    size_t r = 0;
    int t = 0;
    for (int i = nv_ - 1; i >= 0; --i) {
        t += m[i];
        int len = nv_ - i;
        if (t > 0) r += binom_[t - 1 + len][len];
    }
    return r;
}

size_t SimplexIndex::find(const Monomial& m) const {
    int d = 0;
    for (int i = 0; i < 5; ++i) {
        if (m[i] < 0 || (i >= nv_ && m[i] != 0)) return npos;
        d += m[i];
    }
    if (d > n_) return npos;
    return rank(m);
}

std::shared_ptr<const SimplexIndex> SimplexIndex::get(int nvars, int order) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const SimplexIndex>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{nvars, order}];
    if (!slot) slot = std::make_shared<SimplexIndex>(nvars, order);
    return slot;
}

TruncSeries series_monomial(int order, const Monomial& m, const UPoly& c) {
    TruncSeries s(5, order);
    s.add_term(m, c);
    return s;
}

TruncSeries invert_unit(const TruncSeries& s) {
    const UPoly& c0 = s.at(0);
    if (c0.degree() != 0) throw std::invalid_argument("invert_unit: constant term is not a nonzero rational");
    BigRational inv = BigRational(1) / c0[0];
    const auto& ix = s.index();
    std::vector<size_t> nz;
    for (size_t j = 1; j < s.size(); ++j)
        if (!s.at(j).is_zero()) nz.push_back(j);
    TruncSeries t(5, s.order());
    t.at(0) = UPoly(inv);
    for (size_t r = 1; r < t.size(); ++r) {
        const Monomial& mr = ix.monomial(r);
        int dr = ix.degree(r);
        UPoly acc;
        for (size_t j : nz) {
            if (ix.degree(j) > dr) break;
            Monomial d = mr - ix.monomial(j);
            if (!is_nonneg(d)) continue;
            const UPoly& tv = t.at(ix.rank(d));
            if (!tv.is_zero()) acc.addmul(s.at(j), tv);
        }
        if (!acc.is_zero()) {
            acc *= -inv;
            t.at(r) = std::move(acc);
        }
    }
    return t;
}

TruncSeries expand_factor_list(const FactorList& f, int order) {
    TruncSeries s = series_one(order);
    for (const auto& fac : f) {
        if (total_degree(fac.m) < 1 || !is_nonneg(fac.m))
            throw std::invalid_argument("expand_factor_list: factor monomial must have positive degree");
        if (total_degree(fac.m) > order) continue;
        s.div_binomial(BigRational(fac.sign), fac.upow, fac.m);
    }
    return s;
}

TruncSeries expand_product(const FactorList& f, int order) {
    TruncSeries s = series_one(order);
    for (const auto& fac : f) {
        if (total_degree(fac.m) < 1 || !is_nonneg(fac.m))
            throw std::invalid_argument("expand_product: factor monomial must have positive degree");
        if (total_degree(fac.m) > order) continue;
        s.mul_binomial(BigRational(fac.sign), fac.upow, fac.m);
    }
    return s;
}

TruncSeries twist_signs(const TruncSeries& s, Twist which) {
    TruncSeries t(s);
    const auto& ix = s.index();
    for (size_t r = 0; r < t.size(); ++r) {
        if (t.at(r).is_zero()) continue;
        const Monomial& m = ix.monomial(r);
        int par = which == Twist::Eps5 ? xbar_degree(m) & 1 : m[4] & 1;
        if (par) t.at(r) = -t.at(r);
    }
    return t;
}

TruncSeries substitute_u(const TruncSeries& s, const BigRational& value) {
    TruncSeries t(5, s.order());
    for (size_t r = 0; r < s.size(); ++r)
        if (!s.at(r).is_zero()) t.at(r) = UPoly(s.at(r).eval(value));
    return t;
}

TruncSeries scale_vars(const TruncSeries& s, const std::array<BigRational, 5>& c) {
    TruncSeries t(s);
    const auto& ix = s.index();
    for (size_t r = 0; r < t.size(); ++r) {
        if (t.at(r).is_zero()) continue;
        const Monomial& m = ix.monomial(r);
        BigRational f(1);
        for (int i = 0; i < 5; ++i) f *= c[i].pow(m[i]);
        t.at(r) *= f;
    }
    return t;
}

TruncSeries mod_u_power(const TruncSeries& s, int k) {
    TruncSeries t(5, s.order());
    for (size_t r = 0; r < s.size(); ++r) {
        const auto& c = s.at(r).coeffs();
        if (c.empty()) continue;
        std::vector<BigRational> v(c.begin(), c.begin() + std::min<size_t>(c.size(), size_t(k)));
        t.at(r) = UPoly(std::move(v));
    }
    return t;
}

bool has_integer_coeffs(const TruncSeries& s) {
    for (size_t r = 0; r < s.size(); ++r)
        if (!s.at(r).has_integer_coeffs()) return false;
    return true;
}

int max_u_degree(const TruncSeries& s) {
    int d = -1;
    for (size_t r = 0; r < s.size(); ++r) d = std::max(d, s.at(r).degree());
    return d;
}

std::string series_to_json(const TruncSeries& s) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["order"] = s.order();
    auto terms = nlohmann::ordered_json::array();
    s.for_each([&](const Monomial& m, const UPoly& c) {
        nlohmann::ordered_json t;
        t["k"] = std::vector<int>(m.begin(), m.end());
        std::vector<std::string> u;
        for (const auto& x : c.coeffs()) u.push_back(x.str());
        t["u"] = u;
        terms.push_back(std::move(t));
    });
    j["terms"] = std::move(terms);
    return j.dump();
}

TruncSeries series_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    int order = j.at("order").get<int>();
    if (order < 0) throw std::invalid_argument("series_from_json: negative order");
    TruncSeries s(5, order);
    for (const auto& t : j.at("terms")) {
        auto k = t.at("k").get<std::vector<int>>();
        if (k.size() != 5) throw std::invalid_argument("series_from_json: monomial needs 5 exponents");
        Monomial m{k[0], k[1], k[2], k[3], k[4]};
        std::vector<BigRational> c;
        for (const auto& x : t.at("u")) c.push_back(BigRational::parse(x.get<std::string>()));
        if (s.index().find(m) == SimplexIndex::npos) throw std::invalid_argument("series_from_json: term out of range");
        s.add_term(m, UPoly(std::move(c)));
    }
    return s;
}

std::string series_str(const TruncSeries& s, size_t max_terms) {
    std::ostringstream os;
    size_t k = 0;
    s.for_each([&](const Monomial& m, const UPoly& c) {
        if (k++ >= max_terms) return;
        if (k > 1) os << " + ";
        os << "(" << c.str() << ")*" << monomial_str(m);
    });
    if (k > max_terms) os << " + ...";
    if (k == 0) os << "0";
    os << " + O(deg " << s.order() + 1 << ")";
    return os.str();
}

}
