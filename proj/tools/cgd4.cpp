#include "cgd4/asym.hpp"
#include "cgd4/cache.hpp"
#include "cgd4/cg.hpp"
#include "cgd4/ffield.hpp"
#include "cgd4/residue.hpp"
#include "cgd4/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cgd4;

namespace {

constexpr int kOk = 0, kFailed = 1, kConfig = 2;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << "\n";
}

void flush_warnings(Cache& cache) {
    for (auto& w : cache.warnings) std::cerr << "warning: " << w << "\n";
    cache.warnings.clear();
}

void check_qs(const std::vector<long>& qs) {
    for (long q : qs) {
        try {
            Fq F(q);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
}

std::string csv_quote(const std::string& s) {
    std::string r = "\"";
    for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
    return r + "\"";
}

Monomial parse_monomial(const std::string& s) {
    Monomial m{};
    std::stringstream ss(s);
    std::string part;
    int i = 0;
    while (std::getline(ss, part, ',')) {
        if (i >= 5) throw ConfigError("monomial needs exactly 5 exponents: " + s);
        try {
            size_t used = 0;
            m[i++] = std::stoi(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw ConfigError("bad exponent '" + part + "' in " + s);
        }
    }
    if (i != 5) throw ConfigError("monomial needs exactly 5 exponents: " + s);
    return m;
}

int cmd_coeffs(const RunConfig& cfg, Cache& cache, int dmax, const std::string& out) {
    int N = cfg.order > 0 ? cfg.order : 10;
    TruncSeries zt = cache.z_tilde(N);
    flush_warnings(cache);
    if (dmax < 0) dmax = N / 5;
    SlicePolynomials s = extract_slices(zt, dmax);
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "k1,k2,k3,k4,k5,coefficient\n";
        zt.for_each([&](const Monomial& m, const UPoly& c) {
            for (int i = 0; i < 5; ++i) os << m[i] << ",";
            os << csv_quote(c.str()) << "\n";
        });
        emit(os.str(), out);
    } else {
        nlohmann::ordered_json j;
        j["order"] = N;
        j["zTilde"] = nlohmann::json::parse(series_to_json(zt));
        j["slices"] = s.to_json();
        emit(j.dump(), out);
    }
    return kOk;
}

int cmd_verify(const RunConfig& cfg, Cache& cache, const std::string& suite, const std::string& out) {
    SuiteReport rep = run_suite(suite, cfg, cache);
    flush_warnings(cache);
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "suite,check,order,status,seconds,first_failure\n";
        for (size_t i = 0; i < rep.checks.size(); ++i) {
            auto& c = rep.checks[i];
            os << rep.suite << "," << c.check << "," << c.order << "," << (c.pass ? "pass" : "fail") << ","
               << rep.seconds[i] << "," << csv_quote(c.first_failure) << "\n";
        }
        emit(os.str(), out);
    } else {
        emit(rep.to_json().dump(2), out);
    }
    return rep.pass() ? kOk : kFailed;
}

int cmd_moment(const RunConfig& cfg, double budget, const std::string& out) {
    for (long q : cfg.qs)
        for (int D = cfg.dmin; D <= cfg.dmax; ++D) {
            double cost = moment_cost(q, D);
            if (cost > budget) {
                std::ostringstream os;
                os << "refusing q = " << q << ", D = " << D << ": estimated " << cost
                   << " symbol evaluations exceeds the budget of " << budget << " (raise --budget to force)";
                throw ConfigError(os.str());
            }
        }
    DiagonalSlices s = diagonal_slices(cfg.dmax);
    bool all = true;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    std::ostringstream csv;
    csv << "D,q,exact,series,match\n";
    for (long q : cfg.qs)
        for (int D = cfg.dmin; D <= cfg.dmax; ++D) {
            SqrtQNumber a = moment_bruteforce(q, D, s, cfg.jobs), b = moment_via_series(q, D, s);
            bool match = a == b;
            all = all && match;
            csv << D << "," << q << "," << csv_quote(a.str()) << "," << csv_quote(b.str()) << ","
                << (match ? "true" : "false") << "\n";
            rows.push_back({{"D", D}, {"q", q}, {"exact", a.str()}, {"series", b.str()}, {"match", match}});
        }
    if (cfg.format == "csv") emit(csv.str(), out);
    else emit(nlohmann::ordered_json{{"rows", rows}, {"allMatch", all}}.dump(2), out);
    return all ? kOk : kFailed;
}

int cmd_asym(const RunConfig& cfg, int terms, double theta, const std::string& out) {
    DiagonalSlices s = diagonal_slices(cfg.dmax);
    std::string text;
    for (long q : cfg.qs) {
        AsymTable t;
        try {
            t = asym_compare(q, cfg.dmin, cfg.dmax, terms, theta, s);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        if (cfg.format == "csv") {
            std::string c = t.to_csv();
            text += text.empty() ? c : c.substr(c.find('\n') + 1);
        } else {
            text += t.to_json().dump(2) + "\n";
        }
    }
    emit(text, out);
    return kOk;
}

int cmd_cg(const std::string& mono, const std::string& format, const std::string& out) {
    Monomial a = parse_monomial(mono);
    ZLaurent c = c_g(a);
    if (format == "csv") {
        std::ostringstream os;
        os << "z_power,coefficient\n";
        for (auto& [k, p] : c) os << k << "," << csv_quote(p.str()) << "\n";
        emit(os.str(), out);
    } else {
        nlohmann::ordered_json j;
        j["monomial"] = std::vector<int>(a.begin(), a.end());
        j["cg"] = zlaurent_str(c);
        nlohmann::ordered_json terms = nlohmann::ordered_json::object();
        for (auto& [k, p] : c) terms[std::to_string(k)] = p.str();
        j["terms"] = terms;
        emit(j.dump(2), out);
    }
    return kOk;
}

}

int main(int argc, char** argv) {
    CLI::App app{"Weyl group multiple Dirichlet series of type D4^(1): coefficients, checks and moments"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    std::string out, cache_flag;
    app.add_option("--order", cfg.order, "truncation order N (0: per-check default)")->check(CLI::NonNegativeNumber);
    app.add_option("--q", cfg.qs, "field sizes, primes = 1 mod 4")->delimiter(',');
    app.add_option("--dmin", cfg.dmin, "smallest D")->check(CLI::PositiveNumber);
    app.add_option("--dmax", cfg.dmax, "largest D (slice degree)")->check(CLI::NonNegativeNumber);
    app.add_option("--cutoff", cfg.cutoff, "Pochhammer cutoff K")->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", cache_flag, "cache directory (default $CGD4_CACHE_DIR or ~/.cache/cgd4)");
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--out", out, "output file (default stdout)");
    bool no_cache = false;
    app.add_flag("--no-cache", no_cache, "disable the cache");

    auto* coeffs = app.add_subcommand("coeffs", "write the Z~ coefficient table and slice polynomials");
    int slice_dmax = -1;
    coeffs->add_option("--slices", slice_dmax, "slice degree (default order/5)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "suite name")->required();

    auto* moment = app.add_subcommand("moment", "exact moment identity table");
    double budget = 1e9;
    moment->add_option("--budget", budget, "largest admissible symbol-evaluation estimate");

    auto* asym = app.add_subcommand("asym", "exact moments against the asymptotic main terms");
    int terms = 2;
    double theta = 0;
    asym->add_option("--terms", terms, "number of main terms N")->check(CLI::Range(1, 2));
    asym->add_option("--theta", theta, "error exponent in (1/(N+1), 1/N); 0 picks the midpoint");

    auto* cg = app.add_subcommand("cg", "print C_g for a monomial given as 5 exponents a1,...,a5");
    std::string mono;
    cg->add_option("monomial", mono, "e.g. 2,2,2,0,0")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kConfig;
    }

    try {
        check_qs(cfg.qs);
        if (cfg.dmin > cfg.dmax && (moment->parsed() || asym->parsed())) throw ConfigError("--dmin exceeds --dmax");
        Cache cache(no_cache ? std::string() : resolve_cache_dir(cache_flag));
        if (coeffs->parsed()) return cmd_coeffs(cfg, cache, slice_dmax, out);
        if (verify->parsed()) {
            const auto& names = suite_names();
            if (std::find(names.begin(), names.end(), suite) == names.end()) {
                std::string list;
                for (auto& n : names) list += (list.empty() ? "" : ", ") + n;
                throw ConfigError("unknown suite '" + suite + "' (known: " + list + ")");
            }
            return cmd_verify(cfg, cache, suite, out);
        }
        if (moment->parsed()) return cmd_moment(cfg, budget, out);
        if (asym->parsed()) return cmd_asym(cfg, terms, theta, out);
        if (cg->parsed()) return cmd_cg(mono, cfg.format, out);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kConfig;
}
