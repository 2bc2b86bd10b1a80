#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace cgd4 {

/* outcome of one verification; serialized as {check, order, status, firstFailure?} */
struct CheckReport {
    std::string check;
    int order = 0;
    bool pass = true;
    std::string first_failure;
    /* free-form numbers worth printing (bounds, counts) */
    nlohmann::json extra = nlohmann::json::object();
    size_t compared = 0;

    CheckReport() = default;
    CheckReport(std::string name, int n) : check(std::move(name)), order(n) {}

    /* record a mismatch; only the first witness is kept */
    void fail(const std::string& witness) {
        if (pass) first_failure = witness;
        pass = false;
    }
    void expect(bool ok, const std::string& witness) {
        ++compared;
        if (!ok) fail(witness);
    }
    nlohmann::json to_json() const;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckReport> checks;
    std::vector<double> seconds;

    bool pass() const;
    void add(CheckReport r, double secs);
    nlohmann::json to_json() const;
};

}
