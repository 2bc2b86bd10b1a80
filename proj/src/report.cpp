#include "cgd4/report.hpp"

namespace cgd4 {

nlohmann::json CheckReport::to_json() const {
    nlohmann::json j{{"check", check}, {"order", order}, {"status", pass ? "pass" : "fail"}};
    if (!pass) j["firstFailure"] = first_failure;
    if (compared) j["compared"] = compared;
    if (!extra.empty()) j["extra"] = extra;
    return j;
}

bool SuiteReport::pass() const {
    for (auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void SuiteReport::add(CheckReport r, double secs) {
    checks.push_back(std::move(r));
    seconds.push_back(secs);
}

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (size_t k = 0; k < checks.size(); ++k) {
        auto j = checks[k].to_json();
        j["seconds"] = seconds[k];
        arr.push_back(j);
    }
    return {{"suite", suite}, {"status", pass() ? "pass" : "fail"}, {"checks", arr}};
}

}
