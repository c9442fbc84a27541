#include "lsq/report.hpp"

#include <sstream>

#include <json.hpp>

namespace lsq {

bool VerificationReport::all_pass() const {
    for (auto& c : checks)
        if (!c.pass) return false;
    return true;
}

size_t VerificationReport::fail_count() const {
    size_t n = 0;
    for (auto& c : checks)
        if (!c.pass) ++n;
    return n;
}

void VerificationReport::add(std::string component, bool pass, std::string witness) {
    checks.push_back({std::move(component), pass, std::move(witness)});
}

void VerificationReport::merge(const VerificationReport& other) {
    for (auto& c : other.checks) checks.push_back(c);
    seconds += other.seconds;
}

std::string VerificationReport::to_json(bool with_timing) const {
    nlohmann::ordered_json j;
    j["claim"] = claim;
    j["range"] = range;
    j["status"] = all_pass() ? "pass" : "fail";
    j["checks"] = nlohmann::ordered_json::array();
    for (auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["component"] = c.component;
        jc["status"] = c.pass ? "pass" : "fail";
        if (!c.pass) jc["witness"] = c.witness;
        j["checks"].push_back(std::move(jc));
    }
    if (with_timing) j["seconds"] = seconds;
    return j.dump(2);
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << claim << " [" << range << "]: ";
    if (all_pass()) {
        os << "pass (" << checks.size() << " checks)";
    } else {
        os << "FAIL (" << fail_count() << " of " << checks.size() << " checks)";
        for (auto& c : checks)
            if (!c.pass) os << "\n  " << c.component << ": " << c.witness;
    }
    return os.str();
}

} // namespace lsq
