#pragma once

#include <string>
#include <vector>

namespace lsq {

struct CheckResult {
    std::string component; // e.g. "(3,1)" or a lemma instance label
    bool pass = true;
    std::string witness;   // empty unless failed
};

struct VerificationReport {
    std::string claim;
    std::string range;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool all_pass() const;
    size_t fail_count() const;
    void add(std::string component, bool pass, std::string witness = {});
    void merge(const VerificationReport& other); // appends other's checks

    // Deterministic JSON rendering; timing omitted unless with_timing.
    std::string to_json(bool with_timing) const;
    // Human-readable summary, one line per failed check plus a total.
    std::string to_text() const;
};

} // namespace lsq
