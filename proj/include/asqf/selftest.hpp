#ifndef ASQF_SELFTEST_HPP
#define ASQF_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace asqf {

struct SuiteResult {
    std::string name;
    std::string status; // PASS, FAIL or SKIPPED
    std::string detail; // failure reason or skip cause
};

struct SelftestConfig {
    /// Suites needing a field of order above this cap report SKIPPED
    /// instead of running; 0 means no cap.
    uint64_t max_qn = 0;
    uint64_t budget = 200000;
    std::string fixtures_dir = "fixtures";
};

/// The ten oracle-agreement suites, in their fixed order. Any exception
/// inside a suite is converted into a FAIL with the message as detail.
std::vector<SuiteResult> run_acceptance_suites(const SelftestConfig& cfg);

} // namespace asqf

#endif
