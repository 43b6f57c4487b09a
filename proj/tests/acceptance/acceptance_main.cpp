#include <cstdlib>
#include <iostream>

#include "asqf/selftest.hpp"

#ifndef ASQF_FIXTURES_DIR
#define ASQF_FIXTURES_DIR "fixtures"
#endif

int main() {
    asqf::SelftestConfig cfg;
    cfg.fixtures_dir = ASQF_FIXTURES_DIR;
    if (const char* env = std::getenv("ASQF_BUDGET")) cfg.budget = std::strtoull(env, nullptr, 10);

    bool any_fail = false;
    int i = 0;
    for (const asqf::SuiteResult& r : asqf::run_acceptance_suites(cfg)) {
        ++i;
        std::cout << i << ". " << r.name << ": " << r.status;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        if (r.status == "FAIL") any_fail = true;
    }
    std::cout << (any_fail ? "FAIL" : "OK") << "\n";
    return any_fail ? 1 : 0;
}
