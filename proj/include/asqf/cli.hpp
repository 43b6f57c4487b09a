#ifndef ASQF_CLI_HPP
#define ASQF_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace asqf {

/// Everything one invocation carries. Field and ell use the text formats
/// from formats.hpp. Identical configs produce byte-identical output
/// whatever the thread count.
struct RunConfig {
    std::string field;
    std::string ell;
    std::string family;
    uint32_t k = 1;
    uint32_t m = 2;
    uint32_t l = 1;
    uint64_t budget = 200000;
    uint64_t seed = 0;
    unsigned threads = 1;
    bool pretty = false;
    bool oracle = false;
};

/// The engine behind `asqf search`: the finished output lines, metadata
/// first, hits in parameter order. Exposed so tests can compare runs at
/// different thread counts without a process round-trip.
std::vector<std::string> search_lines(const RunConfig& cfg);

/// Command-line entry point; args excludes the program name. Exit codes:
/// 0 ok, 1 selftest failure, 2 input error, 3 internal disagreement.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace asqf

#endif
