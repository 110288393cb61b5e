#ifndef EXOTIC_CHECKS_HPP
#define EXOTIC_CHECKS_HPP

#include "exotic/common.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace exotic {

struct CheckFailure {
    std::string where; // "global" or "p=.. q=.. k=.."
    std::string check;
    std::string detail;
};

struct SweepReport {
    unsigned max_n = 0;
    std::uint64_t seed = 0;
    unsigned ambient_count = 0;
    unsigned long check_count = 0;
    std::vector<CheckFailure> failures;
    double elapsed_seconds = 0; // never written to the report stream

    bool all_pass() const { return failures.empty(); }
};

// Runs the invariant suites: global property checks once, then the
// per-ambient suite for every (p, q, k) with p >= 1, p + q <= max_n.
// Streamed lines are deterministic for a fixed (max_n, seed) so two runs
// are byte-identical; timing goes only into the returned struct.
SweepReport run_check_sweep(unsigned max_n, std::uint64_t seed, std::ostream* stream);

} // namespace exotic

#endif
