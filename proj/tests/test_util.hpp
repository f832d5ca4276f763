#pragma once

#include <cstdio>
#include <string>

#include <sys/wait.h>

#include "lighthouse/rng.hpp"

namespace testutil {

/// Seeded generator for hand-rolled property tests.
struct Gen {
    lighthouse::Xoshiro256pp rng;

    explicit Gen(std::uint64_t seed) : rng(lighthouse::Xoshiro256pp::seeded(seed)) {}

    double uniform(double lo, double hi) { return lo + (hi - lo) * rng.next_double(); }
    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(rng.next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

struct CmdResult {
    int exit_code = -1;
    std::string output;
};

/// Run a shell command, capturing stdout (stderr folded in).
inline CmdResult run_cmd(const std::string& cmd) {
    CmdResult res;
    FILE* pipe = ::popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    size_t got;
    while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) res.output.append(buf, got);
    const int status = ::pclose(pipe);
    res.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace testutil
