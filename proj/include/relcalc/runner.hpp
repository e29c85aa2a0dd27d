#pragma once

#include <cstdint>
#include <string>

#include "relcalc/problem.hpp"

namespace relcalc {

struct RunOptions {
    bool trace = false;
    std::uint64_t mc_samples = 0;  // 0 disables the Monte Carlo cross-check
    std::uint64_t seed = 1;
    int workers = 1;
    int max_bits = 30;
};

// Resolves rated components, runs the exact engine (and the Monte Carlo
// estimator when requested) and renders the full text report. The report is
// byte-identical for identical inputs and options and always ends with the
// line "R = <value>" at six decimals.
std::string run(const ProblemFile& problem, const RunOptions& options = {});

}  // namespace relcalc
