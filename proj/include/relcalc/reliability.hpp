#pragma once

#include <cstdint>
#include <vector>

#include "relcalc/model.hpp"

namespace relcalc {

struct TraceRow {
    std::uint64_t index = 0;  // 1-based position in enumeration order
    StateVector vector;
    double probability = 0.0;
    bool connected = false;
};

struct ReliabilityReport {
    double reliability = 0.0;
    std::uint64_t total_vectors = 0;
    std::uint64_t connected_vectors = 0;
    std::vector<TraceRow> trace;  // filled only when requested
};

struct ExactOptions {
    bool keep_trace = false;
    int workers = 1;
    int max_bits = 30;  // refuse state spaces above 2^max_bits
};

// Occurrence probability of one state vector: product over mutable
// coordinates of p (bit 1) or 1-p (bit 0), ascending component id. AON
// terminals contribute factor 1.
double vector_probability(const StateVector& x, const StateDistribution& dist);

// Exact two-terminal reliability by full state enumeration: every vector is
// tested with the layered search and the probabilities of connected vectors
// are accumulated with compensated summation. Workers > 1 split the
// enumeration range into contiguous blocks; the merge is deterministic for a
// fixed worker count.
ReliabilityReport exact_reliability(const Network& net, const StateDistribution& dist,
                                    const ExactOptions& options = {});

struct McEstimate {
    double estimate = 0.0;
    std::uint64_t samples = 0;
    double std_error = 0.0;  // sqrt(estimate * (1 - estimate) / samples)
    std::uint64_t seed = 0;
};

// Monte Carlo estimate of the same quantity, verdicts via depth-first
// traversal. Sampling is reproducible: one counter-free generator per worker
// derived from (seed, worker index).
McEstimate mc_reliability(const Network& net, const StateDistribution& dist,
                          std::uint64_t samples, std::uint64_t seed, int workers = 1);

}  // namespace relcalc
