#pragma once

#include <cstdint>
#include <vector>

#include "relcalc/model.hpp"

namespace relcalc {

// Record of a layered search: node layers Q_0, Q_1, ... grown from the
// source, the accumulated visited set, and the verdict. Layers are pairwise
// disjoint, each kept in ascending node order, and the search stops with the
// layer that contains the sink.
struct LayerTrace {
    std::vector<std::vector<int>> layers;
    std::vector<int> visited;
    bool connected = false;
};

// Layered search over one network with buffers reused across calls. The
// sink's qualification for the next layer is probed before the rest of the
// layer is expanded, so the final layer of a connected trace is {sink}.
class Plsa {
public:
    explicit Plsa(const Network& net);

    bool connected(const StateVector& x);
    LayerTrace trace(const StateVector& x);

private:
    bool search(const StateVector& x, LayerTrace* out);

    const Network* net_;
    std::vector<std::int64_t> stamp_;  // visit epoch per node, 1-based
    std::vector<int> frontier_;
    std::vector<int> next_;
    std::int64_t epoch_ = 0;
};

// Layered connectivity test, arc-failure mode. Cost is O(n + m) per vector.
LayerTrace plsa_aoa(const Network& net, const StateVector& x);

// Layered connectivity test, node-failure mode; terminal bits must be 1.
LayerTrace plsa_aon(const Network& net, const StateVector& x);

// Independent depth-first verdict with the same contract as the layered
// search; used as its oracle.
bool dfs_connected(const Network& net, const StateVector& x);

// Depth-first verdicts with buffers reused across calls.
class DepthFirst {
public:
    explicit DepthFirst(const Network& net);
    bool connected(const StateVector& x);

private:
    const Network* net_;
    std::vector<std::int64_t> stamp_;
    std::vector<int> stack_;
    std::int64_t epoch_ = 0;
};

}  // namespace relcalc
