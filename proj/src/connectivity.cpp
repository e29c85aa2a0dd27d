#include "relcalc/connectivity.hpp"

#include <algorithm>
#include <stdexcept>

namespace relcalc {

namespace {

void check_vector(const Network& net, const StateVector& x) {
    if (x.mode != net.mode()) {
        throw std::invalid_argument("state vector mode does not match network mode");
    }
    const std::size_t expected =
        net.mode() == Mode::AOA ? static_cast<std::size_t>(net.arc_count())
                                : static_cast<std::size_t>(net.node_count());
    if (x.bits.size() != expected) {
        throw std::invalid_argument("state vector length does not match network");
    }
    if (net.mode() == Mode::AON && (x.bits.front() != 1 || x.bits.back() != 1)) {
        throw std::invalid_argument("terminal bits must be 1 in node-failure mode");
    }
}

// Whether the step from a visited node across `entry` reaches a surviving
// component: the arc itself in AOA, the target node in AON.
inline bool step_alive(Mode mode, const StateVector& x, const Network::AdjEntry& entry) {
    return mode == Mode::AOA ? x.bits[entry.arc] != 0 : x.bits[entry.node - 1] != 0;
}

}  // namespace

Plsa::Plsa(const Network& net) : net_(&net), stamp_(net.node_count() + 1, 0) {}

bool Plsa::search(const StateVector& x, LayerTrace* out) {
    check_vector(*net_, x);
    const Mode mode = net_->mode();
    const int sink = net_->sink();

    ++epoch_;
    stamp_[net_->source()] = epoch_;
    frontier_.clear();
    frontier_.push_back(net_->source());
    if (out) {
        out->layers.push_back({net_->source()});
    }

    bool connected = false;
    while (!frontier_.empty()) {
        // Sink first: once it qualifies for the next layer the vector is
        // connected and the layer is just {sink}.
        bool sink_joins = false;
        if (stamp_[sink] != epoch_) {
            for (const auto& entry : net_->neighbors(sink)) {
                if (stamp_[entry.node] == epoch_ && step_alive(mode, x, entry)) {
                    sink_joins = true;
                    break;
                }
            }
        }
        if (sink_joins) {
            stamp_[sink] = epoch_;
            if (out) {
                out->layers.push_back({sink});
            }
            connected = true;
            break;
        }

        next_.clear();
        for (int u : frontier_) {
            for (const auto& entry : net_->neighbors(u)) {
                if (stamp_[entry.node] != epoch_ && step_alive(mode, x, entry)) {
                    stamp_[entry.node] = epoch_;
                    next_.push_back(entry.node);
                }
            }
        }
        if (next_.empty()) {
            break;
        }
        std::sort(next_.begin(), next_.end());
        if (out) {
            out->layers.push_back(next_);
        }
        frontier_.swap(next_);
    }

    if (out) {
        out->connected = connected;
        for (int v = 1; v <= net_->node_count(); ++v) {
            if (stamp_[v] == epoch_) {
                out->visited.push_back(v);
            }
        }
    }
    return connected;
}

bool Plsa::connected(const StateVector& x) {
    return search(x, nullptr);
}

LayerTrace Plsa::trace(const StateVector& x) {
    LayerTrace t;
    search(x, &t);
    return t;
}

LayerTrace plsa_aoa(const Network& net, const StateVector& x) {
    if (net.mode() != Mode::AOA) {
        throw std::invalid_argument("plsa_aoa requires an arc-failure network");
    }
    return Plsa(net).trace(x);
}

LayerTrace plsa_aon(const Network& net, const StateVector& x) {
    if (net.mode() != Mode::AON) {
        throw std::invalid_argument("plsa_aon requires a node-failure network");
    }
    return Plsa(net).trace(x);
}

DepthFirst::DepthFirst(const Network& net) : net_(&net), stamp_(net.node_count() + 1, 0) {}

bool DepthFirst::connected(const StateVector& x) {
    check_vector(*net_, x);
    const Mode mode = net_->mode();
    const int sink = net_->sink();

    ++epoch_;
    stack_.clear();
    stack_.push_back(net_->source());
    stamp_[net_->source()] = epoch_;
    while (!stack_.empty()) {
        const int u = stack_.back();
        stack_.pop_back();
        if (u == sink) {
            return true;
        }
        for (const auto& entry : net_->neighbors(u)) {
            if (stamp_[entry.node] != epoch_ && step_alive(mode, x, entry)) {
                stamp_[entry.node] = epoch_;
                stack_.push_back(entry.node);
            }
        }
    }
    return false;
}

bool dfs_connected(const Network& net, const StateVector& x) {
    return DepthFirst(net).connected(x);
}

}  // namespace relcalc
