#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "relcalc/fuzzy.hpp"

namespace relcalc {

// Failure model: arcs fail (nodes perfect) vs. nodes fail (arcs perfect).
enum class Mode { AOA, AON };

std::string to_string(Mode mode);

// Undirected arc, stored with u < v.
struct Arc {
    int u = 0;
    int v = 0;
    bool operator==(const Arc&) const = default;
};

// Validated undirected topology with terminal pair (1, n). Immutable after
// construction. Arc index k is the position in the input list, so state
// vector coordinate k always refers to the k-th arc as given.
class Network {
public:
    struct AdjEntry {
        int node = 0;  // neighbor, 1-based
        int arc = 0;   // 0-based arc index
    };

    Network(int node_count, const std::vector<std::pair<int, int>>& arc_list, Mode mode);

    Mode mode() const { return mode_; }
    int node_count() const { return node_count_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    int source() const { return 1; }
    int sink() const { return node_count_; }

    // Number of unreliable components: arcs (AOA) or interior nodes (AON).
    int component_count() const;

    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<AdjEntry>& neighbors(int node) const { return adjacency_[node]; }

    bool operator==(const Network& other) const {
        return node_count_ == other.node_count_ && mode_ == other.mode_ && arcs_ == other.arcs_;
    }

private:
    int node_count_ = 0;
    Mode mode_ = Mode::AOA;
    std::vector<Arc> arcs_;
    std::vector<std::vector<AdjEntry>> adjacency_;  // 1-based, size node_count_+1
};

// One bit per component: per arc (AOA, length m) or per node (AON, length n,
// with bits 1 and n pinned to 1 by every producer).
struct StateVector {
    Mode mode = Mode::AOA;
    std::vector<std::uint8_t> bits;

    bool operator==(const StateVector&) const = default;
    std::string bit_string() const;
};

// Success probability per component id (arc ordinal in AOA, node id in AON).
struct StateDistribution {
    std::map<int, double> entries;

    double probability(int component) const;  // throws when the entry is missing
};

// Coverage and range check: AOA needs every arc 1..m, AON every interior node
// 2..n-1 and nothing else; all probabilities in [0, 1].
void validate_distribution(const Network& net, const StateDistribution& dist);

// Per-component expert ratings, one linguistic value per expert.
struct ExpertRatingSet {
    std::map<int, std::vector<Linguistic>> entries;
};

// Rated ids must be mutable components of the network; every list non-empty
// and of equal length.
void validate_ratings(const Network& net, const ExpertRatingSet& ratings);

// Surviving portion of a network under a state vector.
struct SubgraphView {
    const Network* network = nullptr;
    std::vector<std::uint8_t> node_alive;  // 1-based, size n+1
    std::vector<std::uint8_t> arc_alive;   // 0-based, size m

    std::vector<int> surviving_nodes() const;
    std::vector<int> surviving_arcs() const;
};

SubgraphView vector_subgraph(const Network& net, const StateVector& x);

}  // namespace relcalc
