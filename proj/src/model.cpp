#include "relcalc/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace relcalc {

std::string to_string(Mode mode) {
    return mode == Mode::AOA ? "aoa" : "aon";
}

Network::Network(int node_count, const std::vector<std::pair<int, int>>& arc_list, Mode mode)
    : node_count_(node_count), mode_(mode) {
    if (node_count < 2) {
        throw std::invalid_argument("node count must be at least 2");
    }
    arcs_.reserve(arc_list.size());
    std::set<std::pair<int, int>> seen;
    for (const auto& [i, j] : arc_list) {
        if (i == j) {
            throw std::invalid_argument("self-loop at arc " + std::to_string(i) + "-" +
                                        std::to_string(j));
        }
        if (i < 1 || i > node_count || j < 1 || j > node_count) {
            throw std::invalid_argument("arc endpoint out of range: " + std::to_string(i) + "-" +
                                        std::to_string(j));
        }
        const Arc arc{std::min(i, j), std::max(i, j)};
        if (!seen.insert({arc.u, arc.v}).second) {
            throw std::invalid_argument("duplicate arc " + std::to_string(arc.u) + "-" +
                                        std::to_string(arc.v));
        }
        arcs_.push_back(arc);
    }
    adjacency_.assign(node_count_ + 1, {});
    for (int k = 0; k < static_cast<int>(arcs_.size()); ++k) {
        adjacency_[arcs_[k].u].push_back({arcs_[k].v, k});
        adjacency_[arcs_[k].v].push_back({arcs_[k].u, k});
    }
}

int Network::component_count() const {
    return mode_ == Mode::AOA ? arc_count() : node_count_ - 2;
}

std::string StateVector::bit_string() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

double StateDistribution::probability(int component) const {
    auto it = entries.find(component);
    if (it == entries.end()) {
        throw std::invalid_argument("missing distribution entry for component " +
                                    std::to_string(component));
    }
    return it->second;
}

void validate_distribution(const Network& net, const StateDistribution& dist) {
    const int lo = net.mode() == Mode::AOA ? 1 : 2;
    const int hi = net.mode() == Mode::AOA ? net.arc_count() : net.node_count() - 1;
    for (int id = lo; id <= hi; ++id) {
        const double p = dist.probability(id);  // throws on coverage gaps
        if (!(p >= 0.0 && p <= 1.0)) {          // also rejects NaN
            throw std::invalid_argument("probability of component " + std::to_string(id) +
                                        " outside [0, 1]");
        }
    }
    for (const auto& [id, p] : dist.entries) {
        if (id < lo || id > hi) {
            throw std::invalid_argument("distribution entry for non-component " +
                                        std::to_string(id));
        }
    }
}

void validate_ratings(const Network& net, const ExpertRatingSet& ratings) {
    const int lo = net.mode() == Mode::AOA ? 1 : 2;
    const int hi = net.mode() == Mode::AOA ? net.arc_count() : net.node_count() - 1;
    std::size_t experts = 0;
    for (const auto& [id, list] : ratings.entries) {
        if (id < lo || id > hi) {
            throw std::invalid_argument("ratings for non-component " + std::to_string(id));
        }
        if (list.empty()) {
            throw std::invalid_argument("empty rating list for component " + std::to_string(id));
        }
        if (experts == 0) {
            experts = list.size();
        } else if (list.size() != experts) {
            throw std::invalid_argument("rating list length differs at component " +
                                        std::to_string(id));
        }
    }
}

std::vector<int> SubgraphView::surviving_nodes() const {
    std::vector<int> nodes;
    for (int v = 1; v < static_cast<int>(node_alive.size()); ++v) {
        if (node_alive[v]) {
            nodes.push_back(v);
        }
    }
    return nodes;
}

std::vector<int> SubgraphView::surviving_arcs() const {
    std::vector<int> arcs;
    for (int k = 0; k < static_cast<int>(arc_alive.size()); ++k) {
        if (arc_alive[k]) {
            arcs.push_back(k);
        }
    }
    return arcs;
}

SubgraphView vector_subgraph(const Network& net, const StateVector& x) {
    if (x.mode != net.mode()) {
        throw std::invalid_argument("state vector mode does not match network mode");
    }
    const std::size_t expected =
        net.mode() == Mode::AOA ? static_cast<std::size_t>(net.arc_count())
                                : static_cast<std::size_t>(net.node_count());
    if (x.bits.size() != expected) {
        throw std::invalid_argument("state vector length does not match network");
    }

    SubgraphView view;
    view.network = &net;
    view.node_alive.assign(net.node_count() + 1, 0);
    view.arc_alive.assign(net.arc_count(), 0);
    if (net.mode() == Mode::AOA) {
        std::fill(view.node_alive.begin() + 1, view.node_alive.end(), 1);
        for (int k = 0; k < net.arc_count(); ++k) {
            view.arc_alive[k] = x.bits[k];
        }
    } else {
        for (int v = 1; v <= net.node_count(); ++v) {
            view.node_alive[v] = x.bits[v - 1];
        }
        for (int k = 0; k < net.arc_count(); ++k) {
            const Arc& a = net.arcs()[k];
            view.arc_alive[k] = view.node_alive[a.u] && view.node_alive[a.v];
        }
    }
    return view;
}

}  // namespace relcalc
