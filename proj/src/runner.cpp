#include "relcalc/runner.hpp"

#include <cinttypes>
#include <cstdio>

#include "relcalc/reliability.hpp"

namespace relcalc {

namespace {

std::string fixed6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

std::string general6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string run(const ProblemFile& problem, const RunOptions& options) {
    const Network net = to_network(problem);

    StateDistribution dist;
    for (const auto& [id, p] : problem.crisp) {
        dist.entries[id] = p;
    }
    std::vector<std::pair<int, Defuzzification>> resolved;
    for (const auto& [id, ratings] : problem.uncertain) {
        const Defuzzification d = resolve_uncertain_component(ratings);
        resolved.emplace_back(id, d);
        dist.entries[id] = d.reliability;
    }

    ExactOptions exact_opts;
    exact_opts.keep_trace = options.trace;
    exact_opts.workers = options.workers;
    exact_opts.max_bits = options.max_bits;
    const ReliabilityReport report = exact_reliability(net, dist, exact_opts);

    std::string out;
    out += "mode " + to_string(net.mode()) + "\n";
    out += "nodes " + std::to_string(net.node_count()) + "\n";
    out += "arcs " + std::to_string(net.arc_count()) + "\n";
    out += "components " + std::to_string(net.component_count()) + " (" +
           std::to_string(problem.crisp.size()) + " crisp, " +
           std::to_string(problem.uncertain.size()) + " rated)\n";

    if (!resolved.empty()) {
        out += "resolution:\n";
        out += "  component      FPS_L      FPS_R        FPS          k        FFR          R\n";
        for (const auto& [id, d] : resolved) {
            out += "  " + pad_left(std::to_string(id), 9);
            out += " " + pad_left(fixed6(d.fps_left), 10);
            out += " " + pad_left(fixed6(d.fps_right), 10);
            out += " " + pad_left(fixed6(d.fps), 10);
            out += " " + pad_left(fixed6(d.k), 10);
            out += " " + pad_left(fixed6(d.ffr), 10);
            out += " " + pad_left(fixed6(d.reliability), 10);
            out += "\n";
        }
    }

    out += "vectors " + std::to_string(report.total_vectors) + "\n";
    out += "connected " + std::to_string(report.connected_vectors) + "\n";

    if (options.trace) {
        out += "trace:\n";
        for (const TraceRow& row : report.trace) {
            char idx[24];
            std::snprintf(idx, sizeof(idx), "%8" PRIu64, row.index);
            out += idx;
            out += "  " + row.vector.bit_string();
            out += "  " + pad_right(row.connected ? general6(row.probability) : "", 12);
            out += row.connected ? "  connected" : "  disconnected";
            out += "\n";
        }
    }

    if (options.mc_samples > 0) {
        const McEstimate mc =
            mc_reliability(net, dist, options.mc_samples, options.seed, options.workers);
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "MC %.6f (std error %.3e, samples %" PRIu64 ", seed %" PRIu64 ")\n",
                      mc.estimate, mc.std_error, mc.samples, mc.seed);
        out += buf;
    }

    out += "R = " + fixed6(report.reliability) + "\n";
    return out;
}

}  // namespace relcalc
