#include "relcalc/reliability.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "relcalc/connectivity.hpp"
#include "relcalc/enumeration.hpp"

namespace relcalc {

namespace {

struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// Success/failure probabilities indexed by mutable coordinate, in ascending
// component-id order so the fast path multiplies exactly like
// vector_probability.
struct ProbTable {
    std::vector<double> up;
    std::vector<double> down;
    int first = 0;  // first mutable coordinate in the bit vector
};

ProbTable make_prob_table(const Network& net, const StateDistribution& dist) {
    ProbTable table;
    const int lo = net.mode() == Mode::AOA ? 1 : 2;
    const int hi = net.mode() == Mode::AOA ? net.arc_count() : net.node_count() - 1;
    table.first = net.mode() == Mode::AOA ? 0 : 1;
    for (int id = lo; id <= hi; ++id) {
        const double p = dist.probability(id);
        table.up.push_back(p);
        table.down.push_back(1.0 - p);
    }
    return table;
}

double fast_probability(const ProbTable& table, const StateVector& x) {
    double prob = 1.0;
    for (std::size_t k = 0; k < table.up.size(); ++k) {
        prob *= x.bits[table.first + k] ? table.up[k] : table.down[k];
    }
    return prob;
}

struct Partial {
    KahanSum sum;
    std::uint64_t connected = 0;
    std::vector<TraceRow> trace;
};

void sum_range(const Network& net, const ProbTable& table, bool keep_trace, std::uint64_t lo,
               std::uint64_t hi, Partial& out) {
    const int length = net.mode() == Mode::AOA ? net.arc_count() : net.node_count();
    BatCursor cursor(net.mode(), length);
    cursor.seek(lo);
    Plsa plsa(net);
    if (keep_trace) {
        out.trace.reserve(hi - lo);
    }
    for (std::uint64_t pos = lo; pos < hi; ++pos) {
        const StateVector& x = cursor.current();
        const double prob = fast_probability(table, x);
        const bool connected = plsa.connected(x);
        if (connected) {
            out.sum.add(prob);
            ++out.connected;
        }
        if (keep_trace) {
            out.trace.push_back({pos + 1, x, prob, connected});
        }
        cursor.advance();
    }
}

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Uniform in [0, 1) from the top 53 bits; avoids the unspecified behavior of
// std::uniform_real_distribution so streams are identical across platforms.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

double vector_probability(const StateVector& x, const StateDistribution& dist) {
    const bool aoa = x.mode == Mode::AOA;
    const int first = aoa ? 1 : 2;
    const int last = aoa ? static_cast<int>(x.bits.size()) : static_cast<int>(x.bits.size()) - 1;
    double prob = 1.0;
    for (int id = first; id <= last; ++id) {
        const double p = dist.probability(id);
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("probability of component " + std::to_string(id) +
                                        " outside [0, 1]");
        }
        prob *= x.bits[id - 1] ? p : 1.0 - p;
    }
    return prob;
}

ReliabilityReport exact_reliability(const Network& net, const StateDistribution& dist,
                                    const ExactOptions& options) {
    validate_distribution(net, dist);
    const int bits = net.component_count();
    if (options.max_bits < 0 || options.max_bits > 62) {
        throw std::invalid_argument("max_bits must be in [0, 62]");
    }
    if (bits > options.max_bits) {
        throw std::invalid_argument("state space of 2^" + std::to_string(bits) +
                                    " vectors exceeds the 2^" + std::to_string(options.max_bits) +
                                    " limit");
    }
    if (net.mode() == Mode::AOA && net.arc_count() < 1) {
        throw std::invalid_argument("arc count must be at least 1");
    }
    if (options.workers < 1) {
        throw std::invalid_argument("worker count must be at least 1");
    }

    const ProbTable table = make_prob_table(net, dist);
    const std::uint64_t total = std::uint64_t{1} << bits;
    const int workers = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(options.workers), total));

    std::vector<Partial> partials(workers);
    if (workers == 1) {
        sum_range(net, table, options.keep_trace, 0, total, partials[0]);
    } else {
        // Contiguous blocks in enumeration order; the merge below is
        // deterministic for a fixed worker count.
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::uint64_t base = total / workers;
        const std::uint64_t rem = total % workers;
        std::uint64_t lo = 0;
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t hi = lo + base + (static_cast<std::uint64_t>(w) < rem ? 1 : 0);
            pool.emplace_back([&, lo, hi, w] {
                sum_range(net, table, options.keep_trace, lo, hi, partials[w]);
            });
            lo = hi;
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    ReliabilityReport report;
    report.total_vectors = total;
    KahanSum merged;
    for (auto& p : partials) {
        merged.add(p.sum.sum);
        merged.add(-p.sum.carry);
        report.connected_vectors += p.connected;
        if (options.keep_trace) {
            report.trace.insert(report.trace.end(), p.trace.begin(), p.trace.end());
        }
    }
    report.reliability = merged.sum;
    return report;
}

McEstimate mc_reliability(const Network& net, const StateDistribution& dist,
                          std::uint64_t samples, std::uint64_t seed, int workers) {
    validate_distribution(net, dist);
    if (samples < 1) {
        throw std::invalid_argument("sample count must be at least 1");
    }
    if (workers < 1) {
        throw std::invalid_argument("worker count must be at least 1");
    }

    const ProbTable table = make_prob_table(net, dist);
    const int length = net.mode() == Mode::AOA ? net.arc_count() : net.node_count();
    const int w = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), samples));

    std::vector<std::uint64_t> hits(w, 0);
    auto draw_range = [&](int worker, std::uint64_t count) {
        std::mt19937_64 rng(splitmix64(seed + 0x9E3779B97F4A7C15ull *
                                                  static_cast<std::uint64_t>(worker)));
        DepthFirst dfs(net);
        StateVector x;
        x.mode = net.mode();
        x.bits.assign(length, 0);
        if (net.mode() == Mode::AON) {
            x.bits.front() = 1;
            x.bits.back() = 1;
        }
        std::uint64_t local = 0;
        for (std::uint64_t s = 0; s < count; ++s) {
            for (std::size_t k = 0; k < table.up.size(); ++k) {
                x.bits[table.first + k] = uniform01(rng) < table.up[k] ? 1 : 0;
            }
            if (dfs.connected(x)) {
                ++local;
            }
        }
        hits[worker] = local;
    };

    const std::uint64_t base = samples / w;
    const std::uint64_t rem = samples % w;
    if (w == 1) {
        draw_range(0, samples);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(w);
        for (int i = 0; i < w; ++i) {
            pool.emplace_back(draw_range, i, base + (static_cast<std::uint64_t>(i) < rem ? 1 : 0));
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    std::uint64_t connected = 0;
    for (auto h : hits) {
        connected += h;
    }
    McEstimate est;
    est.samples = samples;
    est.seed = seed;
    est.estimate = static_cast<double>(connected) / static_cast<double>(samples);
    est.std_error =
        std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(samples));
    return est;
}

}  // namespace relcalc
