#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "relcalc/runner.hpp"

namespace {

constexpr const char* kUsage =
    "usage: relcalc <file> [--trace] [--mc <samples>] [--seed <int>]\n"
    "               [--workers <int>] [--max-bits <int>]\n"
    "\n"
    "Computes the exact two-terminal reliability of the network described in\n"
    "<file>. Expert-rated components are first resolved to crisp\n"
    "reliabilities through the fuzzy preprocessing pipeline.\n"
    "\n"
    "  --trace           print one row per enumerated state vector\n"
    "  --mc <samples>    add a Monte Carlo cross-check with that many samples\n"
    "  --seed <int>      seed for the Monte Carlo sampler (default 1)\n"
    "  --workers <int>   parallel workers for enumeration and sampling\n"
    "  --max-bits <int>  refuse state spaces above 2^max-bits (default 30)\n";

std::uint64_t parse_count(const std::string& flag, const char* value) {
    try {
        const std::string text(value);
        std::size_t used = 0;
        const unsigned long long v = std::stoull(text, &used);
        if (used != text.size() || text.find('-') != std::string::npos) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("invalid value for " + flag + ": '" + value + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::string path;
    relcalc::RunOptions options;

    try {
        for (int i = 1; i < argc; ++i) {
            const std::string arg = argv[i];
            auto next = [&](const std::string& flag) -> const char* {
                if (i + 1 >= argc) {
                    throw std::runtime_error("missing value for " + flag);
                }
                return argv[++i];
            };
            if (arg == "-h" || arg == "--help") {
                std::cout << kUsage;
                return 0;
            } else if (arg == "--trace") {
                options.trace = true;
            } else if (arg == "--mc") {
                options.mc_samples = parse_count(arg, next(arg));
            } else if (arg == "--seed") {
                options.seed = parse_count(arg, next(arg));
            } else if (arg == "--workers") {
                options.workers = static_cast<int>(parse_count(arg, next(arg)));
            } else if (arg == "--max-bits") {
                options.max_bits = static_cast<int>(parse_count(arg, next(arg)));
            } else if (!arg.empty() && arg[0] == '-') {
                throw std::runtime_error("unknown option '" + arg + "'");
            } else if (path.empty()) {
                path = arg;
            } else {
                throw std::runtime_error("unexpected argument '" + arg + "'");
            }
        }
        if (path.empty()) {
            std::cerr << kUsage;
            return 1;
        }

        std::ifstream file(path);
        if (!file) {
            throw std::runtime_error("cannot open '" + path + "'");
        }
        std::ostringstream text;
        text << file.rdbuf();

        const relcalc::ProblemFile problem = relcalc::parse_problem(text.str());
        std::cout << relcalc::run(problem, options);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "relcalc: error: " << e.what() << "\n";
        return 1;
    }
}
