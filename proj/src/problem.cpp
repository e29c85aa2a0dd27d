#include "relcalc/problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>

namespace relcalc {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return s;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        tokens.push_back(tok);
    }
    return tokens;
}

std::optional<int> parse_int(const std::string& tok) {
    int value = 0;
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        return std::nullopt;
    }
    return value;
}

std::optional<double> parse_double(const std::string& tok) {
    double value = 0.0;
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        return std::nullopt;
    }
    return value;
}

std::string format_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

ParseError::ParseError(const std::string& message) : std::runtime_error(message) {}

ProblemFile parse_problem(const std::string& text) {
    ProblemFile problem;
    bool mode_seen = false;
    bool nodes_seen = false;
    std::vector<int> arc_lines;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        const auto tokens = tokenize(raw);
        if (tokens.empty()) {
            continue;
        }
        const std::string keyword = lower(tokens[0]);

        if (keyword == "mode") {
            if (mode_seen) {
                throw ParseError(line_no, "duplicate mode directive");
            }
            if (tokens.size() != 2) {
                throw ParseError(line_no, "expected: mode aoa|aon");
            }
            const std::string value = lower(tokens[1]);
            if (value == "aoa") {
                problem.mode = Mode::AOA;
            } else if (value == "aon") {
                problem.mode = Mode::AON;
            } else {
                throw ParseError(line_no, "unknown mode '" + tokens[1] + "'");
            }
            mode_seen = true;
        } else if (keyword == "nodes") {
            if (nodes_seen) {
                throw ParseError(line_no, "duplicate nodes directive");
            }
            const auto n = tokens.size() == 2 ? parse_int(tokens[1]) : std::nullopt;
            if (!n) {
                throw ParseError(line_no, "expected: nodes <count>");
            }
            problem.node_count = *n;
            nodes_seen = true;
        } else if (keyword == "arc") {
            const auto i = tokens.size() == 3 ? parse_int(tokens[1]) : std::nullopt;
            const auto j = tokens.size() == 3 ? parse_int(tokens[2]) : std::nullopt;
            if (!i || !j) {
                throw ParseError(line_no, "expected: arc <i> <j>");
            }
            problem.arcs.emplace_back(*i, *j);
            arc_lines.push_back(line_no);
        } else if (keyword == "reliability") {
            if (tokens.size() != 4 || tokens[2] != "=") {
                throw ParseError(line_no, "expected: reliability <component> = <p>");
            }
            const auto id = parse_int(tokens[1]);
            const auto p = parse_double(tokens[3]);
            if (!id || !p) {
                throw ParseError(line_no, "expected: reliability <component> = <p>");
            }
            problem.crisp.emplace_back(*id, *p);
        } else if (keyword == "ratings") {
            if (tokens.size() < 4 || tokens[2] != "=") {
                throw ParseError(line_no, "expected: ratings <component> = <tok> [<tok> ...]");
            }
            const auto id = parse_int(tokens[1]);
            if (!id) {
                throw ParseError(line_no, "expected: ratings <component> = <tok> [<tok> ...]");
            }
            std::vector<Linguistic> list;
            for (std::size_t t = 3; t < tokens.size(); ++t) {
                const auto v = linguistic_from_token(tokens[t]);
                if (!v) {
                    throw ParseError(line_no, "component " + std::to_string(*id) +
                                                  ": unknown linguistic token '" + tokens[t] +
                                                  "'");
                }
                list.push_back(*v);
            }
            problem.uncertain.emplace_back(*id, std::move(list));
        } else {
            throw ParseError(line_no, "unknown directive '" + tokens[0] + "'");
        }
    }

    if (!mode_seen) {
        throw ParseError("missing mode directive");
    }
    if (!nodes_seen) {
        throw ParseError("missing nodes directive");
    }
    if (problem.node_count < 2) {
        throw ParseError("node count must be at least 2");
    }

    // Topology checks against the declared node count, citing the arc's line.
    std::set<std::pair<int, int>> seen_arcs;
    for (std::size_t k = 0; k < problem.arcs.size(); ++k) {
        const auto [i, j] = problem.arcs[k];
        if (i == j) {
            throw ParseError(arc_lines[k], "self-loop arc " + std::to_string(i) + "-" +
                                               std::to_string(j));
        }
        if (i < 1 || i > problem.node_count || j < 1 || j > problem.node_count) {
            throw ParseError(arc_lines[k], "arc endpoint out of range: " + std::to_string(i) +
                                               "-" + std::to_string(j));
        }
        if (!seen_arcs.insert({std::min(i, j), std::max(i, j)}).second) {
            throw ParseError(arc_lines[k], "duplicate arc " + std::to_string(i) + "-" +
                                               std::to_string(j));
        }
    }

    // Every mutable component in exactly one of crisp / uncertain.
    const int lo = problem.mode == Mode::AOA ? 1 : 2;
    const int hi = problem.mode == Mode::AOA ? static_cast<int>(problem.arcs.size())
                                             : problem.node_count - 1;
    std::set<int> covered;
    auto claim = [&](int id) {
        if (id < lo || id > hi) {
            throw ParseError("component " + std::to_string(id) +
                             (problem.mode == Mode::AON && (id == 1 || id == problem.node_count)
                                  ? ": terminal nodes are perfectly reliable"
                                  : ": no such component"));
        }
        if (!covered.insert(id).second) {
            throw ParseError("component " + std::to_string(id) + ": duplicate entry");
        }
    };
    for (const auto& [id, p] : problem.crisp) {
        claim(id);
        if (!(p >= 0.0 && p <= 1.0)) {  // also rejects NaN
            throw ParseError("component " + std::to_string(id) + ": probability outside [0, 1]");
        }
    }
    std::size_t experts = 0;
    for (const auto& [id, list] : problem.uncertain) {
        claim(id);
        if (experts == 0) {
            experts = list.size();
        } else if (list.size() != experts) {
            throw ParseError("component " + std::to_string(id) +
                             ": rating list length differs from earlier components");
        }
    }
    for (int id = lo; id <= hi; ++id) {
        if (!covered.count(id)) {
            throw ParseError("component " + std::to_string(id) +
                             ": no reliability or ratings given");
        }
    }

    return problem;
}

std::string render_problem(const ProblemFile& problem) {
    std::string out;
    out += "mode " + to_string(problem.mode) + "\n";
    out += "nodes " + std::to_string(problem.node_count) + "\n";
    for (const auto& [i, j] : problem.arcs) {
        out += "arc " + std::to_string(i) + " " + std::to_string(j) + "\n";
    }
    for (const auto& [id, p] : problem.crisp) {
        out += "reliability " + std::to_string(id) + " = " + format_double(p) + "\n";
    }
    for (const auto& [id, list] : problem.uncertain) {
        out += "ratings " + std::to_string(id) + " =";
        for (Linguistic v : list) {
            out += " " + to_token(v);
        }
        out += "\n";
    }
    return out;
}

Network to_network(const ProblemFile& problem) {
    return Network(problem.node_count, problem.arcs, problem.mode);
}

}  // namespace relcalc
