#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "relcalc/model.hpp"

namespace relcalc {

// Parsed problem file: topology plus a crisp probability or an expert rating
// list for every mutable component (exactly one of the two per component).
struct ProblemFile {
    Mode mode = Mode::AOA;
    int node_count = 0;
    std::vector<std::pair<int, int>> arcs;
    std::vector<std::pair<int, double>> crisp;                       // file order
    std::vector<std::pair<int, std::vector<Linguistic>>> uncertain;  // file order

    bool operator==(const ProblemFile&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    explicit ParseError(const std::string& message);  // semantic, no line

    int line() const { return line_; }

private:
    int line_ = 0;
};

// Line-oriented grammar, '#' comments, case-insensitive keywords:
//   mode aon|aoa
//   nodes <n>
//   arc <i> <j>
//   reliability <component> = <p>
//   ratings <component> = <tok> [<tok> ...]
ProblemFile parse_problem(const std::string& text);

// Canonical text form; parse_problem(render_problem(p)) == p.
std::string render_problem(const ProblemFile& problem);

Network to_network(const ProblemFile& problem);

}  // namespace relcalc
