#include "relcalc/fuzzy.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace relcalc {

namespace {

void require_unit_interval(const Tfn& t) {
    if (t.a < 0.0 || t.c > 1.0) {
        throw std::invalid_argument("fuzzy number not contained in [0, 1]");
    }
}

}  // namespace

Tfn::Tfn(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
    if (!(a <= b && b <= c)) {
        throw std::invalid_argument("fuzzy number requires a <= b <= c");
    }
}

std::string to_token(Linguistic v) {
    switch (v) {
        case Linguistic::VL: return "VL";
        case Linguistic::L:  return "L";
        case Linguistic::FL: return "FL";
        case Linguistic::M:  return "M";
        case Linguistic::FH: return "FH";
        case Linguistic::H:  return "H";
        case Linguistic::VH: return "VH";
    }
    return {};
}

std::optional<Linguistic> linguistic_from_token(std::string_view token) {
    std::string upper(token);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    for (Linguistic v : kLinguisticScale) {
        if (upper == to_token(v)) {
            return v;
        }
    }
    return std::nullopt;
}

Tfn to_tfn(Linguistic v) {
    switch (v) {
        case Linguistic::VL: return {0.0, 0.0, 0.1};
        case Linguistic::L:  return {0.0, 0.1, 0.3};
        case Linguistic::FL: return {0.1, 0.3, 0.5};
        case Linguistic::M:  return {0.3, 0.5, 0.7};
        case Linguistic::FH: return {0.5, 0.7, 0.9};
        case Linguistic::H:  return {0.7, 0.9, 1.0};
        case Linguistic::VH: return {0.9, 1.0, 1.0};
    }
    throw std::invalid_argument("unknown linguistic value");
}

Tfn tfn_add(const Tfn& lhs, const Tfn& rhs) {
    return {lhs.a + rhs.a, lhs.b + rhs.b, lhs.c + rhs.c};
}

Tfn tfn_subtract(const Tfn& lhs, const Tfn& rhs) {
    return {lhs.a - rhs.c, lhs.b - rhs.b, lhs.c - rhs.a};
}

Tfn tfn_multiply(const Tfn& lhs, const Tfn& rhs) {
    if (lhs.a < 0.0 || rhs.a < 0.0) {
        throw std::invalid_argument("fuzzy product requires non-negative supports");
    }
    return {lhs.a * rhs.a, lhs.b * rhs.b, lhs.c * rhs.c};
}

Tfn tfn_divide(const Tfn& lhs, const Tfn& rhs) {
    if (lhs.a < 0.0 || rhs.a <= 0.0) {
        throw std::invalid_argument(
            "fuzzy quotient requires a non-negative dividend and a positive divisor support");
    }
    return {lhs.a / rhs.c, lhs.b / rhs.b, lhs.c / rhs.a};
}

Tfn tfn_scale(const Tfn& t, double divisor) {
    if (!(divisor > 0.0)) {
        throw std::invalid_argument("scale divisor must be positive");
    }
    return {t.a / divisor, t.b / divisor, t.c / divisor};
}

AlphaCut alpha_cut(const Tfn& t, double alpha) {
    if (alpha < 0.0 || alpha > 1.0) {
        throw std::invalid_argument("alpha level outside [0, 1]");
    }
    return {alpha, alpha * (t.b - t.a) + t.a, alpha * (t.b - t.c) + t.c};
}

Tfn average_fuzzy_number(const std::vector<Linguistic>& ratings) {
    if (ratings.empty()) {
        throw std::invalid_argument("rating list is empty");
    }
    Tfn sum;
    for (Linguistic v : ratings) {
        sum = tfn_add(sum, to_tfn(v));
    }
    return tfn_scale(sum, static_cast<double>(ratings.size()));
}

double fps_right(const Tfn& t) {
    require_unit_interval(t);
    return t.c / (1.0 + t.c - t.b);
}

double fps_left(const Tfn& t) {
    require_unit_interval(t);
    return (1.0 - t.a) / (1.0 + t.b - t.a);
}

double fps(const Tfn& t) {
    return (fps_right(t) + 1.0 - fps_left(t)) / 2.0;
}

FailureRate fps_to_ffr(double fps_value) {
    if (fps_value < 0.0 || fps_value > 1.0) {
        throw std::invalid_argument("possibility score outside [0, 1]");
    }
    if (fps_value == 0.0) {
        return {std::numeric_limits<double>::infinity(), 0.0};
    }
    const double k = std::cbrt((1.0 - fps_value) / fps_value) * 2.301;
    return {k, std::pow(10.0, -k)};
}

Defuzzification resolve_uncertain_component(const std::vector<Linguistic>& ratings) {
    const Tfn afn = average_fuzzy_number(ratings);
    Defuzzification d;
    d.fps_left = fps_left(afn);
    d.fps_right = fps_right(afn);
    d.fps = (d.fps_right + 1.0 - d.fps_left) / 2.0;
    const FailureRate fr = fps_to_ffr(d.fps);
    d.k = fr.k;
    d.ffr = fr.ffr;
    d.reliability = 1.0 - fr.ffr;
    return d;
}

}  // namespace relcalc
