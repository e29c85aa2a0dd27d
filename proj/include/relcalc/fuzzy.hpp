#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace relcalc {

// Triangular fuzzy number with support [a, c] and peak b.
struct Tfn {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    Tfn() = default;
    Tfn(double a_, double b_, double c_);  // requires a <= b <= c

    bool operator==(const Tfn&) const = default;
};

// Seven-level linguistic rating scale used by experts.
enum class Linguistic { VL, L, FL, M, FH, H, VH };

inline constexpr std::array<Linguistic, 7> kLinguisticScale = {
    Linguistic::VL, Linguistic::L,  Linguistic::FL, Linguistic::M,
    Linguistic::FH, Linguistic::H,  Linguistic::VH,
};

std::string to_token(Linguistic v);
std::optional<Linguistic> linguistic_from_token(std::string_view token);

// Fixed rating-to-fuzzy-number scale; all results lie in [0, 1].
Tfn to_tfn(Linguistic v);

Tfn tfn_add(const Tfn& lhs, const Tfn& rhs);
Tfn tfn_subtract(const Tfn& lhs, const Tfn& rhs);
// Componentwise product/quotient; restricted to non-negative supports so the
// a <= b <= c ordering is preserved.
Tfn tfn_multiply(const Tfn& lhs, const Tfn& rhs);
Tfn tfn_divide(const Tfn& lhs, const Tfn& rhs);  // requires rhs.a > 0
Tfn tfn_scale(const Tfn& t, double divisor);     // componentwise / divisor, divisor > 0

struct AlphaCut {
    double alpha = 0.0;
    double lb = 0.0;
    double ub = 0.0;
};

// [alpha(b-a)+a, alpha(b-c)+c] for alpha in [0, 1].
AlphaCut alpha_cut(const Tfn& t, double alpha);

// Unweighted mean of the experts' per-rating fuzzy numbers.
Tfn average_fuzzy_number(const std::vector<Linguistic>& ratings);

// Right/left possibility scores of a unit-interval TFN against the fuzzy-max
// set f(x) = x and the fuzzy-min set f(x) = 1 - x. The intersection with the
// alpha-cut bound is linear in alpha, so both have closed forms:
//   right: alpha = alpha(b-c)+c  =>  c / (1 + c - b)
//   left:  1-alpha = alpha(b-a)+a  =>  (1 - a) / (1 + b - a)
double fps_right(const Tfn& t);
double fps_left(const Tfn& t);

// Combined possibility score (fps_right + 1 - fps_left) / 2.
double fps(const Tfn& t);

struct FailureRate {
    double k = 0.0;    // +inf when fps = 0
    double ffr = 0.0;  // 10^(-k), or 0 when fps = 0
};

// k = ((1 - fps) / fps)^(1/3) * 2.301, ffr = 10^(-k).
FailureRate fps_to_ffr(double fps_value);

struct Defuzzification {
    double fps_left = 0.0;
    double fps_right = 0.0;
    double fps = 0.0;
    double k = 0.0;
    double ffr = 0.0;
    double reliability = 0.0;  // 1 - ffr
};

// Full preprocessing chain for one rated component:
// ratings -> average fuzzy number -> possibility score -> failure rate.
Defuzzification resolve_uncertain_component(const std::vector<Linguistic>& ratings);

}  // namespace relcalc
