#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "relcalc/fuzzy.hpp"

using namespace relcalc;

namespace {

// Independent solvers for the two ranking intersections, used as the oracle
// for the closed forms. Each equation has one root in [0, 1]:
//   right: g(t) = t - (t(b-c)+c) is increasing, g(0) <= 0 <= g(1)
//   left:  h(t) = (1-t) - (t(b-a)+a) is decreasing, h(0) >= 0 >= h(1)
double bisect_fps_right(const Tfn& t) {
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double g = mid - (mid * (t.b - t.c) + t.c);
        (g < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double bisect_fps_left(const Tfn& t) {
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double h = (1.0 - mid) - (mid * (t.b - t.a) + t.a);
        (h > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

Tfn random_unit_tfn(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double x = unit(rng), y = unit(rng), z = unit(rng);
    if (x > y) std::swap(x, y);
    if (y > z) std::swap(y, z);
    if (x > y) std::swap(x, y);
    return {x, y, z};
}

const std::vector<Linguistic> kRatings3 = {Linguistic::VL, Linguistic::L,  Linguistic::L,
                                           Linguistic::VL, Linguistic::L,  Linguistic::L};
const std::vector<Linguistic> kRatings4 = {Linguistic::VL, Linguistic::L,  Linguistic::H,
                                           Linguistic::VH, Linguistic::L,  Linguistic::H};
const std::vector<Linguistic> kRatings5 = {Linguistic::VH, Linguistic::H,  Linguistic::L,
                                           Linguistic::VH, Linguistic::H,  Linguistic::L};

}  // namespace

TEST_CASE("triangular numbers validate their ordering") {
    CHECK_NOTHROW(Tfn(0.1, 0.3, 0.5));
    CHECK_NOTHROW(Tfn(0.5, 0.5, 0.5));
    CHECK_THROWS_AS(Tfn(0.5, 0.3, 0.6), std::invalid_argument);
    CHECK_THROWS_AS(Tfn(0.1, 0.6, 0.5), std::invalid_argument);
}

TEST_CASE("linguistic scale maps to its fixed fuzzy numbers") {
    CHECK(to_tfn(Linguistic::VL) == Tfn{0.0, 0.0, 0.1});
    CHECK(to_tfn(Linguistic::L) == Tfn{0.0, 0.1, 0.3});
    CHECK(to_tfn(Linguistic::FL) == Tfn{0.1, 0.3, 0.5});
    CHECK(to_tfn(Linguistic::M) == Tfn{0.3, 0.5, 0.7});
    CHECK(to_tfn(Linguistic::FH) == Tfn{0.5, 0.7, 0.9});
    CHECK(to_tfn(Linguistic::H) == Tfn{0.7, 0.9, 1.0});
    CHECK(to_tfn(Linguistic::VH) == Tfn{0.9, 1.0, 1.0});

    CHECK(linguistic_from_token("vh") == Linguistic::VH);
    CHECK(linguistic_from_token("Fl") == Linguistic::FL);
    CHECK(!linguistic_from_token("XH").has_value());
    for (Linguistic v : kLinguisticScale) {
        CHECK(linguistic_from_token(to_token(v)) == v);
    }
}

TEST_CASE("componentwise arithmetic") {
    CHECK(tfn_add({0, 0, 0.1}, {0, 0.1, 0.3}) == Tfn{0.0, 0.1, 0.4});
    CHECK(tfn_subtract({1, 2, 3}, {1, 2, 3}) == Tfn{-2, 0, 2});
    CHECK(tfn_multiply({1, 2, 3}, {2, 3, 4}) == Tfn{2, 6, 12});
    CHECK(tfn_divide({2, 6, 12}, {2, 3, 4}) == Tfn{0.5, 2, 6});

    CHECK_THROWS_AS(tfn_multiply({-1, 0, 1}, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(tfn_divide({1, 2, 3}, {0, 1, 2}), std::invalid_argument);

    SUBCASE("scaling divides the support") {
        const Tfn s = tfn_scale({3, 6, 9}, 3.0);
        CHECK(s == Tfn{1, 2, 3});
        const Tfn sixth = tfn_scale({0.0, 0.4, 1.4}, 6.0);
        CHECK(sixth == Tfn{0.0, 0.4 / 6, 1.4 / 6});
        CHECK(tfn_scale({0.2, 0.4, 0.6}, 1.0) == Tfn{0.2, 0.4, 0.6});
        CHECK_THROWS_AS(tfn_scale({1, 2, 3}, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(tfn_scale({1, 2, 3}, -2.0), std::invalid_argument);
    }

    SUBCASE("addition is commutative and associative") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 200; ++trial) {
            const Tfn x = random_unit_tfn(rng), y = random_unit_tfn(rng),
                      z = random_unit_tfn(rng);
            CHECK(tfn_add(x, y) == tfn_add(y, x));  // exact in IEEE arithmetic
            // associativity only up to roundoff
            const Tfn lhs = tfn_add(tfn_add(x, y), z);
            const Tfn rhs = tfn_add(x, tfn_add(y, z));
            CHECK(std::abs(lhs.a - rhs.a) < 1e-15);
            CHECK(std::abs(lhs.b - rhs.b) < 1e-15);
            CHECK(std::abs(lhs.c - rhs.c) < 1e-15);
        }
    }
}

TEST_CASE("averaging expert ratings") {
    const Tfn a3 = average_fuzzy_number(kRatings3);
    CHECK(a3.a == 0.0);
    CHECK(std::abs(a3.b - 0.4 / 6) < 1e-12);
    CHECK(std::abs(a3.c - 1.4 / 6) < 1e-12);

    const Tfn a4 = average_fuzzy_number(kRatings4);
    CHECK(std::abs(a4.a - 2.3 / 6) < 1e-12);
    CHECK(std::abs(a4.b - 3.0 / 6) < 1e-12);
    CHECK(std::abs(a4.c - 3.7 / 6) < 1e-12);

    const Tfn a5 = average_fuzzy_number(kRatings5);
    CHECK(std::abs(a5.a - 3.2 / 6) < 1e-12);
    CHECK(std::abs(a5.b - 4.0 / 6) < 1e-12);
    CHECK(std::abs(a5.c - 4.6 / 6) < 1e-12);

    CHECK(average_fuzzy_number({Linguistic::M}) == to_tfn(Linguistic::M));
    CHECK_THROWS_AS(average_fuzzy_number({}), std::invalid_argument);
}

TEST_CASE("alpha cuts") {
    const Tfn t(0.0, 0.4 / 6, 1.4 / 6);
    const AlphaCut support = alpha_cut(t, 0.0);
    CHECK(support.lb == doctest::Approx(t.a));
    CHECK(support.ub == doctest::Approx(t.c));
    const AlphaCut peak = alpha_cut(t, 1.0);
    CHECK(peak.lb == doctest::Approx(t.b));
    CHECK(peak.ub == doctest::Approx(t.b));
    const AlphaCut half = alpha_cut(t, 0.5);
    CHECK(half.lb == doctest::Approx(0.4 * 0.5 / 6));
    CHECK(half.ub == doctest::Approx(1.4 / 6 - 0.5 / 6));

    CHECK_THROWS_AS(alpha_cut(t, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(alpha_cut(t, 1.1), std::invalid_argument);

    SUBCASE("cuts are nested as alpha grows") {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int trial = 0; trial < 300; ++trial) {
            const Tfn x = random_unit_tfn(rng);
            double a1 = unit(rng), a2 = unit(rng);
            if (a1 > a2) std::swap(a1, a2);
            const AlphaCut wide = alpha_cut(x, a1), narrow = alpha_cut(x, a2);
            CHECK(narrow.lb >= wide.lb - 1e-15);
            CHECK(narrow.ub <= wide.ub + 1e-15);
        }
    }
}

TEST_CASE("possibility scores: fixtures") {
    const Tfn a3 = average_fuzzy_number(kRatings3);
    CHECK(std::abs(fps_right(a3) - 0.2) < 1e-9);
    CHECK(std::abs(fps_left(a3) - 0.9375) < 1e-9);
    CHECK(std::abs(fps(a3) - 0.13125) < 1e-9);

    const Tfn a4 = average_fuzzy_number(kRatings4);
    CHECK(std::abs(fps_left(a4) - 0.552239) < 1e-6);
    CHECK(std::abs(fps_right(a4) - 0.552239) < 1e-6);
    CHECK(std::abs(fps(a4) - 0.5) < 1e-9);

    const Tfn a5 = average_fuzzy_number(kRatings5);
    CHECK(std::abs(fps_left(a5) - 0.411764) < 1e-6);
    CHECK(std::abs(fps_right(a5) - 0.696970) < 1e-6);
    CHECK(std::abs(fps(a5) - 0.642603) < 1e-6);

    CHECK_THROWS_AS(fps_right(Tfn(-0.1, 0.5, 0.9)), std::invalid_argument);
    CHECK_THROWS_AS(fps_left(Tfn(0.1, 0.5, 1.2)), std::invalid_argument);
}

TEST_CASE("possibility scores: properties") {
    std::mt19937_64 rng(23);

    SUBCASE("closed forms match the bisection solver") {
        for (int trial = 0; trial < 1000; ++trial) {
            const Tfn t = random_unit_tfn(rng);
            CHECK(std::abs(fps_right(t) - bisect_fps_right(t)) < 1e-12);
            CHECK(std::abs(fps_left(t) - bisect_fps_left(t)) < 1e-12);
        }
    }

    SUBCASE("crisp point scores to itself") {
        for (double p : {0.0, 0.25, 0.5, 0.8, 1.0}) {
            const Tfn t(p, p, p);
            CHECK(fps_right(t) == doctest::Approx(p).epsilon(1e-12));
            CHECK(fps_left(t) == doctest::Approx(1.0 - p).epsilon(1e-12));
            CHECK(fps(t) == doctest::Approx(p).epsilon(1e-12));
        }
    }

    SUBCASE("intersections land on the decreasing side, score stays in range") {
        for (int trial = 0; trial < 500; ++trial) {
            const Tfn t = random_unit_tfn(rng);
            CHECK(fps_right(t) >= t.b - 1e-12);
            CHECK(fps_left(t) >= 1.0 - t.b - 1e-12);
            const double score = fps(t);
            CHECK(score >= 0.0);
            CHECK(score <= 1.0);
        }
    }
}

TEST_CASE("failure-rate conversion") {
    const FailureRate mid = fps_to_ffr(0.5);
    CHECK(mid.k == doctest::Approx(2.301).epsilon(1e-12));
    CHECK(std::abs(mid.ffr - 0.005) < 1e-6);

    const FailureRate low = fps_to_ffr(0.86875);
    CHECK(std::abs(low.k - 1.225514) < 1e-6);
    CHECK(std::abs(low.ffr - 0.059496) < 1e-6);

    CHECK(fps_to_ffr(0.0).ffr == 0.0);
    const FailureRate full = fps_to_ffr(1.0);
    CHECK(full.k == 0.0);
    CHECK(full.ffr == 1.0);

    CHECK_THROWS_AS(fps_to_ffr(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(fps_to_ffr(1.1), std::invalid_argument);

    SUBCASE("strictly increasing on (0, 1]") {
        double prev = fps_to_ffr(0.001).ffr;
        for (int i = 2; i <= 1000; ++i) {
            const double cur = fps_to_ffr(i / 1000.0).ffr;
            CHECK(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("full resolution chain reproduces the reference rows") {
    // Node 4 row: 0.552239 / 0.552239 / 0.5 / 2.301 / 0.005 / 0.995.
    const Defuzzification d4 = resolve_uncertain_component(kRatings4);
    CHECK(std::abs(d4.fps_left - 0.552239) < 1e-6);
    CHECK(std::abs(d4.fps_right - 0.552239) < 1e-6);
    CHECK(std::abs(d4.fps - 0.5) < 1e-6);
    CHECK(std::abs(d4.k - 2.301) < 1e-6);
    CHECK(std::abs(d4.ffr - 0.005) < 1e-6);
    CHECK(std::abs(d4.reliability - 0.995000) < 1e-6);

    // Node 5 row: 0.411764 / 0.696970 / 0.642603 / 1.892283 / 0.012815 /
    // 0.987185. The row's k derives from the six-decimal FPS, so the
    // full-precision chain lands 1.0e-6 away from it; converting the
    // six-decimal score reproduces it within 1e-6.
    const Defuzzification d5 = resolve_uncertain_component(kRatings5);
    CHECK(std::abs(d5.fps_left - 0.411764) < 1e-6);
    CHECK(std::abs(d5.fps_right - 0.696970) < 1e-6);
    CHECK(std::abs(d5.fps - 0.642603) < 1e-6);
    CHECK(std::abs(d5.k - 1.89228401763717) < 1e-9);
    CHECK(std::abs(fps_to_ffr(0.642603).k - 1.892283) < 1e-6);
    CHECK(std::abs(d5.ffr - 0.012815) < 1e-6);
    CHECK(std::abs(d5.reliability - 0.987185) < 1e-6);

    // Node 3: the consistent convention scores 0.13125, not the mirrored
    // 0.86875; downstream values frozen from the chain.
    const Defuzzification d3 = resolve_uncertain_component(kRatings3);
    CHECK(std::abs(d3.fps_left - 0.9375) < 1e-9);
    CHECK(std::abs(d3.fps_right - 0.2) < 1e-9);
    CHECK(std::abs(d3.fps - 0.13125) < 1e-9);
    CHECK(std::abs(d3.k - 4.32031209066309) < 1e-9);
    CHECK(std::abs(d3.ffr - 4.78286264965791e-05) < 1e-12);
    CHECK(std::abs(d3.reliability - 0.999952171373503) < 1e-9);

    CHECK_THROWS_AS(resolve_uncertain_component({}), std::invalid_argument);
}
