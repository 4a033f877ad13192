/*
   Copyright 2026 The lrcbounds authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lrc/core_math.hpp"
#include "lrc/lp_bounds.hpp"

using namespace lrc;

namespace {

double h2x(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return entropy_q(2, 0.5 * (1.0 - std::sqrt(1.0 - x)));
}

// exhaustive 1e6-point u-grid for the second bound
double second_dense(double d) {
    double best = 1.0;
    const int N = 1000000;
    for (int i = 0; i <= N; ++i) {
        const double u = (1.0 - 2.0 * d) * double(i) / N;
        best = std::min(best, 1.0 + h2x(u * u) - h2x(u * u + 2.0 * d * u + 2.0 * d));
    }
    return best;
}

}  // namespace

TEST_CASE("first LP bound endpoints and examples") {
    for (int q : {2, 3, 4, 8}) {
        CHECK(lp_rate_bound(q, 0.0, LpVariant::first) == 1.0);
        CHECK(lp_rate_bound(q, double(q - 1) / q, LpVariant::first) == 0.0);
        CHECK(lp_rate_bound(q, 0.9, LpVariant::first) == 0.0);
    }
    CHECK(lp_rate_bound(2, 0.1, LpVariant::first) ==
          doctest::Approx(entropy_q(2, 0.5 - std::sqrt(0.09))).epsilon(1e-12));
}

TEST_CASE("second LP bound against the dense-grid oracle") {
    const double v = lp_rate_bound(2, 0.1, LpVariant::second);
    CHECK(v > 0.69);
    CHECK(v < 0.70);
    CHECK(v == doctest::Approx(second_dense(0.1)).epsilon(1e-7));
    CHECK(lp_rate_bound(2, 0.3, LpVariant::second) ==
          doctest::Approx(second_dense(0.3)).epsilon(1e-7));
    CHECK_THROWS_AS(lp_rate_bound(3, 0.1, LpVariant::second), std::invalid_argument);
}

TEST_CASE("LP bounds are nonincreasing and second <= first") {
    double prev1 = 2.0, prev2 = 2.0;
    for (int i = 0; i <= 200; ++i) {
        const double d = 0.5 * i / 200.0;
        const double b1 = lp_rate_bound(2, d, LpVariant::first);
        const double b2 = lp_rate_bound(2, d, LpVariant::second);
        CHECK(b1 <= prev1 + 1e-9);
        CHECK(b2 <= prev2 + 1e-9);
        CHECK(b2 <= b1 + 1e-9);
        prev1 = b1;
        prev2 = b2;
    }
    double prev = 2.0;
    for (int i = 0; i <= 100; ++i) {
        const double d = 0.75 * i / 100.0;
        const double b = lp_rate_bound(4, d, LpVariant::first);
        CHECK(b <= prev + 1e-9);
        prev = b;
    }
}

TEST_CASE("constant-weight bound") {
    SUBCASE("zero below the Plotkin cutoff") {
        CHECK(lp_constant_weight_bound(2, 0.2, 0.05) == 0.0);
        CHECK(lp_constant_weight_bound(2, 0.3, 0.14) == 0.0);
    }
    SUBCASE("zero beyond the Johnson radius") {
        // 2 w (1-w) = 0.18 < 0.2 at w = 0.1 -> rate 0
        CHECK(lp_constant_weight_bound(2, 0.2, 0.1) == 0.0);
    }
    SUBCASE("never exceeds the first bound, nonnegative") {
        for (double d : {0.05, 0.15, 0.3, 0.45})
            for (int i = 0; i <= 50; ++i) {
                const double w = 0.5 * i / 50.0;
                const double v = lp_constant_weight_bound(2, d, w);
                CHECK(v >= 0.0);
                CHECK(v <= lp_rate_bound(2, d, LpVariant::first) + 1e-12);
            }
    }
    SUBCASE("delta = 0 keeps rates at most 1") {
        for (double w : {0.1, 0.3, 0.5})
            CHECK(lp_constant_weight_bound(2, 0.0, w) <= 1.0);
    }
    SUBCASE("monotone regularizer is a nondecreasing tightening") {
        for (double d : {0.1, 0.3}) {
            double prev = -1.0;
            for (int i = 0; i <= 40; ++i) {
                const double w = 0.5 * i / 40.0;
                const double reg = lp_constant_weight_bound(2, d, w, true);
                CHECK(reg <= lp_constant_weight_bound(2, d, w) + 1e-12);
                CHECK(reg >= prev - 1e-9);
                prev = reg;
            }
        }
    }
    SUBCASE("only the binary transcription exists") {
        CHECK_THROWS_AS(lp_constant_weight_bound(3, 0.1, 0.2), std::invalid_argument);
    }
}

TEST_CASE("singleton plug-in") {
    CHECK(singleton_plugin(0.0) == 1.0);
    CHECK(singleton_plugin(1.0) == 0.0);
    CHECK(singleton_plugin(0.3) == doctest::Approx(0.7));
}

TEST_CASE("alphabet bound (second kind, general q)") {
    CHECK(lp_alphabet_bound(4, 0.0) == 1.0);
    CHECK(lp_alphabet_bound(4, 0.75) == 0.0);
    // improves on the first bound in the middle, never above it
    for (int i = 1; i < 30; ++i) {
        const double d = 0.75 * i / 30.0;
        CHECK(lp_alphabet_bound(4, d) <= lp_rate_bound(4, d, LpVariant::first) + 1e-12);
    }
    CHECK(lp_alphabet_bound(4, 0.15) < lp_rate_bound(4, 0.15, LpVariant::first) - 1e-3);
    // binary case coincides with min(first, second)
    for (double d : {0.05, 0.2, 0.35})
        CHECK(lp_alphabet_bound(2, d) ==
              doctest::Approx(std::min(lp_rate_bound(2, d, LpVariant::first),
                                       lp_rate_bound(2, d, LpVariant::second)))
                  .epsilon(1e-12));
}

TEST_CASE("lower convex envelope") {
    SUBCASE("convex input is unchanged") {
        CurveTable c{"conv", {0.0, 0.1, 0.2, 0.3}, {1.0, 0.7, 0.5, 0.4}};
        const auto e = lower_convex_envelope(c);
        for (std::size_t i = 0; i < c.grid.size(); ++i)
            CHECK(e.values[i] == doctest::Approx(c.values[i]).epsilon(1e-12));
    }
    SUBCASE("two points are a segment") {
        CurveTable c{"seg", {0.0, 1.0}, {0.9, 0.1}};
        const auto e = lower_convex_envelope(c);
        CHECK(e.values[0] == doctest::Approx(0.9));
        CHECK(e.values[1] == doctest::Approx(0.1));
    }
    SUBCASE("worked example against all-chords brute force") {
        CurveTable c{"probe", {0.0, 0.1, 0.2, 0.3, 0.4}, {1.0, 0.9, 0.5, 0.45, 0.0}};
        const auto e = lower_convex_envelope(c);
        CHECK(e.values[1] == doctest::Approx(0.75).epsilon(1e-12));
        // brute force: for every grid point the envelope is the lowest value
        // over all chords through pairs of input points
        for (std::size_t i = 0; i < c.grid.size(); ++i) {
            double lowest = c.values[i];
            for (std::size_t a = 0; a < c.grid.size(); ++a)
                for (std::size_t b = a + 1; b < c.grid.size(); ++b) {
                    if (c.grid[i] < c.grid[a] || c.grid[i] > c.grid[b]) continue;
                    const double t = (c.grid[i] - c.grid[a]) / (c.grid[b] - c.grid[a]);
                    lowest = std::min(lowest, c.values[a] + t * (c.values[b] - c.values[a]));
                }
            CHECK(e.values[i] == doctest::Approx(lowest).epsilon(1e-12));
        }
    }
    SUBCASE("output convex and dominated") {
        CurveTable c{"wiggle", {}, {}};
        for (int i = 0; i <= 80; ++i) {
            const double x = i / 80.0;
            c.grid.push_back(x);
            c.values.push_back(1.0 - x + 0.15 * std::sin(12.0 * x));
        }
        const auto e = lower_convex_envelope(c);
        for (std::size_t i = 0; i < c.grid.size(); ++i) CHECK(e.values[i] <= c.values[i] + 1e-12);
        for (std::size_t i = 1; i + 1 < c.grid.size(); ++i)
            CHECK(e.values[i - 1] - 2.0 * e.values[i] + e.values[i + 1] >= -1e-12);
    }
    SUBCASE("degenerate inputs rejected") {
        CurveTable c{"one", {0.5}, {0.5}};
        CHECK_THROWS_AS(lower_convex_envelope(c), std::invalid_argument);
        CurveTable bad{"bad", {0.5, 0.4}, {0.5, 0.6}};
        CHECK_THROWS_AS(lower_convex_envelope(bad), std::invalid_argument);
    }
}
