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

#include <algorithm>
#include <cmath>

#include "lrc/special_n3.hpp"

using namespace lrc;

TEST_CASE("group-size-2 bound") {
    CHECK(n2_bound(2, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(n2_bound(2, 0.5) == 0.0);
    CHECK(n2_bound(3, 2.0 / 3.0) == 0.0);
    CHECK(n2_bound(2, 0.1) ==
          doctest::Approx(0.5 * std::min(lp_rate_bound(2, 0.1, LpVariant::first),
                                         lp_rate_bound(2, 0.1, LpVariant::second)))
              .epsilon(1e-12));
}

TEST_CASE("mixed-alphabet bound slices") {
    SUBCASE("tau = 0 forces the quaternary slice") {
        MixedAlphabetSpec s{2, 4, 1.0, 2.0 / 3.0, 0.0};
        for (double d : {0.1, 0.2, 0.3}) {
            CHECK(bhl_mixed_bound(s, d) ==
                  doctest::Approx(lp_alphabet_bound(4, 1.5 * d) * 2.0).epsilon(1e-12));
        }
    }
    SUBCASE("tau = 1 is the single-alphabet slice") {
        MixedAlphabetSpec s{2, 4, 1.0, 2.0 / 3.0, 1.0};
        for (double d : {0.1, 0.2, 0.3})
            CHECK(bhl_mixed_bound(s, d) == doctest::Approx(lp_alphabet_bound(2, d)).epsilon(1e-12));
    }
    SUBCASE("interior tau against a dense-grid oracle") {
        MixedAlphabetSpec s{2, 4, 1.0, 2.0 / 3.0, 0.5};
        const double d = 0.2;
        double best = 1e300;
        const int N = 100000;
        const double c2 = 0.5 * (2.0 / 3.0);
        for (int i = 0; i <= N; ++i) {
            const double th = double(i) / N;
            if (0.5 * th > d) break;
            const double thp = std::clamp((d - 0.5 * th) / c2, 0.0, 1.0);
            const double v =
                0.5 * lp_alphabet_bound(2, th) + 0.5 * lp_alphabet_bound(4, thp) * 2.0;
            best = std::min(best, v);
        }
        CHECK(bhl_mixed_bound(s, d) == doctest::Approx(best).epsilon(1e-6));
    }
    SUBCASE("zero beyond combined reach") {
        MixedAlphabetSpec s{2, 4, 1.0, 2.0 / 3.0, 0.5};
        CHECK(bhl_mixed_bound(s, 0.9) == 0.0);
    }
    SUBCASE("equal alphabets, equal weights reduce to one alphabet") {
        MixedAlphabetSpec s{4, 4, 1.0, 1.0, 0.5};
        // with one shared alphabet the segment degenerates to theta = theta'
        // only on a convex bound; here the two-point mixture can only help
        for (double d : {0.1, 0.3})
            CHECK(bhl_mixed_bound(s, d) <= lp_alphabet_bound(4, d) * 2.0 + 1e-12);
    }
}

TEST_CASE("size-3-group bound endpoints and a figure sample") {
    CHECK(n3_bound(0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(n3_bound(0.5) == 0.0);
    CHECK(n3_bound(0.8) == 0.0);
    const double v = n3_bound(0.1);
    CHECK(v > 0.48);
    CHECK(v < 0.495);
}

TEST_CASE("n3 curve is continuous, nonincreasing and below the generic bounds") {
    double prev = 1.0;
    for (int i = 0; i <= 100; ++i) {
        const double d = 0.5 * i / 100.0;
        const double v = n3_bound(d);
        CHECK(v <= prev + 1e-9);
        prev = v;
    }
    // sampled comparison values of the n = 3 composite upper bounds
    struct Sample { double d, cm, r1, r12; };
    const Sample probes[] = {{0.1, 0.52016, 0.49804, 0.48987},
                             {0.2, 0.37365, 0.35915, 0.35200},
                             {0.3, 0.22713, 0.22026, 0.22026}};
    for (const auto& p : probes) {
        const double v = n3_bound(p.d);
        CHECK(v < p.cm + 0.02);
        CHECK(v < p.r1 + 0.02);
        CHECK(v < p.r12 + 0.02);
    }
}

TEST_CASE("tau and sigma sweeps peak at zero") {
    std::vector<double> tgrid, sgrid;
    for (int i = 0; i <= 20; ++i) tgrid.push_back(i / 20.0);
    for (int i = 0; i <= 15; ++i) sgrid.push_back(i / 5.0);
    for (int i = 0; i < 9; ++i) {
        const double d = 0.02 + (0.48 - 0.02) * i / 8.0;
        const auto tr = n3_tau_sweep(d, tgrid);
        CHECK(tr.argmax == 0.0);
        const auto sr = n3_sigma_sweep(d, sgrid);
        CHECK(sr.argmax == 0.0);
        // sigma = 0 term is the plain bound
        CHECK(sr.values.front() == doctest::Approx(n3_bound(d)).epsilon(1e-12));
        // the -sigma term eventually dominates
        CHECK(sr.values.back() < 0.0);
    }
}

TEST_CASE("tau sweep decreasing near zero") {
    std::vector<double> grid{0.0, 0.05, 0.1, 0.15, 0.2};
    const auto rep = n3_tau_sweep(0.2, grid);
    for (std::size_t i = 1; i < rep.values.size(); ++i)
        CHECK(rep.values[i] <= rep.values[i - 1] + 1e-9);
}
