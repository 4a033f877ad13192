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

#include "lrc/disjoint_bounds.hpp"
#include "lrc/large_deviations.hpp"

using namespace lrc;

namespace {

OptimizerOptions light() {
    OptimizerOptions o;
    o.cm_tau_grid = 1001;
    o.tau_grid = 51;
    o.theta_grid = 51;
    o.omega_grid = 801;
    return o;
}

}  // namespace

TEST_CASE("floor and sphere-packing endpoints") {
    CHECK(r0_lower(2, 4, 0.0) == doctest::Approx(0.75));
    CHECK(r0_lower(2, 4, 0.5) == 0.0);
    CHECK(r0_lower(2, 4, 0.9) == 0.0);
    CHECK(r_sp(2, 4, 0.0) == doctest::Approx(0.75));
    CHECK(r_sp(3, 5, 0.0) == doctest::Approx(0.8));
}

TEST_CASE("CM bound with the Singleton plug-in collapses to the Singleton form") {
    const RateBound singleton = singleton_rate_bound();
    for (auto [q, n] : {std::pair{2, 4}, std::pair{3, 3}}) {
        for (int i = 0; i < 100; ++i) {
            const double d = 0.01 + (double(q - 1) / q - 0.02) * i / 99.0;
            BoundQuery bq{q, n, d, {}};
            CHECK(r_cm(bq, singleton) ==
                  doctest::Approx(double(n - 1) / n * (1.0 - d)).epsilon(1e-9));
        }
    }
}

TEST_CASE("CM bound at delta = 0") {
    BoundQuery bq{2, 4, 0.0, {}};
    CHECK(r_cm(bq, default_rate_bound(2)) == doctest::Approx(0.75).epsilon(1e-9));
}

TEST_CASE("r1 never exceeds its two slices") {
    const RateBound plug = default_rate_bound(2);
    for (double d : {0.08, 0.2, 0.33}) {
        BoundQuery bq{2, 4, d, light()};
        const double v1 = r1(bq, plug);
        CHECK(v1 <= r_cm(bq, plug) + 1e-9);
        CHECK(v1 <= r_sp(2, 4, d) + 1e-9);
    }
}

TEST_CASE("r2 endpoints are part of the sweep") {
    const CwBoundFn cw = default_cw_bound(2);
    BoundQuery bq{2, 4, 0.49999, light()};
    // at delta just below (q-1)/q everything is squeezed to ~0
    CHECK(r2(bq, cw) <= 1e-3);
    BoundQuery zero{2, 4, 0.0, light()};
    CHECK(r2(zero, cw) <= 0.75 + 1e-12);
}

TEST_CASE("ordering r12 <= min(r1, r2) and upper >= lower") {
    const RateBound plug = default_rate_bound(2);
    const CwBoundFn cw = default_cw_bound(2);
    for (double d = 0.01; d <= 0.45; d += 0.11) {
        BoundQuery bq{2, 4, d, light()};
        const double v1 = r1(bq, plug);
        const double v2 = r2(bq, cw);
        const double v12 = r12(bq, cw);
        CHECK(v12 <= v1 + 1e-9);
        CHECK(v12 <= v2 + 1e-9);
        const double lower = r0_lower(2, 4, d);
        for (double upper : {r_sp(2, 4, d), v1, v2, v12}) CHECK(upper >= lower - 1e-9);
    }
}

TEST_CASE("all bounds meet the endpoints") {
    const RateBound plug = default_rate_bound(2);
    const CwBoundFn cw = default_cw_bound(2);
    BoundQuery at_qm{2, 4, 0.5, light()};
    CHECK(r_cm(at_qm, plug) == 0.0);
    CHECK(r1(at_qm, plug) == 0.0);
    CHECK(r2(at_qm, cw) == 0.0);
    CHECK(r12(at_qm) == 0.0);
    BoundQuery at_zero{2, 4, 0.0, light()};
    CHECK(r_cm(at_zero, plug) == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(r1(at_zero, plug) == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(r2(at_zero, cw) <= 0.75 + 1e-9);
}

TEST_CASE("refinement stability under grid doubling") {
    const RateBound plug = default_rate_bound(2);
    const CwBoundFn cw = default_cw_bound(2);
    for (double d : {0.10, 0.30}) {
        BoundQuery base{2, 4, d, light()};
        BoundQuery dense = base;
        dense.opt.cm_tau_grid *= 2;
        dense.opt.tau_grid *= 2;
        dense.opt.theta_grid *= 2;
        dense.opt.omega_grid *= 2;
        CHECK(std::fabs(r_cm(base, plug) - r_cm(dense, plug)) < 5e-5);
        CHECK(std::fabs(r2(base, cw) - r2(dense, cw)) < 5e-5);
        CHECK(std::fabs(r1(base, plug) - r1(dense, plug)) < 5e-5);
    }
}
