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

#include "lrc/nondisjoint_bounds.hpp"

using namespace lrc;

namespace {

OptimizerOptions light() {
    OptimizerOptions o;
    o.cm_tau_grid = 1001;
    o.tau_grid = 41;
    o.theta_grid = 41;
    o.omega_grid = 801;
    o.nu_grid = 401;
    return o;
}

double hat_objective_fd(int q, int n, double omega, double nu) {
    const double mu = std::clamp((1.0 - nu) / (1.0 + nu) * n, 1.0, double(n));
    return nu + (1.0 - nu) * wzl_r0_bar(q, n, mu, omega / (1.0 - nu));
}

}  // namespace

TEST_CASE("r0_hat dominates its two feasible endpoints") {
    for (double w : {0.02, 0.1, 0.25, 0.4}) {
        const double v = r0_hat(2, 4, w, light());
        CHECK(v >= r0_lower(2, 4, w) - 1e-9);
        CHECK(v >= 3.0 / 5.0 - 1e-9);
    }
}

TEST_CASE("r0_hat equals the plain floor for small omega") {
    for (double w : {0.002, 0.01}) {
        CHECK(r0_hat(2, 4, w, light()) == doctest::Approx(r0_lower(2, 4, w)).epsilon(1e-6));
    }
}

TEST_CASE("r0_hat sweep diagnostics") {
    const auto s = r0_hat_sweep(2, 4, 0.05, 401);
    CHECK(s.max_value >= s.at_zero - 1e-12);
    CHECK(s.max_value >= s.at_end - 1e-12);
    CHECK(s.argmax >= 0.0);
    CHECK(s.argmax <= 3.0 / 5.0 + 1e-12);
    // observed gap of the endpoint conjecture is reported, not asserted
    const double gap = s.max_value - std::max(r0_lower(2, 4, 0.05), 3.0 / 5.0);
    MESSAGE("endpoint-conjecture gap at omega=0.05: ", gap);
}

TEST_CASE("hat sphere-packing reproduces the saturated rows") {
    CHECK(r_sp_hat(2, 4, 0.07, light()) == doctest::Approx(0.6133).epsilon(1e-3));
    CHECK(std::fabs(r_sp_hat(2, 4, 0.10, light()) - 0.6) < 1e-4);
    CHECK(std::fabs(r_sp_hat(2, 4, 0.30, light()) - 0.6) < 1e-4);
}

TEST_CASE("r1_hat relaxation direction") {
    const RateBound plug = default_rate_bound(2);
    // theta-slice relaxation: the hat objective dominates the plain one
    for (double th : {0.02, 0.1, 0.3})
        CHECK(r0_hat(2, 4, th / 2.0, light()) >= r0_lower(2, 4, th / 2.0) - 1e-9);
    for (double d : {0.1, 0.25}) {
        BoundQuery bq{2, 4, d, light()};
        CHECK(r1_hat(bq, plug) >= r1(bq, plug) - 1e-6);
    }
}

TEST_CASE("r2_hat and r3_hat agree at the examined points") {
    const CwBoundFn cw = default_cw_bound(2);
    for (double d : {0.07, 0.15, 0.30}) {
        BoundQuery bq{2, 4, d, light()};
        const double a = r2_hat(bq, cw);
        const double b = r3_hat(bq, cw);
        CHECK(std::fabs(a - b) < 1e-3);
        CHECK(a <= 1.0);
        CHECK(b <= 1.0);
    }
}

TEST_CASE("r3_hat printed-mu variant stays a bound and differs at most slightly") {
    const CwBoundFn cw = default_cw_bound(2);
    BoundQuery bq{2, 4, 0.15, light()};
    const double printed = r3_hat(bq, cw, true);
    CHECK(printed <= 1.0);
    CHECK(printed >= r3_hat(bq, cw) - 1e-9);  // clamped mu = n relaxes the inner bound
}

TEST_CASE("hat derivative diagnostic") {
    SUBCASE("matches central finite differences") {
        for (auto [w, nu] : {std::pair{0.1, 0.2}, std::pair{0.15, 0.1}, std::pair{0.08, 0.35}}) {
            const double h = 1e-6;
            const double fd =
                (hat_objective_fd(2, 4, w, nu + h) - hat_objective_fd(2, 4, w, nu - h)) / (2 * h);
            CHECK(hat_derivative_diag(2, 4, w, nu) == doctest::Approx(fd).epsilon(1e-4));
        }
    }
    SUBCASE("negative for small omega") {
        for (double nu : {0.05, 0.2, 0.45})
            CHECK(hat_derivative_diag(2, 4, 0.005, nu) < 0.0);
    }
    SUBCASE("rejects integer mu(nu)") {
        // nu = 1/7 makes mu(nu) = 3 exactly at n = 4
        CHECK_THROWS_AS(hat_derivative_diag(2, 4, 0.1, 1.0 / 7.0), std::domain_error);
    }
}
