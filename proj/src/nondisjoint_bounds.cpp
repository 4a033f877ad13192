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

#include "lrc/nondisjoint_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lrc/core_math.hpp"
#include "lrc/large_deviations.hpp"
#include "lrc/optimize.hpp"

namespace lrc {

namespace {

double mu_of_nu(int n, double nu) {
    return std::clamp((1.0 - nu) / (1.0 + nu) * n, 1.0, double(n));
}

double hat_objective(int q, int n, double omega, double nu) {
    if (nu >= 1.0) return nu;
    const double scaled = omega / (1.0 - nu);
    return nu + (1.0 - nu) * wzl_r0_bar(q, n, mu_of_nu(n, nu), scaled);
}

}  // namespace

double r0_hat(int q, int n, double omega, const OptimizerOptions& opt) {
    if (omega < 0.0) throw std::out_of_range("r0_hat: omega must be >= 0");
    const double nu_max = double(n - 1) / (n + 1);
    auto obj = [&](double nu) { return hat_objective(q, n, omega, nu); };
    auto [nu, v] = detail::grid_max(obj, 0.0, nu_max, opt.nu_grid, 1e-10, 3);
    (void)nu;
    // feasible endpoints are always candidates
    return std::max({v, obj(0.0), obj(nu_max)});
}

NuSweep r0_hat_sweep(int q, int n, double omega, int grid_points) {
    NuSweep s;
    const double nu_max = double(n - 1) / (n + 1);
    s.grid.resize(static_cast<std::size_t>(grid_points));
    s.values.resize(static_cast<std::size_t>(grid_points));
    for (int i = 0; i < grid_points; ++i) {
        const double nu = nu_max * double(i) / (grid_points - 1);
        s.grid[static_cast<std::size_t>(i)] = nu;
        s.values[static_cast<std::size_t>(i)] = hat_objective(q, n, omega, nu);
        if (i == 0 || s.values[static_cast<std::size_t>(i)] > s.max_value) {
            s.max_value = s.values[static_cast<std::size_t>(i)];
            s.argmax = nu;
        }
    }
    s.at_zero = s.values.front();
    s.at_end = s.values.back();
    return s;
}

double r_sp_hat(int q, int n, double delta, const OptimizerOptions& opt) {
    return r0_hat(q, n, delta / 2.0, opt);
}

double r1_hat(const BoundQuery& query, const RateBound& r_opt) {
    const int q = query.q, n = query.n;
    const double d = query.delta;
    const double qm = double(q - 1) / q;
    if (d >= qm) return 0.0;
    if (d <= 0.0) return r0_hat(q, n, 0.0, query.opt);

    OptimizerOptions inner_opt = query.opt;
    inner_opt.nu_grid = std::max(201, query.opt.nu_grid / 8);  // inner r0_hat calls are hot
    auto r0h = [&](double w) { return r0_hat(q, n, w, inner_opt); };

    auto inner = [&](double tau) {
        const double th_lo = std::max(0.0, (d - (1.0 - tau) * qm) / tau);
        const double th_hi = std::min(qm, d / tau);
        if (th_lo > th_hi) return std::numeric_limits<double>::infinity();
        auto obj = [&](double th) {
            const double thp = std::clamp((d - tau * th) / (1.0 - tau), 0.0, 1.0);
            return tau * r0h(th / 2.0) + (1.0 - tau) * r_opt(thp);
        };
        auto [th, v] = detail::grid_min(obj, th_lo, th_hi, query.opt.theta_grid,
                                        std::max(query.opt.value_tol * 1e-1, 2e-7), 3);
        (void)th;
        return v;
    };

    // tau limits (1: hat sphere-packing; 0: the plug-in) and theta = 0 slice
    BoundQuery cmq = query;
    double best = std::min({r_sp_hat(q, n, d, query.opt), r_opt(d), r_cm(cmq, r_opt)});

    const double lo = query.opt.tau_eps, hi = 1.0 - query.opt.tau_eps;
    const int grid = query.opt.tau_grid;
    std::vector<double> vals(static_cast<std::size_t>(grid));
    detail::parallel_for(static_cast<std::size_t>(grid), [&](std::size_t i) {
        vals[i] = inner(lo + (hi - lo) * double(i) / (grid - 1));
    });
    int ibest = 0;
    for (int i = 1; i < grid; ++i)
        if (vals[static_cast<std::size_t>(i)] < vals[static_cast<std::size_t>(ibest)]) ibest = i;
    best = std::min(best, vals[static_cast<std::size_t>(ibest)]);
    const double h = (hi - lo) / (grid - 1);
    auto [tau, v] = detail::golden_min(inner, std::max(lo, lo + h * (ibest - 1)),
                                       std::min(hi, lo + h * (ibest + 1)),
                                       std::max(query.opt.value_tol * 1e-1, 2e-7));
    (void)tau;
    return std::min(best, v);
}

double r2_hat(const BoundQuery& query, const CwBoundFn& r_opt_cw) {
    const int q = query.q, n = query.n;
    const double d = query.delta;
    const double qm = double(q - 1) / q;
    if (d >= qm) return 0.0;
    OptimizerOptions inner_opt = query.opt;
    inner_opt.nu_grid = std::max(201, query.opt.nu_grid / 8);
    auto obj = [&](double w) { return r0_hat(q, n, w, inner_opt) + r_opt_cw(d, w); };
    auto [w, v] = detail::grid_min(obj, d / 2.0, qm, std::max(401, query.opt.omega_grid / 8),
                                   std::max(query.opt.value_tol * 1e-1, 1e-9), 3);
    (void)w;
    return std::min({v, obj(d / 2.0), obj(qm)});
}

double r3_hat(const BoundQuery& query, const CwBoundFn& r_opt_cw, bool printed_mu_variant) {
    const int q = query.q, n = query.n;
    const double d = query.delta;
    const double qm = double(q - 1) / q;
    if (d >= qm) return 0.0;
    const double nu_max = double(n - 1) / (n + 1);
    auto mu_at = [&](double nu) {
        const double raw = printed_mu_variant ? (1.0 + nu) / (1.0 - nu) * n
                                              : (1.0 - nu) / (1.0 + nu) * n;
        return std::clamp(raw, 1.0, double(n));
    };
    auto outer = [&](double nu) {
        const double dd = d / (1.0 - nu);
        if (dd >= qm) return nu;  // inner bound collapses to 0
        const double w_lo = dd / 2.0;
        auto inner = [&](double w) {
            return wzl_r0_bar(q, n, mu_at(nu), w) + r_opt_cw(dd, w);
        };
        auto [w, v] = detail::grid_min(inner, w_lo, qm, std::max(401, query.opt.omega_grid / 8),
                                       std::max(query.opt.value_tol * 1e-1, 1e-9), 3);
        (void)w;
        v = std::min({v, inner(w_lo), inner(qm)});
        return nu + (1.0 - nu) * v;
    };
    auto [nu, v] = detail::grid_max(outer, 0.0, nu_max, std::max(201, query.opt.nu_grid / 8),
                                    1e-9, 3);
    (void)nu;
    return std::max({v, outer(0.0), outer(nu_max)});
}

double hat_derivative_diag(int q, int n, double omega, double nu) {
    const double mu = (1.0 - nu) / (1.0 + nu) * n;
    if (mu < 1.0 || mu > double(n))
        throw std::out_of_range("hat_derivative_diag: mu(nu) outside [1,n]");
    if (std::fabs(mu - std::round(mu)) < 1e-9)
        throw std::domain_error("hat_derivative_diag: not differentiable at integer mu(nu)");
    const double scaled = omega / (1.0 - nu);
    const PiTheta pt = wzl_pi_theta(q, n, mu, scaled);
    const int k = pt.support.front();
    const double z = pt.z_star;
    const double lq = std::log(double(q));
    const double logQk = std::log(poly_Q(q, k, z)) / lq;
    const double logQk1 = std::log(poly_Q(q, k + 1, z)) / lq;
    return (1.0 + double(k) / n) * logQk1 - (1.0 + double(k + 1) / n) * logQk;
}

}  // namespace lrc
