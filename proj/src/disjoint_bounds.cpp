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

#include "lrc/disjoint_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "lrc/large_deviations.hpp"
#include "lrc/optimize.hpp"

namespace lrc {

CwBoundFn default_cw_bound(int q) {
    if (q != 2) {
        // No transcription for q > 2; reject at call time per the contract.
        return [](double, double) -> double {
            throw std::invalid_argument("default_cw_bound: only q = 2 is supported");
        };
    }
    return [](double delta, double omega) { return lp_constant_weight_bound(2, delta, omega); };
}

double r0_lower(int q, int n, double delta) {
    if (delta < 0.0) throw std::out_of_range("r0_lower: delta must be >= 0");
    return std::max(0.0, double(n - 1) / n - lambda_growth(q, n, delta).value);
}

double r_sp(int q, int n, double delta) { return r0_lower(q, n, delta / 2.0); }

double r_cm(const BoundQuery& query, const RateBound& r_opt) {
    const int n = query.n;
    const double d = query.delta;
    const double qm = double(query.q - 1) / query.q;
    if (d >= qm) return 0.0;
    auto obj = [&](double tau) {
        const double arg = (tau < 1.0) ? std::min(d / (1.0 - tau), 1.0) : 1.0;
        return tau * double(n - 1) / n + (1.0 - tau) * r_opt(arg);
    };
    auto [tau, v] = detail::grid_min(obj, 0.0, 1.0 - d, query.opt.cm_tau_grid,
                                     query.opt.value_tol * 1e-2, 3);
    (void)tau;
    // tau = 1 - delta makes the second argument exactly 1 and contributes 0
    return std::min(v, obj(1.0 - d));
}

namespace {

// min over theta of tau R0(theta/2) + (1-tau) rlrc(theta'), fixed tau
double r1_inner(const BoundQuery& query, const std::function<double(double)>& rlrc,
                double tau) {
    const int q = query.q, n = query.n;
    const double d = query.delta;
    const double qm = double(q - 1) / q;
    const double th_lo = std::max(0.0, (d - (1.0 - tau) * qm) / tau);
    const double th_hi = std::min(qm, d / tau);
    if (th_lo > th_hi) return std::numeric_limits<double>::infinity();
    auto obj = [&](double th) {
        const double thp = std::clamp((d - tau * th) / (1.0 - tau), 0.0, 1.0);
        return tau * r0_lower(q, n, th / 2.0) + (1.0 - tau) * rlrc(thp);
    };
    auto [th, v] = detail::grid_min(obj, th_lo, th_hi, query.opt.theta_grid,
                                    std::max(query.opt.value_tol * 1e-1, 2e-7), 3);
    (void)th;
    return v;
}

double r1_impl(const BoundQuery& query, const std::function<double(double)>& rlrc) {
    const int q = query.q, n = query.n;
    const double d = query.delta;
    const double qm = double(q - 1) / q;
    if (d >= qm) return 0.0;
    if (d <= 0.0) return double(n - 1) / n;

    // analytic tau limits (1: sphere-packing; 0: the plug-in itself) and the
    // theta = 0 slice
    BoundQuery cmq = query;
    double best = std::min({r_sp(q, n, d), rlrc(d),
                            r_cm(cmq, RateBound{"plug", q, rlrc})});

    const double lo = query.opt.tau_eps, hi = 1.0 - query.opt.tau_eps;
    const int grid = query.opt.tau_grid;
    std::vector<double> vals(static_cast<std::size_t>(grid));
    detail::parallel_for(static_cast<std::size_t>(grid), [&](std::size_t i) {
        const double tau = lo + (hi - lo) * double(i) / (grid - 1);
        vals[i] = r1_inner(query, rlrc, tau);
    });
    int ibest = 0;
    for (int i = 1; i < grid; ++i)
        if (vals[static_cast<std::size_t>(i)] < vals[static_cast<std::size_t>(ibest)]) ibest = i;
    best = std::min(best, vals[static_cast<std::size_t>(ibest)]);

    // golden refinement of tau around the best grid cell
    const double h = (hi - lo) / (grid - 1);
    const double a = std::max(lo, lo + h * (ibest - 1));
    const double b = std::min(hi, lo + h * (ibest + 1));
    auto outer = [&](double tau) { return r1_inner(query, rlrc, tau); };
    auto [tau, v] = detail::golden_min(outer, a, b, std::max(query.opt.value_tol * 1e-1, 2e-7));
    (void)tau;
    return std::min(best, v);
}

}  // namespace

double r1(const BoundQuery& query, const RateBound& r_lrc) {
    return r1_impl(query, r_lrc.fn);
}

double r2(const BoundQuery& query, const CwBoundFn& r_opt_cw) {
    const int q = query.q, n = query.n;
    const double d = query.delta;
    const double qm = double(q - 1) / q;
    if (d >= qm) return 0.0;
    auto obj = [&](double w) { return r0_lower(q, n, w) + r_opt_cw(d, w); };
    auto [w, v] = detail::grid_min(obj, d / 2.0, qm, query.opt.omega_grid,
                                   std::max(query.opt.value_tol * 1e-1, 1e-9), 3);
    (void)w;
    // the stated range endpoints are always candidates
    return std::min({v, obj(d / 2.0), obj(qm)});
}

double r12(const BoundQuery& query, const CwBoundFn& r_opt_cw) {
    // Memoized r2 as the LRC plug-in; keyed on delta rounded to 1e-6,
    // no interpolation between keys.
    auto memo = std::make_shared<std::unordered_map<long long, double>>();
    auto mtx = std::make_shared<std::mutex>();
    const BoundQuery base = query;
    auto rlrc = [memo, mtx, base, r_opt_cw](double dd) {
        const long long key = llround(dd * 1e6);
        {
            std::lock_guard<std::mutex> lock(*mtx);
            auto it = memo->find(key);
            if (it != memo->end()) return it->second;
        }
        BoundQuery sub = base;
        sub.delta = double(key) * 1e-6;
        sub.opt.omega_grid = std::max(401, base.opt.omega_grid / 8);  // plug-in calls are hot
        const double v = r2(sub, r_opt_cw);
        std::lock_guard<std::mutex> lock(*mtx);
        (*memo)[key] = v;
        return v;
    };
    // Candidates at the query's own resolution: the tau -> 0 slice (r2) and
    // the plain r1 with the default plug-in. Both are valid bounds that
    // dominate the iterated infimum, and they pin the orderings
    // r12 <= r2 and r12 <= r1 exactly (the memoized plug-in quantizes the
    // inner objective, so refinement alone cannot).
    const double tau0 = r2(query, r_opt_cw);
    const double plain = r1_impl(query, default_rate_bound(query.q).fn);
    return std::min({tau0, plain, r1_impl(query, rlrc)});
}

double r12(const BoundQuery& query) { return r12(query, default_cw_bound(query.q)); }

}  // namespace lrc
