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

#include "lrc/lp_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "lrc/core_math.hpp"
#include "lrc/optimize.hpp"

namespace lrc {

namespace {

// h(x) = H_2((1 - sqrt(1-x))/2) on [0,1]
double h2(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return entropy_q(2, 0.5 * (1.0 - std::sqrt(1.0 - x)));
}

double first_bound(int q, double d) {
    const double qm = double(q - 1) / q;
    if (d <= 0.0) return 1.0;
    if (d >= qm) return 0.0;
    const double arg = (q - 1.0 - (q - 2.0) * d - 2.0 * std::sqrt((q - 1.0) * d * (1.0 - d))) / q;
    return entropy_q(q, std::clamp(arg, 0.0, 1.0));
}

double second_bound_binary_uncached(double d) {
    if (d <= 0.0) return 1.0;
    if (d >= 0.5) return 0.0;
    auto obj = [&](double u) { return 1.0 + h2(u * u) - h2(u * u + 2.0 * d * u + 2.0 * d); };
    auto [u, v] = detail::grid_min(obj, 0.0, 1.0 - 2.0 * d, 401, 1e-12, 3);
    (void)u;
    return std::clamp(v, 0.0, 1.0);
}

// The second bound sits inside per-omega sweeps with a fixed delta; cache it.
double second_bound_binary(int q, double d) {
    if (q != 2) throw std::invalid_argument("lp_rate_bound: variant=second requires q=2");
    thread_local std::unordered_map<long long, double> cache;
    const long long key = llround(d * 1e12);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const double v = second_bound_binary_uncached(d);
    if (cache.size() > 200000) cache.clear();
    cache.emplace(key, v);
    return v;
}

// expected relative distance between two independent weight-w words over a
// size-q alphabet; the q-ary Johnson-geometry threshold
double johnson_mean(int q, double w) { return 2.0 * w - w * w * double(q) / (q - 1); }

// q-ary Johnson-geometry constant-weight bound: H_q(r) where r solves
// johnson_mean(r) = johnson_mean(omega) - delta; zero past the threshold.
double cw_johnson_geometry(int q, double d, double w) {
    const double rhs = johnson_mean(q, w) - d;
    if (rhs <= 0.0) return 0.0;
    const double a = double(q) / (q - 1);
    const double disc = 1.0 - a * rhs;
    const double r = (1.0 - std::sqrt(std::max(disc, 0.0))) / a;
    return entropy_q(q, std::clamp(r, 0.0, double(q - 1) / q));
}

}  // namespace

double lp_rate_bound(int q, double delta, LpVariant variant) {
    if (q < 2) throw std::invalid_argument("lp_rate_bound: q must be >= 2");
    if (variant == LpVariant::first) return first_bound(q, delta);
    return second_bound_binary(q, delta);
}

double lp_constant_weight_bound(int q, double delta, double omega, bool monotone_regularized) {
    if (q != 2)
        throw std::invalid_argument("lp_constant_weight_bound: only q = 2 is supported");
    if (omega < 0.0 || omega > 0.5) {
        if (omega > 0.5 && omega < 0.5 + 1e-9) omega = 0.5;  // grid-endpoint rounding
        else throw std::out_of_range("lp_constant_weight_bound: omega outside [0,1/2]");
    }
    auto raw = [&](double w) {
        if (delta <= 0.0) return entropy_q(2, w);
        if (w < delta / 2.0) return 0.0;
        if (delta >= johnson_mean(2, w)) return 0.0;
        const double cap = std::min(first_bound(2, delta), second_bound_binary(2, delta));
        return std::min(cw_johnson_geometry(2, delta, w), cap);
    };
    if (!monotone_regularized) return raw(omega);
    double best = raw(omega);
    const int grid = 801;
    for (int i = 1; i < grid; ++i) {
        const double w = omega + (0.5 - omega) * double(i) / (grid - 1);
        best = std::min(best, raw(w));
    }
    return best;
}

double singleton_plugin(double delta) { return 1.0 - delta; }

RateBound default_rate_bound(int q) {
    if (q == 2) {
        return RateBound{"lp-min", 2, [](double d) {
                             return std::min(first_bound(2, d), second_bound_binary(2, d));
                         }};
    }
    return RateBound{"lp-first", q, [q](double d) { return first_bound(q, d); }};
}

RateBound singleton_rate_bound() {
    return RateBound{"singleton", 2, [](double d) { return singleton_plugin(d); }};
}

double lp_alphabet_bound(int q, double delta) {
    if (q < 2) throw std::invalid_argument("lp_alphabet_bound: q must be >= 2");
    const double qm = double(q - 1) / q;
    if (delta <= 0.0) return 1.0;
    if (delta >= qm) return 0.0;
    if (q == 2) return std::min(first_bound(2, delta), second_bound_binary(2, delta));
    thread_local std::unordered_map<long long, double> cache;
    const long long key = llround(delta * 1e12) * 128 + q;
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto obj = [&](double w) {
        return 1.0 - entropy_q(q, w) + cw_johnson_geometry(q, delta, w);
    };
    auto [w, v] = detail::grid_min(obj, 1e-9, qm, 801, 1e-12, 3);
    (void)w;
    const double r = std::clamp(std::min(v, first_bound(q, delta)), 0.0, 1.0);
    if (cache.size() > 200000) cache.clear();
    cache.emplace(key, r);
    return r;
}

CurveTable lower_convex_envelope(const CurveTable& curve) {
    const std::size_t n = curve.grid.size();
    if (n < 2 || curve.values.size() != n)
        throw std::invalid_argument("lower_convex_envelope: need >= 2 grid points");
    for (std::size_t i = 1; i < n; ++i)
        if (!(curve.grid[i] > curve.grid[i - 1]))
            throw std::invalid_argument("lower_convex_envelope: grid must be strictly increasing");

    // lower-hull scan over (x, y) points
    std::vector<std::size_t> hull;
    for (std::size_t i = 0; i < n; ++i) {
        while (hull.size() >= 2) {
            const std::size_t a = hull[hull.size() - 2], b = hull[hull.size() - 1];
            const double cross = (curve.grid[b] - curve.grid[a]) * (curve.values[i] - curve.values[a]) -
                                 (curve.values[b] - curve.values[a]) * (curve.grid[i] - curve.grid[a]);
            if (cross <= 0.0) hull.pop_back(); else break;
        }
        hull.push_back(i);
    }
    CurveTable out;
    out.name = curve.name + "-lce";
    out.grid = curve.grid;
    out.values.resize(n);
    std::size_t seg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (seg + 1 < hull.size() && curve.grid[hull[seg + 1]] < curve.grid[i]) ++seg;
        const std::size_t a = hull[seg];
        const std::size_t b = hull[std::min(seg + 1, hull.size() - 1)];
        if (a == b || curve.grid[i] <= curve.grid[a]) {
            out.values[i] = curve.values[a];
        } else {
            const double t = (curve.grid[i] - curve.grid[a]) / (curve.grid[b] - curve.grid[a]);
            out.values[i] = curve.values[a] + t * (curve.values[b] - curve.values[a]);
        }
    }
    return out;
}

}  // namespace lrc
