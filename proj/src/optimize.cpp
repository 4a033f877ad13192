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

#include "lrc/optimize.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace lrc {
namespace detail {

RootResult find_root(const std::function<double(double)>& f,
                     const std::function<double(double)>& df,
                     double lo, double hi) {
    double flo = f(lo);
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200 && (hi - lo) > 1e-14; ++it) {
        bool stepped = false;
        if (df) {
            // Newton from the midpoint, kept only while it stays in the bracket.
            double fx = f(x);
            double d = df(x);
            if (d != 0.0 && std::isfinite(d)) {
                double xn = x - fx / d;
                if (xn > lo && xn < hi) {
                    if ((fx > 0.0) == (flo > 0.0)) lo = x; else hi = x;
                    x = xn;
                    stepped = true;
                }
            }
        }
        if (!stepped) {
            double mid = 0.5 * (lo + hi);
            double fm = f(mid);
            if ((fm > 0.0) == (flo > 0.0)) lo = mid; else hi = mid;
            x = 0.5 * (lo + hi);
        }
    }
    if (x < lo || x > hi) x = 0.5 * (lo + hi);
    return {x, std::fabs(f(x))};
}

std::pair<double, double> golden_min(const std::function<double(double)>& f,
                                     double a, double b, double tol, int max_iters) {
    const double invphi = 0.6180339887498949;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < max_iters && (b - a) > tol; ++i) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

namespace {

std::pair<double, double> grid_opt(const std::function<double(double)>& f,
                                   double a, double b, int grid_points,
                                   double tol, int starts, bool maximize) {
    if (b < a) std::swap(a, b);
    if (grid_points < 2) grid_points = 2;
    std::vector<double> vals(static_cast<std::size_t>(grid_points));
    const double h = (b - a) / (grid_points - 1);
    for (int i = 0; i < grid_points; ++i)
        vals[static_cast<std::size_t>(i)] = f(a + h * i);

    auto better = [&](double u, double v) { return maximize ? u > v : u < v; };

    // indices of the best `starts` local optima (grid cells)
    std::vector<int> order(static_cast<std::size_t>(grid_points));
    for (int i = 0; i < grid_points; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return better(vals[static_cast<std::size_t>(i)], vals[static_cast<std::size_t>(j)]);
    });

    double best_x = a + h * order[0];
    double best_v = vals[static_cast<std::size_t>(order[0])];
    int used = 0;
    std::vector<int> picked;
    for (int idx : order) {
        if (used >= starts) break;
        bool close = false;
        for (int p : picked)
            if (std::abs(p - idx) <= 2) { close = true; break; }
        if (close) continue;
        picked.push_back(idx);
        ++used;
        double lo = std::max(a, a + h * (idx - 1));
        double hi = std::min(b, a + h * (idx + 1));
        auto g = maximize ? std::function<double(double)>([&](double x) { return -f(x); })
                          : f;
        auto [x, v] = golden_min(g, lo, hi, tol);
        if (maximize) v = -v;
        if (better(v, best_v)) { best_v = v; best_x = x; }
    }
    return {best_x, best_v};
}

}  // namespace

std::pair<double, double> grid_min(const std::function<double(double)>& f,
                                   double a, double b, int grid_points,
                                   double tol, int starts) {
    return grid_opt(f, a, b, grid_points, tol, starts, false);
}

std::pair<double, double> grid_max(const std::function<double(double)>& f,
                                   double a, double b, int grid_points,
                                   double tol, int starts) {
    return grid_opt(f, a, b, grid_points, tol, starts, true);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw < 2 || count < 4) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    unsigned workers = std::min<std::size_t>(hw, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

double log_sum_exp(const double* v, std::size_t n) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, v[i]);
    if (!std::isfinite(m)) return m;
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::exp(v[i] - m);
    return m + std::log(s);
}

}  // namespace detail
}  // namespace lrc
