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

#ifndef LRC_OPTIMIZE_HPP
#define LRC_OPTIMIZE_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace lrc {

/// Integer power for small nonnegative exponents.
inline double ipow(double base, int e) {
    double r = 1.0;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline double log_base(double x, int q) { return std::log(x) / std::log(double(q)); }

namespace detail {

/// Root of a continuous f with f(lo) > 0 > f(hi). Bisection with guarded
/// Newton steps when a derivative is supplied; final bracket width <= 1e-14.
struct RootResult {
    double x;
    double residual;
};

RootResult find_root(const std::function<double(double)>& f,
                     const std::function<double(double)>& df,
                     double lo, double hi);

/// Golden-section minimum of a unimodal f on [a,b] to interval width tol.
std::pair<double, double> golden_min(const std::function<double(double)>& f,
                                     double a, double b, double tol,
                                     int max_iters = 200);

/// Dense-grid scan followed by golden refinement around the best few grid
/// cells. Returns (argmin, min). Non-convex safe: `starts` local refinements.
std::pair<double, double> grid_min(const std::function<double(double)>& f,
                                   double a, double b, int grid_points,
                                   double tol, int starts = 3);

/// Same for maximization.
std::pair<double, double> grid_max(const std::function<double(double)>& f,
                                   double a, double b, int grid_points,
                                   double tol, int starts = 3);

/// Run fn(i) for i in [0, count) on up to hardware_concurrency threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

/// log(sum exp(v_i)) over a range; -inf-safe.
double log_sum_exp(const double* v, std::size_t n);

}  // namespace detail
}  // namespace lrc

#endif
