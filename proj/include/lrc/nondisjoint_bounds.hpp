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

#ifndef LRC_NONDISJOINT_BOUNDS_HPP
#define LRC_NONDISJOINT_BOUNDS_HPP

#include <vector>

#include "lrc/disjoint_bounds.hpp"
#include "lrc/wzl_bounds.hpp"

namespace lrc {

/// One nu sweep of the hat-family objective, for diagnostics.
struct NuSweep {
    std::vector<double> grid;
    std::vector<double> values;
    double argmax = 0.0;
    double max_value = 0.0;
    double at_zero = 0.0;
    double at_end = 0.0;
};

/// R0-hat: max over nu in [0, (n-1)/(n+1)] of
///   nu + (1-nu) wzl_r0_bar(omega/(1-nu), n, ((1-nu)/(1+nu)) n),
/// with the inner mu clamped to [1, n].
double r0_hat(int q, int n, double omega, const OptimizerOptions& opt = {});

NuSweep r0_hat_sweep(int q, int n, double omega, int grid_points = 2001);

/// Sphere-packing form: r0_hat at delta/2.
double r_sp_hat(int q, int n, double delta, const OptimizerOptions& opt = {});

/// Shortening bound with R0-hat in the first slot and an unrestricted-rate
/// plug-in in the second (r2_hat may NOT be substituted for it).
double r1_hat(const BoundQuery& query, const RateBound& r_opt);

/// min over omega in [delta/2, (q-1)/q] of r0_hat(omega) + cw(delta, omega).
double r2_hat(const BoundQuery& query, const CwBoundFn& r_opt_cw);

/// Shorten-first variant: max over nu of nu + (1-nu) min over omega in
/// [delta/(2-2nu), (q-1)/q] of wzl_r0_bar(omega, n, mu(nu)) + cw(delta/(1-nu),
/// omega). mu(nu) = ((1-nu)/(1+nu)) n; printed_mu_variant switches to the
/// (1+nu)/(1-nu) n form (clamped to [1,n]) for comparison.
double r3_hat(const BoundQuery& query, const CwBoundFn& r_opt_cw,
              bool printed_mu_variant = false);

/// Closed-form nu-derivative of the r0_hat objective where mu(nu) is not an
/// integer:
///   (1 + k/n) log_q Q_{k+1}(z*) - (1 + (k+1)/n) log_q Q_k(z*).
/// Throws std::domain_error within 1e-9 of integer mu(nu).
double hat_derivative_diag(int q, int n, double omega, double nu);

}  // namespace lrc

#endif
