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

#ifndef LRC_DISJOINT_BOUNDS_HPP
#define LRC_DISJOINT_BOUNDS_HPP

#include <functional>

#include "lrc/lp_bounds.hpp"

namespace lrc {

/// Grid sizes, refinement depth and tolerances for every optimizing bound.
struct OptimizerOptions {
    int cm_tau_grid = 4001;    // 1D minimization in R_CM
    int tau_grid = 101;        // outer grid of the two-parameter bounds
    int theta_grid = 101;      // inner grid after eliminating theta'
    int omega_grid = 4001;     // omega sweeps (R_2 family)
    int nu_grid = 2001;        // nu sweeps (hat family)
    double value_tol = 1e-6;   // golden-section interval tolerance
    double tau_eps = 1e-4;     // open-interval clearance for tau
};

/// Everything a rate-bound evaluation needs besides its plug-ins.
struct BoundQuery {
    int q = 2;
    int n = 2;
    double delta = 0.0;
    OptimizerOptions opt;
};

/// Constant-weight plug-in type: (delta, omega) -> rate upper bound.
using CwBoundFn = std::function<double(double, double)>;

/// Default constant-weight plug-in (binary transcription behind
/// lp_constant_weight_bound, with the per-delta cap hoisted).
CwBoundFn default_cw_bound(int q);

/// Achievability floor R_0(delta, n) = (n-1)/n - lambda(delta, n), at least 0.
double r0_lower(int q, int n, double delta);

/// Sphere-packing bound R_SP(delta, n) = R_0(delta/2, n).
double r_sp(int q, int n, double delta);

/// R_CM: min_{tau in [0,1-delta]} tau (n-1)/n + (1-tau) r_opt(delta/(1-tau)).
double r_cm(const BoundQuery& query, const RateBound& r_opt);

/// Two-parameter shortening bound: inf over tau in (0,1) and theta on the
/// feasible segment (theta' eliminated through tau theta + (1-tau) theta' =
/// delta) of tau R_0(theta/2, n) + (1-tau) r_lrc(theta'). The tau -> 1 limit
/// (R_SP) and the theta = 0 slice (the R_CM objective) are taken as explicit
/// candidates.
double r1(const BoundQuery& query, const RateBound& r_lrc);

/// min over omega in [delta/2, (q-1)/q] of R_0(omega, n) + r_opt_cw(delta,
/// omega); the objective may be non-convex, so a dense grid with multi-start
/// refinement is used.
double r2(const BoundQuery& query, const CwBoundFn& r_opt_cw);

/// r1 with the LRC plug-in replaced by a memoized r2 (memo keyed on delta
/// rounded to 1e-6; no interpolation). Plug-ins default to default_rate_bound
/// and default_cw_bound.
double r12(const BoundQuery& query);
double r12(const BoundQuery& query, const CwBoundFn& r_opt_cw);

}  // namespace lrc

#endif
