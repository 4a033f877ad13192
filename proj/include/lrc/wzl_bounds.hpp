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

#ifndef LRC_WZL_BOUNDS_HPP
#define LRC_WZL_BOUNDS_HPP

#include <vector>

namespace lrc {

/// Which average of the repair-group sizes the mu constraint refers to:
/// per distinct group (sum pi_s / s >= 1/mu) or per coordinate
/// (sum s pi_s <= mu).
enum class AverageVariant { per_group, per_coordinate };

/// The (pi, theta) pair of the max-min together with its support and the
/// common minimizer z*.
struct PiTheta {
    int n = 1;
    std::vector<double> pi;      // length n, indices 1..n stored at [s-1]
    std::vector<double> theta;   // same layout
    std::vector<int> support;    // indices s with pi_s > 0
    double z_star = 0.0;
};

/// Average-group-size rate bound via the two-point closed form:
/// k = floor(mu), pi = k(k+1)/mu - k (per_group) or k+1-mu (per_coordinate),
/// z* the unique [0,1] root of pi zeta_k^{-1} + (1-pi) zeta_{k+1}^{-1} = omega,
/// value pi R_0(theta, k) + (1-pi) R_0(theta', k+1). Integer mu collapses to
/// R_0(omega, mu); omega = 0 gives 1 - 1/mu; mu = 1 gives 0 throughout.
/// Throws std::out_of_range for mu outside [1, n].
double wzl_r0_bar(int q, int n, double mu, double omega,
                  AverageVariant variant = AverageVariant::per_group);

/// The optimizing (pi, theta, z*) behind wzl_r0_bar, for inspection/tests.
PiTheta wzl_pi_theta(int q, int n, double mu, double omega,
                     AverageVariant variant = AverageVariant::per_group);

/// Independent brute-force of the max-min: enumerates pi on the 1/200
/// simplex lattice (coarse lattice pass plus steepest-ascent transfers on the
/// fine lattice), solving each inner minimum through the common-z*
/// characterization. Only n <= 6. Test oracle; never used by wzl_r0_bar.
double wzl_direct_oracle(int q, int n, double mu, double omega,
                         AverageVariant variant = AverageVariant::per_group);

/// Support of the lattice maximizer found by the oracle (diagnostics).
std::vector<int> wzl_oracle_support(int q, int n, double mu, double omega,
                                    AverageVariant variant = AverageVariant::per_group);

}  // namespace lrc

#endif
