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

#ifndef LRC_LARGE_DEVIATIONS_HPP
#define LRC_LARGE_DEVIATIONS_HPP

#include <vector>

#include "lrc/core_math.hpp"

namespace lrc {

/// A probability distribution on a finite set of reals. All probabilities
/// must be strictly positive and sum to 1 within 1e-12.
struct FiniteDistribution {
    std::vector<double> support;
    std::vector<double> prob;

    FiniteDistribution(std::vector<double> xs, std::vector<double> ps);
    double mean() const;
    double min_support() const;
};

/// Lower-tail Chernoff/Cramer exponent base:
///   gamma(u) = inf_{z in (0,1]} z^{-u} E[z^X].
/// 0 below the minimum support point, p(x_min) at it, and 1 from E[X] on.
/// Computed by golden section in t = ln z on an expanding bracket
/// (the objective is a posynomial, hence convex in t).
double gamma_rate(const FiniteDistribution& dist, double u);

/// zeta_n(omega): unique root in [0,1] of U(z) = omega Q_n(z) - z P_n(z).
/// Strictly increasing in omega, zeta_n(0) = 0, zeta_n((q-1)/q) = 1.
/// Throws std::invalid_argument for n = 1 and std::out_of_range for omega
/// outside [0, (q-1)/q].
double zeta(int q, int n, double omega);

/// Closed-form inverse: zeta_inv(z) = z P_n(z) / Q_n(z).
double zeta_inv(int q, int n, double z);

struct LambdaEval {
    int q = 2;
    int n = 1;
    double omega = 0.0;
    double value = 0.0;       // lambda_q(omega, n), in [0, (n-1)/n]
    double minimizer = 0.0;   // z attaining the infimum
    double root_residual = 0.0;
};

/// The ball-growth exponent of products of [n, n-1, 2] parity codes:
///   lambda_q(omega, n) = inf_{z in (0,1]} { -omega log_q z - 1/n
///                                           + (1/n) log_q Q_n(z) }.
/// Endpoints: 0 at omega = 0, constant (n-1)/n for omega >= (q-1)/q,
/// identically 0 for n = 1 (the infimum sits at z = 1).
LambdaEval lambda_growth(int q, int n, double omega);

/// Upper-tail variant lambda*_q(omega, n) = (1/n) log_q inf z^{n omega} W(1/z)
/// for the parity code; defined on ((q-1)/q, w_max/n) where w_max is the top
/// codeword weight (n, except n-1 for q = 2 with n odd).
double lambda_star(int q, int n, double omega);

/// log_q of alpha(omega) = inf_{z in (0,1]} z^{-N omega} W(z) for an
/// arbitrary enumerator; for the parity enumerator equals n lambda(omega, n).
double ball_growth_alpha(const WeightEnumerator& enumerator, double omega);

}  // namespace lrc

#endif
