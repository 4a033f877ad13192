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

#ifndef LRC_LP_BOUNDS_HPP
#define LRC_LP_BOUNDS_HPP

#include <functional>
#include <string>
#include <vector>

namespace lrc {

enum class LpVariant { first, second };

/// Linear-programming upper bounds on the rate of unrestricted codes.
///  - first: H_q((q-1-(q-2)d-2 sqrt((q-1)d(1-d)))/q), any q >= 2.
///  - second (q = 2 only): min_{u in [0,1-2d]} 1 + h(u^2) - h(u^2+2du+2d)
///    with h(x) = H_2((1-sqrt(1-x))/2).
/// Both are 0 from (q-1)/q on. Throws std::invalid_argument for
/// variant = second with q != 2.
double lp_rate_bound(int q, double delta, LpVariant variant);

/// Upper bound on the rate of binary constant-weight codes of relative
/// weight omega and relative distance delta. Zero for omega < delta/2 and
/// beyond the Johnson radius delta >= 2 omega (1-omega); never exceeds the
/// unrestricted LP bound. Only q = 2 is supported; q > 2 callers must supply
/// their own plug-in. With monotone_regularized the bound is replaced by its
/// running minimum over omega' in [omega, 1/2] (valid since the true
/// constant-weight rate is nondecreasing in omega); off by default.
double lp_constant_weight_bound(int q, double delta, double omega,
                                bool monotone_regularized = false);

/// The Singleton plug-in 1 - delta.
double singleton_plugin(double delta);

/// A named rate-bound function delta -> rate, the plug-in unit every
/// composite bound accepts.
struct RateBound {
    std::string name;
    int q = 2;
    std::function<double(double)> fn;
    double operator()(double delta) const { return fn(delta); }
};

/// Default R_opt plug-in: pointwise min of the first and second bounds for
/// q = 2, the first bound for q > 2.
RateBound default_rate_bound(int q);
RateBound singleton_rate_bound();

/// Second-kind LP bound for a general alphabet size (the plug-in used by the
/// n = 3 analysis): pointwise min of the first bound and an Elias-Bassalygo
/// composition with a q-ary Johnson-geometry constant-weight bound. For
/// q = 2 this is exactly min(first, second).
double lp_alphabet_bound(int q, double delta);

/// Ordered (delta, value) samples of one named bound.
struct CurveTable {
    std::string name;
    std::vector<double> grid;
    std::vector<double> values;
};

/// Greatest convex minorant of the sampled curve on its own grid, by a
/// lower-hull scan. Throws std::invalid_argument for fewer than 2 points or
/// a non-increasing grid.
CurveTable lower_convex_envelope(const CurveTable& curve);

}  // namespace lrc

#endif
