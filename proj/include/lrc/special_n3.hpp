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

#ifndef LRC_SPECIAL_N3_HPP
#define LRC_SPECIAL_N3_HPP

#include <vector>

#include "lrc/lp_bounds.hpp"

namespace lrc {

/// Two alphabets mixed in one outer code; beta/beta' are the per-coordinate
/// distance weights each contributes, tau the fraction of Q-coordinates.
struct MixedAlphabetSpec {
    int q1 = 2;
    int q2 = 2;
    double beta1 = 1.0;
    double beta2 = 1.0;
    double tau = 0.0;
};

/// Group-size-2 bound: half the configured unrestricted-rate plug-in.
double n2_bound(int q, double delta, const RateBound& r_opt);
double n2_bound(int q, double delta);

/// Mixed-alphabet concatenation bound in bits per outer coordinate:
/// min over the constrained (theta, theta') segment of
/// tau R(theta) log2|Q| + (1-tau) R'(theta') log2|Q'|, with
/// tau beta theta + (1-tau) beta' theta' = delta. 0 when delta is beyond the
/// alphabets' combined Plotkin reach.
double bhl_mixed_bound(const MixedAlphabetSpec& spec, double delta);

/// Size-3-group binary bound (2/3) R_LP;F4(3 delta / 2); zero from 1/2 on.
double n3_bound(double delta);

struct SweepReport {
    std::vector<double> grid;
    std::vector<double> values;
    double argmax = 0.0;
    double max_value = 0.0;
};

/// Sweeps the mixed bound (per inner binary symbol: divided by 3, weights
/// 1 and 2/3) over tau; the maximum is expected at tau = 0.
SweepReport n3_tau_sweep(double delta, const std::vector<double>& tau_grid);

/// Sweeps (2(1+sigma)/3) R_LP;F4(3 delta/(2(1+sigma))) - sigma over sigma;
/// the maximum is expected at sigma = 0.
SweepReport n3_sigma_sweep(double delta, const std::vector<double>& sigma_grid);

}  // namespace lrc

#endif
