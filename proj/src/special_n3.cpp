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

#include "lrc/special_n3.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lrc/optimize.hpp"

namespace lrc {

double n2_bound(int q, double delta, const RateBound& r_opt) {
    const double qm = double(q - 1) / q;
    if (delta >= qm) return 0.0;
    return 0.5 * r_opt(delta);
}

double n2_bound(int q, double delta) { return n2_bound(q, delta, default_rate_bound(q)); }

double bhl_mixed_bound(const MixedAlphabetSpec& spec, double delta) {
    if (spec.beta1 <= 0.0 || spec.beta2 <= 0.0)
        throw std::invalid_argument("bhl_mixed_bound: distance weights must be positive");
    if (spec.tau < 0.0 || spec.tau > 1.0)
        throw std::out_of_range("bhl_mixed_bound: tau outside [0,1]");
    const double tau = spec.tau;
    const double qm1 = double(spec.q1 - 1) / spec.q1;
    const double qm2 = double(spec.q2 - 1) / spec.q2;
    const double reach = tau * spec.beta1 * qm1 + (1.0 - tau) * spec.beta2 * qm2;
    if (delta >= reach) return 0.0;
    const double l1 = std::log2(double(spec.q1));
    const double l2 = std::log2(double(spec.q2));
    auto rate1 = [&](double th) { return lp_alphabet_bound(spec.q1, th); };
    auto rate2 = [&](double th) { return lp_alphabet_bound(spec.q2, th); };
    if (tau >= 1.0) return rate1(delta / spec.beta1) * l1;
    if (tau <= 0.0) return rate2(delta / spec.beta2) * l2;
    // eliminate theta' through the weighted distance constraint
    const double c2 = (1.0 - tau) * spec.beta2;
    const double th_lo = std::max(0.0, (delta - c2) / (tau * spec.beta1));
    const double th_hi = std::min(1.0, delta / (tau * spec.beta1));
    auto obj = [&](double th) {
        const double thp = std::clamp((delta - tau * spec.beta1 * th) / c2, 0.0, 1.0);
        return tau * rate1(th) * l1 + (1.0 - tau) * rate2(thp) * l2;
    };
    auto [th, v] = detail::grid_min(obj, th_lo, th_hi, 2001, 1e-10, 3);
    (void)th;
    return v;
}

double n3_bound(double delta) {
    if (delta < 0.0 || delta > 1.0) throw std::out_of_range("n3_bound: delta outside [0,1]");
    const double arg = 1.5 * delta;
    if (arg >= 0.75) return 0.0;
    return (2.0 / 3.0) * lp_alphabet_bound(4, arg);
}

SweepReport n3_tau_sweep(double delta, const std::vector<double>& tau_grid) {
    SweepReport rep;
    rep.grid = tau_grid;
    rep.values.reserve(tau_grid.size());
    for (double tau : tau_grid) {
        MixedAlphabetSpec s{2, 4, 1.0, 2.0 / 3.0, tau};
        const double v = bhl_mixed_bound(s, delta) / 3.0;  // per inner binary symbol
        rep.values.push_back(v);
        if (rep.values.size() == 1 || v > rep.max_value) {
            rep.max_value = v;
            rep.argmax = tau;
        }
    }
    return rep;
}

SweepReport n3_sigma_sweep(double delta, const std::vector<double>& sigma_grid) {
    SweepReport rep;
    rep.grid = sigma_grid;
    rep.values.reserve(sigma_grid.size());
    for (double sigma : sigma_grid) {
        if (sigma < 0.0) throw std::out_of_range("n3_sigma_sweep: sigma must be >= 0");
        const double arg = 1.5 * delta / (1.0 + sigma);
        const double lp = (arg >= 0.75) ? 0.0 : lp_alphabet_bound(4, arg);
        const double v = (2.0 * (1.0 + sigma) / 3.0) * lp - sigma;
        rep.values.push_back(v);
        if (rep.values.size() == 1 || v > rep.max_value) {
            rep.max_value = v;
            rep.argmax = sigma;
        }
    }
    return rep;
}

}  // namespace lrc
