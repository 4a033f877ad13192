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

#include "lrc/wzl_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "lrc/core_math.hpp"
#include "lrc/disjoint_bounds.hpp"
#include "lrc/large_deviations.hpp"
#include "lrc/optimize.hpp"

namespace lrc {

namespace {

constexpr double kIntegerTol = 1e-9;

// R_0(zeta_s^{-1}(z), s) evaluated directly from z; (s-1)/s at z = 0.
double r0_from_z(int q, int s, double z) {
    if (s == 1) return 0.0;
    if (z <= 0.0) return double(s - 1) / s;
    if (z >= 1.0) return 0.0;
    const double v = 1.0 + zeta_inv(q, s, z) * log_base(z, q) - log_base(poly_Q(q, s, z), q) / s;
    return std::max(0.0, v);
}

struct TwoPoint {
    int k;
    double pi;
};

TwoPoint split(int n, double mu, AverageVariant variant) {
    int k = static_cast<int>(std::floor(mu + kIntegerTol));
    k = std::clamp(k, 1, n);
    double pi;
    if (variant == AverageVariant::per_group)
        pi = double(k) * (k + 1) / mu - k;
    else
        pi = double(k) + 1.0 - mu;
    pi = std::clamp(pi, 0.0, 1.0);
    return {k, pi};
}

// Unique [0,1] root of the two-term constraint, via the single polynomial
// omega Q_k Q_{k+1} - z (pi P_k Q_{k+1} + (1-pi) P_{k+1} Q_k); returns -1
// when even z = 1 cannot reach omega (the bound is 0 there).
double solve_z_star(int q, int k, double pi, double omega) {
    const double reach = pi * zeta_inv(q, k, 1.0) + (1.0 - pi) * zeta_inv(q, k + 1, 1.0);
    if (reach < omega) return -1.0;
    auto f = [&](double z) {
        const double Qk = poly_Q(q, k, z), Qk1 = poly_Q(q, k + 1, z);
        return omega * Qk * Qk1 -
               z * (pi * poly_P(q, k, z) * Qk1 + (1.0 - pi) * poly_P(q, k + 1, z) * Qk);
    };
    return detail::find_root(f, nullptr, 0.0, 1.0).x;
}

}  // namespace

double wzl_r0_bar(int q, int n, double mu, double omega, AverageVariant variant) {
    if (q < 2 || n < 1) throw std::invalid_argument("wzl_r0_bar: bad parameters");
    if (mu < 1.0 - kIntegerTol || mu > double(n) + kIntegerTol)
        throw std::out_of_range("wzl_r0_bar: mu outside [1,n]");
    mu = std::clamp(mu, 1.0, double(n));
    if (omega <= 0.0) return 1.0 - 1.0 / mu;
    if (omega >= double(q - 1) / q) return 0.0;
    if (std::fabs(mu - std::round(mu)) < kIntegerTol)
        return r0_lower(q, static_cast<int>(std::round(mu)), omega);
    const auto [k, pi] = split(n, mu, variant);
    if (k == 1) {
        // zeta_1^{-1} vanishes: all of omega rides on the (k+1)-term
        const double reach = (1.0 - pi) * zeta_inv(q, 2, 1.0);
        if (reach < omega) return 0.0;
        auto f = [&](double z) { return omega * poly_Q(q, 2, z) - (1.0 - pi) * z * poly_P(q, 2, z); };
        const double z = detail::find_root(f, nullptr, 0.0, 1.0).x;
        return (1.0 - pi) * r0_from_z(q, 2, z);
    }
    const double z = solve_z_star(q, k, pi, omega);
    if (z < 0.0) return 0.0;
    return pi * r0_from_z(q, k, z) + (1.0 - pi) * r0_from_z(q, k + 1, z);
}

PiTheta wzl_pi_theta(int q, int n, double mu, double omega, AverageVariant variant) {
    PiTheta out;
    out.n = n;
    out.pi.assign(static_cast<std::size_t>(n), 0.0);
    out.theta.assign(static_cast<std::size_t>(n), 0.0);
    mu = std::clamp(mu, 1.0, double(n));
    if (std::fabs(mu - std::round(mu)) < kIntegerTol) {
        const int k = static_cast<int>(std::round(mu));
        out.pi[static_cast<std::size_t>(k - 1)] = 1.0;
        out.theta[static_cast<std::size_t>(k - 1)] = omega;
        out.support = {k};
        out.z_star = (k >= 2 && omega > 0.0 && omega < double(q - 1) / q) ? zeta(q, k, omega) : 0.0;
        return out;
    }
    const auto [k, pi] = split(n, mu, variant);
    out.pi[static_cast<std::size_t>(k - 1)] = pi;
    out.pi[static_cast<std::size_t>(k)] = 1.0 - pi;
    out.support = {k, k + 1};
    if (omega <= 0.0) return out;
    double z;
    if (k == 1) {
        auto f = [&](double zz) {
            return omega * poly_Q(q, 2, zz) - (1.0 - pi) * zz * poly_P(q, 2, zz);
        };
        z = ((1.0 - pi) * zeta_inv(q, 2, 1.0) < omega) ? 1.0
                                                       : detail::find_root(f, nullptr, 0.0, 1.0).x;
        out.theta[0] = omega;  // the mu = 1 convention: theta_1 carries omega
        out.theta[1] = zeta_inv(q, 2, z);
        if (pi > 0.0) out.theta[0] = 0.0;
    } else {
        z = solve_z_star(q, k, pi, omega);
        if (z < 0.0) z = 1.0;
        out.theta[static_cast<std::size_t>(k - 1)] = zeta_inv(q, k, z);
        out.theta[static_cast<std::size_t>(k)] = zeta_inv(q, k + 1, z);
    }
    out.z_star = z;
    return out;
}

namespace {

// inner minimum value for an arbitrary feasible pi (common-z* characterization)
double inner_value_real(int q, int n, const std::vector<double>& pi, double omega) {
    double reach = 0.0;
    bool star_empty = true;
    for (int s = 2; s <= n; ++s) {
        if (pi[static_cast<std::size_t>(s - 1)] <= 0.0) continue;
        star_empty = false;
        reach += pi[static_cast<std::size_t>(s - 1)] * zeta_inv(q, s, 1.0);
    }
    if (star_empty) return 0.0;
    if (omega <= 0.0) {
        double v = 0.0;
        for (int s = 2; s <= n; ++s)
            v += pi[static_cast<std::size_t>(s - 1)] * double(s - 1) / s;
        return v;
    }
    if (reach < omega) return 0.0;
    auto f = [&](double z) {
        double acc = 0.0;
        for (int s = 2; s <= n; ++s) {
            const double p = pi[static_cast<std::size_t>(s - 1)];
            if (p > 0.0) acc += p * zeta_inv(q, s, z);
        }
        return omega - acc;
    };
    const double z = detail::find_root(f, nullptr, 0.0, 1.0).x;
    double v = 0.0;
    for (int s = 2; s <= n; ++s) {
        const double p = pi[static_cast<std::size_t>(s - 1)];
        if (p > 0.0) v += p * r0_from_z(q, s, z);
    }
    return v;
}

double inner_value(int q, int n, const std::vector<int>& counts, int denom, double omega) {
    // support without s = 1 (R_0(., 1) is identically zero)
    double reach = 0.0;
    bool star_empty = true;
    for (int s = 2; s <= n; ++s) {
        if (counts[static_cast<std::size_t>(s - 1)] == 0) continue;
        star_empty = false;
        reach += (double(counts[static_cast<std::size_t>(s - 1)]) / denom) * zeta_inv(q, s, 1.0);
    }
    if (star_empty) return 0.0;
    if (omega <= 0.0) {
        double v = 0.0;
        for (int s = 2; s <= n; ++s)
            v += (double(counts[static_cast<std::size_t>(s - 1)]) / denom) * double(s - 1) / s;
        return v;
    }
    if (reach < omega) return 0.0;
    auto f = [&](double z) {
        double acc = 0.0;
        for (int s = 2; s <= n; ++s) {
            const int c = counts[static_cast<std::size_t>(s - 1)];
            if (c) acc += (double(c) / denom) * zeta_inv(q, s, z);
        }
        return omega - acc;  // positive at 0, negative at 1
    };
    const double z = detail::find_root(f, nullptr, 0.0, 1.0).x;
    double v = 0.0;
    for (int s = 2; s <= n; ++s) {
        const int c = counts[static_cast<std::size_t>(s - 1)];
        if (c) v += (double(c) / denom) * r0_from_z(q, s, z);
    }
    return v;
}

bool feasible(int n, const std::vector<int>& counts, int denom, double mu,
              AverageVariant variant) {
    if (variant == AverageVariant::per_group) {
        double lhs = 0.0;
        for (int s = 1; s <= n; ++s)
            lhs += double(counts[static_cast<std::size_t>(s - 1)]) / (double(denom) * s);
        return lhs >= 1.0 / mu - 1e-12;
    }
    double lhs = 0.0;
    for (int s = 1; s <= n; ++s)
        lhs += double(s) * counts[static_cast<std::size_t>(s - 1)] / denom;
    return lhs <= mu + 1e-12;
}

struct OracleState {
    double best = -1.0;
    std::vector<int> best_counts;
};

void oracle_search(int q, int n, double mu, double omega, AverageVariant variant,
                   OracleState& out) {
    constexpr int kFine = 200;   // the 1/200 lattice of the contract
    constexpr int kCoarse = 25;  // 25 | 200, so coarse points live on the fine lattice

    std::vector<std::pair<double, std::vector<int>>> top;
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    // enumerate compositions of kCoarse into n parts
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == n - 1) {
            counts[static_cast<std::size_t>(idx)] = left;
            if (feasible(n, counts, kCoarse, mu, variant)) {
                const double v = inner_value(q, n, counts, kCoarse, omega);
                top.emplace_back(v, counts);
            }
            return;
        }
        for (int c = left; c >= 0; --c) {
            counts[static_cast<std::size_t>(idx)] = c;
            rec(idx + 1, left - c);
        }
    };
    rec(0, kCoarse);
    std::sort(top.begin(), top.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    const std::size_t starts = std::min<std::size_t>(top.size(), 24);

    OracleState state;
    for (std::size_t s = 0; s < starts; ++s) {
        std::vector<int> cur = top[s].second;
        for (auto& c : cur) c *= kFine / kCoarse;
        double val = inner_value(q, n, cur, kFine, omega);
        // steepest-ascent pair transfers on the fine lattice
        bool improved = true;
        while (improved) {
            improved = false;
            for (int step : {16, 8, 4, 2, 1}) {
                double best_gain = 0.0;
                int bi = -1, bj = -1;
                for (int i = 0; i < n; ++i) {
                    if (cur[static_cast<std::size_t>(i)] < step) continue;
                    for (int j = 0; j < n; ++j) {
                        if (j == i) continue;
                        cur[static_cast<std::size_t>(i)] -= step;
                        cur[static_cast<std::size_t>(j)] += step;
                        if (feasible(n, cur, kFine, mu, variant)) {
                            const double v = inner_value(q, n, cur, kFine, omega);
                            if (v > val + best_gain + 1e-15) {
                                best_gain = v - val;
                                bi = i;
                                bj = j;
                            }
                        }
                        cur[static_cast<std::size_t>(i)] += step;
                        cur[static_cast<std::size_t>(j)] -= step;
                    }
                }
                if (bi >= 0) {
                    cur[static_cast<std::size_t>(bi)] -= step;
                    cur[static_cast<std::size_t>(bj)] += step;
                    val += best_gain;
                    improved = true;
                    break;
                }
            }
        }
        if (val > state.best) {
            state.best = val;
            state.best_counts = cur;
        }
    }

    // Continuous polish: pairwise mass transfers with golden section, seeded
    // by the lattice optimum (the exact maximizer need not sit on the
    // lattice). Still search-based; the two-point recipe is never consulted.
    if (!state.best_counts.empty()) {
        std::vector<double> pi(static_cast<std::size_t>(n));
        for (int s = 0; s < n; ++s)
            pi[static_cast<std::size_t>(s)] = double(state.best_counts[static_cast<std::size_t>(s)]) / kFine;
        auto value_of = [&](const std::vector<double>& p) {
            if (variant == AverageVariant::per_group) {
                double lhs = 0.0;
                for (int s = 1; s <= n; ++s) lhs += p[static_cast<std::size_t>(s - 1)] / s;
                if (lhs < 1.0 / mu - 1e-12) return -1.0;
            } else {
                double lhs = 0.0;
                for (int s = 1; s <= n; ++s) lhs += s * p[static_cast<std::size_t>(s - 1)];
                if (lhs > mu + 1e-12) return -1.0;
            }
            return inner_value_real(q, n, p, omega);
        };
        double val = value_of(pi);
        for (int round = 0; round < 60; ++round) {
            double gain = 0.0;
            for (int i = 0; i < n; ++i) {
                if (pi[static_cast<std::size_t>(i)] <= 0.0) continue;
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    // largest transfer keeping the mu constraint (linear in t)
                    double t_max = pi[static_cast<std::size_t>(i)];
                    if (variant == AverageVariant::per_group) {
                        const double c = 1.0 / (j + 1) - 1.0 / (i + 1);
                        if (c < 0.0) {
                            double lhs = 0.0;
                            for (int u = 1; u <= n; ++u) lhs += pi[static_cast<std::size_t>(u - 1)] / u;
                            t_max = std::min(t_max, (lhs - 1.0 / mu) / (-c));
                        }
                    } else if (j > i) {
                        double lhs = 0.0;
                        for (int u = 1; u <= n; ++u) lhs += u * pi[static_cast<std::size_t>(u - 1)];
                        t_max = std::min(t_max, (mu - lhs) / double(j - i));
                    }
                    if (t_max <= 0.0) continue;
                    auto moved = [&](double t) {
                        std::vector<double> p = pi;
                        p[static_cast<std::size_t>(i)] -= t;
                        p[static_cast<std::size_t>(j)] += t;
                        return -value_of(p);
                    };
                    auto [t, negv] = detail::golden_min(moved, 0.0, t_max, 1e-13);
                    double cand_t = t, cand_v = -negv;
                    const double at_max = -moved(t_max);  // boundary candidate
                    if (at_max > cand_v) { cand_v = at_max; cand_t = t_max; }
                    if (cand_v > val + 1e-14) {
                        gain += cand_v - val;
                        val = cand_v;
                        pi[static_cast<std::size_t>(i)] -= cand_t;
                        pi[static_cast<std::size_t>(j)] += cand_t;
                    }
                }
            }
            // face-sliding triple moves: drain i into j and k with the mu
            // constraint held exactly (pair transfers cannot move along the
            // equality face where the maximizer typically sits)
            for (int i = 0; i < n; ++i) {
                if (pi[static_cast<std::size_t>(i)] <= 0.0) continue;
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    for (int k = j + 1; k < n; ++k) {
                        if (k == i) continue;
                        double beta;
                        if (variant == AverageVariant::per_group) {
                            const double si = i + 1.0, sj = j + 1.0, sk = k + 1.0;
                            beta = (1.0 / si - 1.0 / sk) / (1.0 / sj - 1.0 / sk);
                        } else {
                            beta = (double(i) - k) / (double(j) - k);
                        }
                        const double gamma = 1.0 - beta;
                        double t_max = pi[static_cast<std::size_t>(i)];
                        if (beta < 0.0)
                            t_max = std::min(t_max, pi[static_cast<std::size_t>(j)] / (-beta));
                        if (gamma < 0.0)
                            t_max = std::min(t_max, pi[static_cast<std::size_t>(k)] / (-gamma));
                        if (t_max <= 0.0) continue;
                        auto moved = [&](double t) {
                            std::vector<double> p = pi;
                            p[static_cast<std::size_t>(i)] -= t;
                            p[static_cast<std::size_t>(j)] += beta * t;
                            p[static_cast<std::size_t>(k)] += gamma * t;
                            return -value_of(p);
                        };
                        auto [t, negv] = detail::golden_min(moved, 0.0, t_max, 1e-13);
                        double cand_t = t, cand_v = -negv;
                        const double at_max = -moved(t_max);
                        if (at_max > cand_v) { cand_v = at_max; cand_t = t_max; }
                        if (cand_v > val + 1e-14) {
                            gain += cand_v - val;
                            val = cand_v;
                            pi[static_cast<std::size_t>(i)] -= cand_t;
                            pi[static_cast<std::size_t>(j)] += beta * cand_t;
                            pi[static_cast<std::size_t>(k)] += gamma * cand_t;
                        }
                    }
                }
            }
            if (gain < 1e-13) break;
        }
        if (val > state.best) state.best = val;
    }
    out = state;
}

}  // namespace

double wzl_direct_oracle(int q, int n, double mu, double omega, AverageVariant variant) {
    if (n > 6) throw std::invalid_argument("wzl_direct_oracle: n > 6 unsupported");
    if (mu < 1.0 - kIntegerTol || mu > double(n) + kIntegerTol)
        throw std::out_of_range("wzl_direct_oracle: mu outside [1,n]");
    if (omega >= double(q - 1) / q) return 0.0;
    OracleState st;
    oracle_search(q, n, std::clamp(mu, 1.0, double(n)), omega, variant, st);
    return std::max(st.best, 0.0);
}

std::vector<int> wzl_oracle_support(int q, int n, double mu, double omega,
                                    AverageVariant variant) {
    if (n > 6) throw std::invalid_argument("wzl_oracle_support: n > 6 unsupported");
    OracleState st;
    oracle_search(q, n, std::clamp(mu, 1.0, double(n)), omega, variant, st);
    std::vector<int> sup;
    for (int s = 1; s <= n; ++s)
        if (!st.best_counts.empty() && st.best_counts[static_cast<std::size_t>(s - 1)] > 0)
            sup.push_back(s);
    return sup;
}

}  // namespace lrc
