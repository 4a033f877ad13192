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

#include "lrc/large_deviations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lrc/optimize.hpp"

namespace lrc {

FiniteDistribution::FiniteDistribution(std::vector<double> xs, std::vector<double> ps)
    : support(std::move(xs)), prob(std::move(ps)) {
    if (support.empty() || support.size() != prob.size())
        throw std::invalid_argument("FiniteDistribution: size mismatch");
    double total = 0.0;
    for (double p : prob) {
        if (p <= 0.0) throw std::invalid_argument("FiniteDistribution: probabilities must be > 0");
        total += p;
    }
    if (std::fabs(total - 1.0) > 1e-12)
        throw std::invalid_argument("FiniteDistribution: probabilities must sum to 1");
    for (std::size_t i = 0; i < support.size(); ++i)
        for (std::size_t j = i + 1; j < support.size(); ++j)
            if (support[i] == support[j])
                throw std::invalid_argument("FiniteDistribution: support points must be distinct");
}

double FiniteDistribution::mean() const {
    double m = 0.0;
    for (std::size_t i = 0; i < support.size(); ++i) m += support[i] * prob[i];
    return m;
}

double FiniteDistribution::min_support() const {
    return *std::min_element(support.begin(), support.end());
}

double gamma_rate(const FiniteDistribution& dist, double u) {
    const double xmin = dist.min_support();
    if (u < xmin) return 0.0;
    if (u == xmin) {
        for (std::size_t i = 0; i < dist.support.size(); ++i)
            if (dist.support[i] == xmin) return dist.prob[i];
    }
    if (u >= dist.mean()) return 1.0;

    auto g = [&](double t) {
        double s = 0.0;
        for (std::size_t i = 0; i < dist.support.size(); ++i)
            s += dist.prob[i] * std::exp(t * (dist.support[i] - u));
        return s;
    };
    double lo = -60.0;
    while (g(lo) < g(lo + 1.0) && lo > -700.0) lo -= 60.0;
    auto [t, v] = detail::golden_min(g, lo, 0.0, 1e-13);
    (void)t;
    return std::min(v, 1.0);
}

double zeta_inv(int q, int n, double z) {
    if (n == 1) return 0.0;
    if (z <= 0.0) return 0.0;
    return z * poly_P(q, n, z) / poly_Q(q, n, z);
}

double zeta(int q, int n, double omega) {
    if (q < 2) throw std::invalid_argument("zeta: q must be >= 2");
    if (n == 1) throw std::invalid_argument("zeta: n = 1 has no unique minimizer");
    const double qm = double(q - 1) / q;
    if (omega < 0.0 || omega > qm) throw std::out_of_range("zeta: omega outside [0,(q-1)/q]");
    if (omega == 0.0) return 0.0;
    if (omega >= qm) return 1.0;
    auto U = [&](double z) { return omega * poly_Q(q, n, z) - z * poly_P(q, n, z); };
    // U' = omega n P - P - z P'
    auto dU = [&](double z) {
        double P = poly_P(q, n, z);
        return omega * n * P - P - z * poly_P_prime(q, n, z);
    };
    return detail::find_root(U, dU, 0.0, 1.0).x;
}

LambdaEval lambda_growth(int q, int n, double omega) {
    if (q < 2 || n < 1) throw std::invalid_argument("lambda_growth: bad parameters");
    if (omega < 0.0) throw std::out_of_range("lambda_growth: omega must be >= 0");
    LambdaEval e;
    e.q = q;
    e.n = n;
    e.omega = omega;
    const double qm = double(q - 1) / q;
    if (n == 1) {
        // Q_1 is constant q, so the objective is -omega log_q z: minimum at z=1.
        e.value = 0.0;
        e.minimizer = (omega > 0.0) ? 1.0 : 0.0;
        return e;
    }
    if (omega == 0.0) {
        e.value = 0.0;
        e.minimizer = 0.0;
        return e;
    }
    if (omega >= qm) {
        e.value = double(n - 1) / n;
        e.minimizer = 1.0;
        return e;
    }
    const double z = zeta(q, n, omega);
    e.minimizer = z;
    e.root_residual = std::fabs(omega * poly_Q(q, n, z) - z * poly_P(q, n, z));
    e.value = -omega * log_base(z, q) - 1.0 / n + log_base(poly_Q(q, n, z), q) / n;
    return e;
}

double lambda_star(int q, int n, double omega) {
    if (n < 2) throw std::invalid_argument("lambda_star: n must be >= 2");
    const double qm = double(q - 1) / q;
    const int wmax = (q == 2 && n % 2 == 1) ? n - 1 : n;
    if (omega <= qm || omega >= double(wmax) / n)
        throw std::domain_error("lambda_star: omega outside ((q-1)/q, w_max/n)");
    const WeightEnumerator w = parity_weight_enumerator(q, n);
    // objective in t = ln z: n omega t + log W(e^{-t} inverse) ... convex posynomial
    auto f = [&](double t) {
        const double z = std::exp(t);
        std::vector<double> terms(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            terms[i] = w.log_coeffs[i] + (double(n) * omega - double(i)) * t;
        (void)z;
        return detail::log_sum_exp(terms.data(), terms.size());
    };
    double lo = -60.0;
    while (f(lo) < f(lo + 1.0) && lo > -700.0) lo -= 60.0;
    auto [t, v] = detail::golden_min(f, lo, 0.0, 1e-13);
    (void)t;
    return v / (double(n) * std::log(double(q)));
}

double ball_growth_alpha(const WeightEnumerator& w, double omega) {
    if (omega < 0.0) throw std::out_of_range("ball_growth_alpha: omega must be >= 0");
    const double Nw = double(w.length) * omega;
    auto f = [&](double t) {
        std::vector<double> terms(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            terms[i] = w.log_coeffs[i] + (double(i) - Nw) * t;
        return detail::log_sum_exp(terms.data(), terms.size());
    };
    double lo = -60.0;
    while (f(lo) < f(lo + 1.0) && lo > -700.0) lo -= 60.0;
    auto [t, v] = detail::golden_min(f, lo, 0.0, 1e-13);
    (void)t;
    return v / std::log(double(w.q));
}

}  // namespace lrc
