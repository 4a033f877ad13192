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

#include "lrc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "lrc/optimize.hpp"

namespace lrc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::size_t snapped_floor(double x) {
    const double r = std::round(x);
    if (std::fabs(x - r) < 1e-9) return static_cast<std::size_t>(std::max(0.0, r));
    return static_cast<std::size_t>(std::max(0.0, std::floor(x)));
}

// log-domain convolution of nonnegative sequences, truncated at trunc_len
std::vector<double> log_convolve(const std::vector<double>& a, const std::vector<double>& b,
                                 std::size_t trunc_len) {
    const std::size_t full = a.size() + b.size() - 1;
    const std::size_t len = std::min(full, trunc_len);
    std::vector<double> out(len, kNegInf);
    for (std::size_t k = 0; k < len; ++k) {
        const std::size_t i_lo = (k >= b.size() - 1) ? k - (b.size() - 1) : 0;
        const std::size_t i_hi = std::min(k, a.size() - 1);
        double m = kNegInf;
        for (std::size_t i = i_lo; i <= i_hi; ++i) {
            const double t = a[i] + b[k - i];
            if (t > m) m = t;
        }
        if (m == kNegInf) continue;
        double s = 0.0;
        for (std::size_t i = i_lo; i <= i_hi; ++i) s += std::exp(a[i] + b[k - i] - m);
        out[k] = m + std::log(s);
    }
    return out;
}

std::vector<mpz_class> exact_convolve(const std::vector<mpz_class>& a,
                                      const std::vector<mpz_class>& b) {
    std::vector<mpz_class> out(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    return out;
}

// log-domain power by repeated squaring, truncated
std::vector<double> log_power(const std::vector<double>& base, int ell, std::size_t trunc_len) {
    std::vector<double> result{0.0};  // the empty product: single weight-0 word
    std::vector<double> sq = base;
    int e = ell;
    while (e > 0) {
        if (e & 1) result = log_convolve(result, sq, trunc_len);
        e >>= 1;
        if (e) sq = log_convolve(sq, sq, trunc_len);
    }
    return result;
}

double mpz_log(const mpz_class& v) {
    if (v == 0) return kNegInf;
    signed long e = 0;
    const double d = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log(d) + double(e) * std::log(2.0);
}

}  // namespace

mpz_class ball_count(const WeightEnumerator& w, std::size_t radius) {
    if (!w.exact_mode) throw std::logic_error("ball_count: log-domain enumerator, use log_ball_count");
    if (radius > w.length) throw std::out_of_range("ball_count: radius exceeds length");
    mpz_class total = 0;
    for (std::size_t i = 0; i <= radius; ++i) total += w.coeffs[i];
    return total;
}

double log_ball_count(const WeightEnumerator& w, std::size_t radius) {
    radius = std::min(radius, w.length);
    return detail::log_sum_exp(w.log_coeffs.data(), radius + 1);
}

WeightEnumerator power_enumerator(const WeightEnumerator& w, int ell) {
    if (ell < 1) throw std::invalid_argument("power_enumerator: ell must be >= 1");
    if (ell == 1) return w;
    const std::size_t out_len = w.length * static_cast<std::size_t>(ell);
    if (w.exact_mode && out_len <= 64) {
        std::vector<mpz_class> acc{mpz_class(1)};
        std::vector<mpz_class> sq = w.coeffs;
        int e = ell;
        while (e > 0) {
            if (e & 1) acc = exact_convolve(acc, sq);
            e >>= 1;
            if (e) sq = exact_convolve(sq, sq);
        }
        acc.resize(out_len + 1, mpz_class(0));
        WeightEnumerator out = make_exact_enumerator(w.q, std::move(acc));
        return out;
    }
    WeightEnumerator out;
    out.q = w.q;
    out.length = out_len;
    out.exact_mode = false;
    out.dimension = w.dimension * ell;
    out.log_coeffs = log_power(w.log_coeffs, ell, out_len + 1);
    out.log_coeffs.resize(out_len + 1, kNegInf);
    return out;
}

ConvergenceReport cramer_convergence(int q, int n, double omega, const std::vector<int>& ells) {
    ConvergenceReport rep;
    rep.q = q;
    rep.n = n;
    rep.omega = omega;
    rep.asymptote = lambda_growth(q, n, omega).value;

    std::vector<int> sorted = ells;
    std::sort(sorted.begin(), sorted.end());
    for (int l : sorted)
        if (l < 1 || l > 4096) throw std::out_of_range("cramer_convergence: ell outside [1,4096]");

    const WeightEnumerator base = parity_weight_enumerator(q, n);
    const int max_ell = sorted.back();
    const std::size_t trunc =
        std::min<std::size_t>(snapped_floor(omega * max_ell * n) + 1,
                              static_cast<std::size_t>(max_ell) * n + 1);
    const double lq = std::log(double(q));

    // cache powers of two of the base enumerator (log domain, truncated)
    std::map<int, std::vector<double>> pow2;
    pow2[1] = base.log_coeffs;
    for (int p = 2; p <= max_ell; p *= 2)
        pow2[p] = log_convolve(pow2[p / 2], pow2[p / 2], trunc);

    for (int l : sorted) {
        std::vector<double> cur{0.0};
        int rem = l, bit = 1;
        while (rem > 0) {
            if (rem & 1) cur = log_convolve(cur, pow2[bit], trunc);
            rem >>= 1;
            bit *= 2;
        }
        const std::size_t radius = snapped_floor(omega * l * n);
        const std::size_t upto = std::min(radius, cur.size() - 1);
        const double log_count = detail::log_sum_exp(cur.data(), upto + 1);
        const double exponent = log_count / (double(l) * n * lq);
        rep.ells.push_back(l);
        rep.exponents.push_back(exponent);
        rep.max_violation = std::max(rep.max_violation, exponent - rep.asymptote);
    }
    rep.final_gap = rep.asymptote - rep.exponents.back();
    return rep;
}

ChernoffCheck chernoff_check(const std::vector<long long>& support,
                             const std::vector<unsigned long long>& weights,
                             double u, int ell) {
    if (support.empty() || support.size() != weights.size())
        throw std::invalid_argument("chernoff_check: bad distribution");
    if (ell < 1) throw std::invalid_argument("chernoff_check: ell must be >= 1");
    long long lo = *std::min_element(support.begin(), support.end());
    long long hi = *std::max_element(support.begin(), support.end());

    // shifted pmf as integer counts on [0, hi-lo]
    std::vector<mpz_class> pmf(static_cast<std::size_t>(hi - lo) + 1, mpz_class(0));
    mpz_class total = 0;
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (weights[i] == 0) throw std::invalid_argument("chernoff_check: zero weight");
        const mpz_class w(static_cast<unsigned long>(weights[i]));
        pmf[static_cast<std::size_t>(support[i] - lo)] += w;
        total += w;
    }
    std::vector<mpz_class> conv{mpz_class(1)};
    std::vector<mpz_class> sq = pmf;
    int e = ell;
    while (e > 0) {
        if (e & 1) conv = exact_convolve(conv, sq);
        e >>= 1;
        if (e) sq = exact_convolve(sq, sq);
    }
    // Prob{ sum <= u ell } with the same nearby-integer snap as the ball radii
    const double threshold = u * ell - double(lo) * ell;
    mpz_class count = 0;
    long long idx_hi = static_cast<long long>(std::floor(threshold + 1e-9));
    for (long long i = 0; i <= idx_hi && i < static_cast<long long>(conv.size()); ++i)
        if (i >= 0) count += conv[static_cast<std::size_t>(i)];

    ChernoffCheck out;
    mpz_class total_pow;
    mpz_pow_ui(total_pow.get_mpz_t(), total.get_mpz_t(), static_cast<unsigned long>(ell));
    out.exact_log_prob_per_sample =
        (count == 0) ? kNegInf : (mpz_log(count) - mpz_log(total_pow)) / ell;

    std::vector<double> xs(support.begin(), support.end());
    std::vector<double> ps;
    const double tot = mpz_get_d(total.get_mpz_t());
    ps.reserve(weights.size());
    for (auto w : weights) ps.push_back(double(w) / tot);
    out.bound_log_gamma = std::log(gamma_rate(FiniteDistribution(xs, ps), u));
    return out;
}

ChernoffCheck chernoff_check(const FiniteDistribution& dist, double u, int ell) {
    std::vector<long long> support;
    std::vector<unsigned long long> weights;
    // smallest common denominator <= 1e6 reproducing every probability exactly
    long long denom = -1;
    for (long long d = 1; d <= 1000000; ++d) {
        bool ok = true;
        for (double p : dist.prob) {
            const double s = p * double(d);
            if (std::fabs(s - std::round(s)) > 1e-12 * d) { ok = false; break; }
        }
        if (ok) { denom = d; break; }
    }
    if (denom < 0)
        throw std::invalid_argument("chernoff_check: probabilities are not small rationals");
    for (std::size_t i = 0; i < dist.support.size(); ++i) {
        const double x = dist.support[i];
        if (std::fabs(x - std::round(x)) > 1e-12)
            throw std::invalid_argument("chernoff_check: support must be integer-scaled");
        support.push_back(static_cast<long long>(std::llround(x)));
        weights.push_back(static_cast<unsigned long long>(std::llround(dist.prob[i] * denom)));
    }
    return chernoff_check(support, weights, u, ell);
}

}  // namespace lrc
