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

#include "lrc/core_math.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lrc/optimize.hpp"

namespace lrc {

double entropy_q(int q, double x) {
    if (q < 2) throw std::invalid_argument("entropy_q: q must be >= 2");
    if (x < 0.0 || x > 1.0) throw std::domain_error("entropy_q: x outside [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return log_base(double(q - 1), q);
    const double lq = std::log(double(q));
    return (x * std::log(double(q - 1)) - x * std::log(x) - (1.0 - x) * std::log1p(-x)) / lq;
}

double poly_Q(int q, int n, double z) {
    return ipow(1.0 + (q - 1) * z, n) + (q - 1) * ipow(1.0 - z, n);
}

double poly_P(int q, int n, double z) {
    return (q - 1) * (ipow(1.0 + (q - 1) * z, n - 1) - ipow(1.0 - z, n - 1));
}

double poly_P_prime(int q, int n, double z) {
    if (n < 2) return 0.0;
    return double(q - 1) * (n - 1) *
           ((q - 1) * ipow(1.0 + (q - 1) * z, n - 2) + ipow(1.0 - z, n - 2));
}

PQEval pq_eval(int q, int n, double z) {
    PQEval e;
    e.q = q;
    e.n = n;
    e.z = z;
    e.q_value = poly_Q(q, n, z);
    e.p_value = poly_P(q, n, z);
    return e;
}

double WeightEnumerator::log_poly(double z) const {
    std::vector<double> terms(size());
    const double lz = std::log(z);
    for (std::size_t i = 0; i < size(); ++i)
        terms[i] = log_coeffs[i] + double(i) * lz;
    return detail::log_sum_exp(terms.data(), terms.size());
}

void WeightEnumerator::validate() const {
    if (log_coeffs.size() != size())
        throw std::logic_error("WeightEnumerator: coefficient count mismatch");
    if (exact_mode) {
        if (coeffs.size() != size())
            throw std::logic_error("WeightEnumerator: exact coefficient count mismatch");
        if (coeffs[0] < 1) throw std::logic_error("WeightEnumerator: W_0 must be >= 1");
        for (const auto& c : coeffs)
            if (c < 0) throw std::logic_error("WeightEnumerator: negative coefficient");
    }
    // total mass must be q^k within 1e-9 relative (exact in integer mode)
    const double log_mass = detail::log_sum_exp(log_coeffs.data(), log_coeffs.size());
    const double expected = dimension * std::log(double(q));
    if (std::fabs(log_mass - expected) > 1e-9 * std::max(1.0, std::fabs(expected)))
        throw std::logic_error("WeightEnumerator: mass differs from q^k");
}

WeightEnumerator make_exact_enumerator(int q, std::vector<mpz_class> coeffs) {
    WeightEnumerator w;
    w.q = q;
    w.length = coeffs.empty() ? 0 : coeffs.size() - 1;
    w.exact_mode = true;
    w.coeffs = std::move(coeffs);
    w.log_coeffs.resize(w.size());
    mpz_class mass = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        mass += w.coeffs[i];
        if (w.coeffs[i] == 0) {
            w.log_coeffs[i] = -std::numeric_limits<double>::infinity();
        } else {
            signed long exp2 = 0;
            double d = mpz_get_d_2exp(&exp2, w.coeffs[i].get_mpz_t());
            w.log_coeffs[i] = std::log(d) + double(exp2) * std::log(2.0);
        }
    }
    signed long exp2 = 0;
    double d = mpz_get_d_2exp(&exp2, mass.get_mpz_t());
    w.dimension = (std::log(d) + double(exp2) * std::log(2.0)) / std::log(double(q));
    return w;
}

WeightEnumerator parity_weight_enumerator(int q, int n) {
    if (q < 2 || n < 1) throw std::invalid_argument("parity_weight_enumerator: bad parameters");
    // W_i = C(n,i) ((q-1)^i + (q-1)(-1)^i) / q  from the MacWilliams transform
    // of the dual repetition code.
    std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
    mpz_class qm1 = q - 1;
    for (int i = 0; i <= n; ++i) {
        mpz_class bin;
        mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(n),
                     static_cast<unsigned long>(i));
        mpz_class pow_qm1;
        mpz_pow_ui(pow_qm1.get_mpz_t(), qm1.get_mpz_t(), static_cast<unsigned long>(i));
        mpz_class term = pow_qm1 + ((i % 2 == 0) ? qm1 : -qm1);
        mpz_class num = bin * term;
        mpz_class w = num / q;
        if (w * q != num) throw std::logic_error("parity_weight_enumerator: non-integer coefficient");
        c[static_cast<std::size_t>(i)] = w;
    }
    return make_exact_enumerator(q, std::move(c));
}

WeightEnumerator shortened_parity_enumerator(int q, int n, int s) {
    if (q < 2 || n < 1) throw std::invalid_argument("shortened_parity_enumerator: bad parameters");
    if (s < 1 || s > n) throw std::out_of_range("shortened_parity_enumerator: s outside [1,n]");
    // (1/q) (1+(q-1)z)^{n-s} ((1+(q-1)z)^s + (q-1)(1-z)^s)
    std::vector<mpz_class> head(static_cast<std::size_t>(s) + 1);
    mpz_class qm1 = q - 1;
    for (int i = 0; i <= s; ++i) {
        mpz_class bin;
        mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(s),
                     static_cast<unsigned long>(i));
        mpz_class pow_qm1;
        mpz_pow_ui(pow_qm1.get_mpz_t(), qm1.get_mpz_t(), static_cast<unsigned long>(i));
        head[static_cast<std::size_t>(i)] = bin * (pow_qm1 + ((i % 2 == 0) ? qm1 : -qm1));
    }
    std::vector<mpz_class> out(static_cast<std::size_t>(n) + 1, mpz_class(0));
    for (int j = 0; j <= n - s; ++j) {
        mpz_class bin;
        mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(n - s),
                     static_cast<unsigned long>(j));
        mpz_class pow_qm1;
        mpz_pow_ui(pow_qm1.get_mpz_t(), qm1.get_mpz_t(), static_cast<unsigned long>(j));
        mpz_class factor = bin * pow_qm1;
        for (int i = 0; i <= s; ++i)
            out[static_cast<std::size_t>(i + j)] += factor * head[static_cast<std::size_t>(i)];
    }
    for (auto& v : out) {
        mpz_class w = v / q;
        if (w * q != v) throw std::logic_error("shortened_parity_enumerator: non-integer coefficient");
        v = w;
    }
    return make_exact_enumerator(q, std::move(out));
}

}  // namespace lrc
