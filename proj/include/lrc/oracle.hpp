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

#ifndef LRC_ORACLE_HPP
#define LRC_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "lrc/core_math.hpp"
#include "lrc/large_deviations.hpp"

namespace lrc {

/// Exact number of codewords of weight <= radius. Requires an exact-mode
/// enumerator (std::logic_error otherwise); radius must not exceed the
/// length (std::out_of_range).
mpz_class ball_count(const WeightEnumerator& w, std::size_t radius);

/// Natural log of the ball count; works in both modes.
double log_ball_count(const WeightEnumerator& w, std::size_t radius);

/// ell-fold convolution power (the weight enumerator of the ell-fold
/// Cartesian product). Exact while the result stays short (length <= 64);
/// automatically log-domain beyond.
WeightEnumerator power_enumerator(const WeightEnumerator& w, int ell);

struct ConvergenceReport {
    int q = 2;
    int n = 1;
    double omega = 0.0;
    std::vector<int> ells;
    std::vector<double> exponents;   // (1/(ell n)) log_q |ball|
    double asymptote = 0.0;          // lambda_q(omega, n)
    double max_violation = 0.0;      // max(exponent - asymptote, 0)
    double final_gap = 0.0;          // asymptote - last exponent
};

/// Exact finite-length exponents of |C^(ell)(omega)| for the parity-code
/// product, against the lambda asymptote. Radii are floor(omega ell n)
/// (nearby-integer snapped to absorb binary rounding of omega ell n).
/// ell values are capped at 4096.
ConvergenceReport cramer_convergence(int q, int n, double omega,
                                     const std::vector<int>& ells);

struct ChernoffCheck {
    double exact_log_prob_per_sample = 0.0;  // nats
    double bound_log_gamma = 0.0;            // nats
};

/// Exact lower-tail probability of an ell-fold i.i.d. sum against the
/// Chernoff exponent. The distribution is given exactly: integer support
/// points with positive integer weights (probabilities weight/total).
ChernoffCheck chernoff_check(const std::vector<long long>& support,
                             const std::vector<unsigned long long>& weights,
                             double u, int ell);

/// Convenience overload: converts a FiniteDistribution whose probabilities
/// are rational with denominator <= 1e6 (throws std::invalid_argument
/// otherwise) and requires integer support values.
ChernoffCheck chernoff_check(const FiniteDistribution& dist, double u, int ell);

}  // namespace lrc

#endif
