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

#ifndef LRC_CORE_MATH_HPP
#define LRC_CORE_MATH_HPP

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace lrc {

/// q-ary entropy H_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x),
/// with the 0 log 0 = 0 convention handled by branch at the endpoints.
/// Throws std::domain_error for x outside [0,1].
double entropy_q(int q, double x);

/// Weight distribution of a linear code: coefficient i counts codewords of
/// Hamming weight i. Exact GMP integers for short codes; log-domain
/// (natural-log coefficients) once exact convolution would be impractical.
struct WeightEnumerator {
    int q = 2;
    std::size_t length = 0;       // N; coefficient vector has N+1 entries
    double dimension = 0.0;       // k = log_q(total mass)
    bool exact_mode = true;
    std::vector<mpz_class> coeffs;    // exact mode only
    std::vector<double> log_coeffs;   // natural log of each coefficient, always set

    std::size_t size() const { return length + 1; }
    /// Polynomial value W(z) computed in log domain; z in (0,1].
    double log_poly(double z) const;
    /// Checks the type invariants (W_0 >= 1, nonnegativity, mass q^k).
    void validate() const;
};

/// Builds an exact enumerator from integer coefficients.
WeightEnumerator make_exact_enumerator(int q, std::vector<mpz_class> coeffs);

/// Weight enumerator of the [n, n-1, 2] parity code over a size-q field.
WeightEnumerator parity_weight_enumerator(int q, int n);

/// Weight enumerator of the [n, n-1] code with parity-check row (1..1 0..0),
/// s ones. s = n reduces to the parity code. Throws std::out_of_range for
/// s outside [1, n].
WeightEnumerator shortened_parity_enumerator(int q, int n, int s);

/// The polynomial pair behind all root-finding:
///   Q_n(z) = (1+(q-1)z)^n + (q-1)(1-z)^n,
///   P_n(z) = (q-1)((1+(q-1)z)^{n-1} - (1-z)^{n-1}),  n P_n = Q_n'.
double poly_Q(int q, int n, double z);
double poly_P(int q, int n, double z);
/// Derivative of P_n, used by the guarded-Newton root finder.
double poly_P_prime(int q, int n, double z);

struct PQEval {
    int q = 2;
    int n = 1;
    double z = 0.0;
    double p_value = 0.0;
    double q_value = 0.0;
};

PQEval pq_eval(int q, int n, double z);

}  // namespace lrc

#endif
