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

#include "lrc/verification.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "lrc/disjoint_bounds.hpp"
#include "lrc/large_deviations.hpp"
#include "lrc/nondisjoint_bounds.hpp"
#include "lrc/oracle.hpp"
#include "lrc/special_n3.hpp"
#include "lrc/wzl_bounds.hpp"

namespace lrc {

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
    std::vector<CheckResult>& out;
    std::string filter;

    template <typename F>
    void run(const std::string& id, const std::string& group, F&& body) {
        if (!filter.empty() && filter != group) return;
        CheckResult r;
        r.id = id;
        r.group = group;
        const auto t0 = Clock::now();
        std::ostringstream detail;
        try {
            r.pass = body(detail);
        } catch (const std::exception& e) {
            r.pass = false;
            detail << "exception: " << e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        r.detail = detail.str();
        if (r.pass && budget_seconds > 0.0 && r.seconds > budget_seconds) {
            r.pass = false;
            r.detail += " [over the " + std::to_string(budget_seconds) + "s budget]";
        }
        out.push_back(std::move(r));
    }

    double budget_seconds = 0.0;
    Runner& budget(double s) {
        budget_seconds = s;
        return *this;
    }
};

std::string cell(double got, double want, double tol) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.4f(want %.4f%s)", got, want,
                  std::fabs(got - want) <= tol ? "" : " MISS");
    return buf;
}

// criterion 1: sphere-packing column, pure lambda pipeline
bool check_sp_column(std::ostringstream& detail) {
    const double want[4] = {0.6133, 0.5681, 0.5004, 0.3346};
    const double deltas[4] = {0.07, 0.10, 0.15, 0.30};
    bool ok = true;
    for (int i = 0; i < 4; ++i) {
        const double v = r_sp(2, 4, deltas[i]);
        ok = ok && std::fabs(v - want[i]) <= 5e-4;
        detail << cell(v, want[i], 5e-4) << ' ';
    }
    return ok;
}

// criterion 2: the four plug-in columns of the first table
bool check_plugin_columns(std::ostringstream& detail) {
    const double deltas[4] = {0.07, 0.10, 0.15, 0.30};
    const double want_cm[4] = {0.6317, 0.5809, 0.4964, 0.2427};
    const double want_r1[4] = {0.6131, 0.5643, 0.4830, 0.2391};
    const double want_r2[4] = {0.6079, 0.5576, 0.4781, 0.2470};
    const double want_r12[4] = {0.6079, 0.5576, 0.4781, 0.2391};
    const RateBound plug = default_rate_bound(2);
    const CwBoundFn cw = default_cw_bound(2);
    bool ok = true;
    for (int i = 0; i < 4; ++i) {
        BoundQuery bq{2, 4, deltas[i], {}};
        const double vcm = r_cm(bq, plug);
        const double v1 = r1(bq, plug);
        const double v2 = r2(bq, cw);
        const double v12 = r12(bq, cw);
        detail << "d=" << deltas[i] << ": cm " << cell(vcm, want_cm[i], 2e-3) << " r1 "
               << cell(v1, want_r1[i], 2e-3) << " r2 " << cell(v2, want_r2[i], 2e-3) << " r12 "
               << cell(v12, want_r12[i], 2e-3) << "; ";
        ok = ok && std::fabs(vcm - want_cm[i]) <= 2e-3 && std::fabs(v1 - want_r1[i]) <= 2e-3 &&
             std::fabs(v2 - want_r2[i]) <= 2e-3 && std::fabs(v12 - want_r12[i]) <= 2e-3;
    }
    return ok;
}

// criterion 3: the non-disjoint table
bool check_hat_table(std::ostringstream& detail) {
    bool ok = true;
    const RateBound plug = default_rate_bound(2);
    const CwBoundFn cw = default_cw_bound(2);

    // delta = 0.07 row matches the all-disjoint values
    {
        BoundQuery bq{2, 4, 0.07, {}};
        const double sp = r_sp_hat(2, 4, 0.07);
        const double v1 = r1_hat(bq, plug);
        const double v2 = r2_hat(bq, cw);
        ok = ok && std::fabs(sp - 0.6133) <= 2e-3 && std::fabs(v1 - 0.6131) <= 2e-3 &&
             std::fabs(v2 - 0.6079) <= 2e-3;
        detail << "row 0.07: sp^ " << cell(sp, 0.6133, 2e-3) << " r1^ " << cell(v1, 0.6131, 2e-3)
               << " r2^ " << cell(v2, 0.6079, 2e-3) << "; ";
    }
    const double deltas[3] = {0.10, 0.15, 0.30};
    const double want_r1h[3] = {0.5643, 0.4830, 0.2391};
    for (int i = 0; i < 3; ++i) {
        BoundQuery bq{2, 4, deltas[i], {}};
        const double sp = r_sp_hat(2, 4, deltas[i]);
        const double v2 = r2_hat(bq, cw);
        const double v1 = r1_hat(bq, plug);
        ok = ok && std::fabs(sp - 0.6) <= 2e-3 && sp >= 0.6 - 1e-9;
        ok = ok && std::fabs(v2 - 0.6) <= 2e-3 && v2 >= 0.6 - 1e-9;
        ok = ok && std::fabs(v1 - want_r1h[i]) <= 2e-3;
        detail << "d=" << deltas[i] << ": sp^ " << cell(sp, 0.6, 2e-3) << " r2^ "
               << cell(v2, 0.6, 2e-3) << " r1^ " << cell(v1, want_r1h[i], 2e-3) << "; ";
    }
    return ok;
}

// criterion 4: exact ball counts
bool check_ball_counts(std::ostringstream& detail) {
    const auto c5 = ball_count(parity_weight_enumerator(2, 5), 2);
    const auto c2 = ball_count(shortened_parity_enumerator(2, 5, 2), 2);
    const auto c3 = ball_count(shortened_parity_enumerator(2, 5, 3), 2);
    detail << "|C5|=" << c5.get_str() << " |C2|=" << c2.get_str() << " |C3|=" << c3.get_str();
    return c5 == 11 && c2 == 8 && c3 == 7;
}

// criterion 5: Cramer convergence at (2,4,0.25)
bool check_cramer(std::ostringstream& detail) {
    std::vector<int> ells;
    for (int l = 1; l <= 4096; l *= 2) ells.push_back(l);
    const ConvergenceReport rep = cramer_convergence(2, 4, 0.25, ells);
    detail << "max_violation=" << rep.max_violation << " final_gap=" << rep.final_gap;
    return rep.max_violation <= 1e-12 && rep.final_gap < 0.01;
}

// criterion 6: closed form vs direct max-min oracle
bool check_wzl(std::ostringstream& detail) {
    bool ok = true;
    for (auto [q, n] : {std::pair{2, 4}, std::pair{3, 5}}) {
        for (double mu : {1.5, 2.5, 3.5}) {
            if (mu > double(n)) continue;
            for (double omega : {0.05, 0.15, 0.30}) {
                const double a = wzl_r0_bar(q, n, mu, omega);
                const double b = wzl_direct_oracle(q, n, mu, omega);
                if (std::fabs(a - b) > 1e-3) {
                    ok = false;
                    detail << "(q=" << q << ",n=" << n << ",mu=" << mu << ",w=" << omega
                           << "): closed " << a << " vs oracle " << b << " MISS; ";
                }
            }
        }
        for (int mu : {2, 3}) {
            for (double omega : {0.05, 0.15, 0.30}) {
                const double a = wzl_r0_bar(q, n, double(mu), omega);
                const double b = r0_lower(q, mu, omega);
                if (std::fabs(a - b) > 1e-9) {
                    ok = false;
                    detail << "integer-mu (q=" << q << ",mu=" << mu << ",w=" << omega
                           << "): " << a << " vs " << b << " MISS; ";
                }
            }
        }
    }
    if (ok) detail << "closed form vs oracle within 1e-3; integer-mu identity within 1e-9";
    return ok;
}

// criterion 7: property suites
bool check_properties(std::ostringstream& detail) {
    bool ok = true;
    auto fail = [&](const std::string& what) {
        ok = false;
        detail << what << "; ";
    };

    // lambda endpoints / monotone / concave on grids
    for (auto [q, n] : {std::pair{2, 4}, std::pair{3, 5}, std::pair{4, 3}}) {
        const double qm = double(q - 1) / q;
        if (std::fabs(lambda_growth(q, n, 0.0).value) > 1e-15) fail("lambda(0) != 0");
        if (std::fabs(lambda_growth(q, n, qm).value - double(n - 1) / n) > 1e-12)
            fail("lambda((q-1)/q) != (n-1)/n");
        double prev = -1.0;
        for (int i = 0; i <= 100; ++i) {
            const double w = qm * i / 100.0;
            const double v = lambda_growth(q, n, w).value;
            if (v < prev - 1e-12) fail("lambda not increasing");
            prev = v;
        }
        std::mt19937 rng(1234 + q + n);
        std::uniform_real_distribution<double> uni(1e-3, 2.0 * qm);
        for (int t = 0; t < 100; ++t) {
            double a = uni(rng), b = uni(rng);
            if (a > b) std::swap(a, b);
            const double mid = 0.5 * (a + b);
            const double lhs = lambda_growth(q, n, mid).value;
            const double rhs = 0.5 * (lambda_growth(q, n, a).value + lambda_growth(q, n, b).value);
            if (lhs + 1e-9 < rhs) fail("lambda not concave");
        }
        // zeta round trips
        if (n >= 2) {
            for (int i = 1; i < 100; ++i) {
                const double w = qm * i / 100.0;
                const double z = zeta(q, n, w);
                if (std::fabs(zeta_inv(q, n, z) - w) > 1e-9) fail("zeta round trip");
            }
        }
    }

    // gamma monotone + log-concave on random 5-point distributions
    std::mt19937 rng(99);
    for (int t = 0; t < 100; ++t) {
        std::uniform_real_distribution<double> ux(-3.0, 5.0);
        std::uniform_real_distribution<double> up(0.05, 1.0);
        std::vector<double> xs, ps;
        double tot = 0.0;
        for (int i = 0; i < 5; ++i) {
            double x;
            bool fresh = true;
            do {
                x = ux(rng);
                fresh = true;
                for (double prev_x : xs)
                    if (std::fabs(prev_x - x) < 1e-6) fresh = false;
            } while (!fresh);
            xs.push_back(x);
            const double p = up(rng);
            ps.push_back(p);
            tot += p;
        }
        for (auto& p : ps) p /= tot;
        // re-normalize exactly
        double s = 0.0;
        for (double p : ps) s += p;
        ps.back() += 1.0 - s;
        const FiniteDistribution dist(xs, ps);
        const double xmin = dist.min_support(), mean = dist.mean();
        double prev = -1.0;
        for (int i = 0; i <= 40; ++i) {
            const double u = xmin - 0.5 + (mean - xmin + 1.0) * i / 40.0;
            const double g = gamma_rate(dist, u);
            if (g < prev - 1e-12) fail("gamma not nondecreasing");
            prev = g;
        }
        for (int i = 1; i < 10; ++i) {
            const double u1 = xmin + (mean - xmin) * i / 10.0;
            const double u2 = xmin + (mean - xmin) * (i + 1) / 10.0;
            if (gamma_rate(dist, u2) <= gamma_rate(dist, u1) + 1e-12) fail("gamma not strict");
        }
        for (int i = 0; i < 8; ++i) {
            const double a = xmin + (mean - xmin + 0.5) * i / 8.0;
            const double b = a + 0.3;
            const double lg_mid = std::log(gamma_rate(dist, 0.5 * (a + b)));
            const double lg_avg =
                0.5 * (std::log(gamma_rate(dist, a)) + std::log(gamma_rate(dist, b)));
            if (std::isfinite(lg_avg) && lg_mid + 1e-9 < lg_avg) fail("log gamma not concave");
        }
    }

    // n P_n = Q_n' by finite differences
    for (auto [q, n] : {std::pair{2, 4}, std::pair{3, 5}, std::pair{4, 6}}) {
        for (int i = 1; i < 10; ++i) {
            const double z = i / 10.0;
            const double h = 1e-6;
            const double fd = (poly_Q(q, n, z + h) - poly_Q(q, n, z - h)) / (2.0 * h);
            const double an = n * poly_P(q, n, z);
            if (std::fabs(fd - an) > 1e-4 * std::max(1.0, std::fabs(an)))
                fail("n P != Q' at a grid point");
        }
    }

    // convex envelope: convexity and dominance on a wiggly curve
    {
        CurveTable c;
        c.name = "probe";
        for (int i = 0; i <= 60; ++i) {
            const double x = i / 60.0;
            c.grid.push_back(x);
            c.values.push_back(std::cos(6.28 * x) * 0.2 + 1.0 - 0.8 * x);
        }
        const CurveTable e = lower_convex_envelope(c);
        for (std::size_t i = 0; i < c.grid.size(); ++i)
            if (e.values[i] > c.values[i] + 1e-12) fail("envelope above input");
        for (std::size_t i = 1; i + 1 < c.grid.size(); ++i) {
            const double second = e.values[i - 1] - 2.0 * e.values[i] + e.values[i + 1];
            if (second < -1e-12) fail("envelope not convex");
        }
    }

    // bound ordering on a delta grid
    {
        const RateBound plug = default_rate_bound(2);
        const CwBoundFn cw = default_cw_bound(2);
        for (double d = 0.05; d <= 0.45; d += 0.08) {
            BoundQuery bq{2, 4, d, {}};
            bq.opt.omega_grid = 1001;
            bq.opt.tau_grid = 51;
            bq.opt.theta_grid = 51;
            const double v1 = r1(bq, plug);
            const double v2 = r2(bq, cw);
            const double v12 = r12(bq, cw);
            const double lower = r0_lower(2, 4, d);
            if (v12 > v1 + 1e-9 || v12 > v2 + 1e-9) fail("r12 above min(r1, r2)");
            for (double upper : {r_sp(2, 4, d), v1, v2, v12})
                if (upper < lower - 1e-9) fail("upper bound below lower bound");
        }
    }
    if (ok) detail << "all property suites passed";
    return ok;
}

// criterion 8: the n = 3 results
bool check_n3(std::ostringstream& detail) {
    bool ok = true;
    if (std::fabs(n3_bound(0.0) - 2.0 / 3.0) > 1e-15) {
        ok = false;
        detail << "n3(0) != 2/3; ";
    }
    for (double d : {0.5, 0.6, 1.0}) {
        if (n3_bound(d) != 0.0) {
            ok = false;
            detail << "n3(" << d << ") != 0; ";
        }
    }
    std::vector<double> tgrid, sgrid;
    for (int i = 0; i <= 20; ++i) tgrid.push_back(i / 20.0);
    for (int i = 0; i <= 20; ++i) sgrid.push_back(i / 10.0);
    for (int i = 0; i < 9; ++i) {
        const double d = 0.02 + (0.48 - 0.02) * i / 8.0;
        const SweepReport tr = n3_tau_sweep(d, tgrid);
        const SweepReport sr = n3_sigma_sweep(d, sgrid);
        if (tr.argmax != 0.0) {
            ok = false;
            detail << "tau argmax at " << tr.argmax << " for d=" << d << "; ";
        }
        if (sr.argmax != 0.0) {
            ok = false;
            detail << "sigma argmax at " << sr.argmax << " for d=" << d << "; ";
        }
    }
    if (ok) detail << "endpoints exact; tau/sigma argmax at 0 on the 9-point grid";
    return ok;
}

}  // namespace

std::vector<CheckResult> run_verification(const std::string& filter) {
    std::vector<CheckResult> out;
    Runner r{out, filter};
    r.budget(1.0).run("1.tables.sp", "tables", check_sp_column);
    r.budget(60.0).run("2.tables.plugins", "tables", check_plugin_columns);
    r.budget(0.0).run("3.tables.hat", "tables", check_hat_table);
    r.budget(0.01).run("4.oracle.balls", "oracle", check_ball_counts);
    r.budget(30.0).run("5.oracle.cramer", "oracle", check_cramer);
    r.budget(0.0).run("6.oracle.wzl", "oracle", check_wzl);
    r.budget(0.0).run("7.properties", "properties", check_properties);
    r.budget(0.0).run("8.n3", "n3", check_n3);
    return out;
}

}  // namespace lrc
