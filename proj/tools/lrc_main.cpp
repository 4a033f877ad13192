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

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lrc/curve_io.hpp"
#include "lrc/disjoint_bounds.hpp"
#include "lrc/large_deviations.hpp"
#include "lrc/nondisjoint_bounds.hpp"
#include "lrc/special_n3.hpp"
#include "lrc/verification.hpp"
#include "lrc/wzl_bounds.hpp"

namespace {

struct RunConfig {
    int q = 2;
    int n = 4;
    std::vector<std::string> bounds;
    std::string delta_spec = "0.01:0.49:0.01";
    double mu = 2.0;
    double omega = 0.1;
    std::string variant = "per-group";
    std::string format = "table";
    std::string output;
    lrc::OptimizerOptions opt;
};

std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> grid;
    if (spec.find(':') != std::string::npos) {
        double start = 0, stop = 0, step = 0;
        if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 || step <= 0)
            return {};
        // index-based generation avoids accumulated rounding past the stop
        const long count = std::lround((stop - start) / step);
        for (long i = 0; i <= count; ++i) {
            double d = start + double(i) * step;
            if (d > stop) d = stop;
            grid.push_back(d);
        }
        return grid;
    }
    std::istringstream is(spec);
    std::string cell;
    while (std::getline(is, cell, ',')) {
        if (cell.empty()) continue;
        char* end = nullptr;
        const double v = std::strtod(cell.c_str(), &end);
        if (end == cell.c_str() || *end != '\0') return {};
        grid.push_back(v);
    }
    return grid;
}

using Evaluator = std::function<double(const RunConfig&, double)>;

const std::map<std::string, Evaluator>& bound_registry() {
    using lrc::BoundQuery;
    static const std::map<std::string, Evaluator> registry = {
        {"r0", [](const RunConfig& c, double d) { return lrc::r0_lower(c.q, c.n, d); }},
        {"sp", [](const RunConfig& c, double d) { return lrc::r_sp(c.q, c.n, d); }},
        {"cm",
         [](const RunConfig& c, double d) {
             BoundQuery bq{c.q, c.n, d, c.opt};
             return lrc::r_cm(bq, lrc::default_rate_bound(c.q));
         }},
        {"r1",
         [](const RunConfig& c, double d) {
             BoundQuery bq{c.q, c.n, d, c.opt};
             return lrc::r1(bq, lrc::default_rate_bound(c.q));
         }},
        {"r2",
         [](const RunConfig& c, double d) {
             BoundQuery bq{c.q, c.n, d, c.opt};
             return lrc::r2(bq, lrc::default_cw_bound(c.q));
         }},
        {"r12",
         [](const RunConfig& c, double d) {
             BoundQuery bq{c.q, c.n, d, c.opt};
             return lrc::r12(bq);
         }},
        {"sp-hat",
         [](const RunConfig& c, double d) { return lrc::r_sp_hat(c.q, c.n, d, c.opt); }},
        {"r1-hat",
         [](const RunConfig& c, double d) {
             BoundQuery bq{c.q, c.n, d, c.opt};
             return lrc::r1_hat(bq, lrc::default_rate_bound(c.q));
         }},
        {"r2-hat",
         [](const RunConfig& c, double d) {
             BoundQuery bq{c.q, c.n, d, c.opt};
             return lrc::r2_hat(bq, lrc::default_cw_bound(c.q));
         }},
        {"r3-hat",
         [](const RunConfig& c, double d) {
             BoundQuery bq{c.q, c.n, d, c.opt};
             return lrc::r3_hat(bq, lrc::default_cw_bound(c.q));
         }},
        {"n2", [](const RunConfig& c, double d) { return lrc::n2_bound(c.q, d); }},
        {"n3", [](const RunConfig&, double d) { return lrc::n3_bound(d); }},
        {"lambda",
         [](const RunConfig& c, double w) { return lrc::lambda_growth(c.q, c.n, w).value; }},
        {"lambda-star",
         [](const RunConfig& c, double w) {
             const double qm = double(c.q - 1) / c.q;
             const int wmax = (c.q == 2 && c.n % 2 == 1) ? c.n - 1 : c.n;
             if (w <= qm || w >= double(wmax) / c.n) return 0.0;
             return lrc::lambda_star(c.q, c.n, w);
         }},
        {"wzl",
         [](const RunConfig& c, double w) {
             const auto variant = (c.variant == "per-coordinate")
                                      ? lrc::AverageVariant::per_coordinate
                                      : lrc::AverageVariant::per_group;
             return lrc::wzl_r0_bar(c.q, c.n, c.mu, w, variant);
         }},
    };
    return registry;
}

int config_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

std::vector<lrc::CurveTable> compute_curves(const RunConfig& cfg,
                                            const std::vector<double>& grid) {
    std::vector<lrc::CurveTable> curves;
    for (const auto& name : cfg.bounds) {
        const auto& eval = bound_registry().at(name);
        lrc::CurveTable t;
        t.name = name;
        t.grid = grid;
        t.values.resize(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) t.values[i] = eval(cfg, grid[i]);
        curves.push_back(std::move(t));
    }
    return curves;
}

void write_out(const RunConfig& cfg, const std::string& payload) {
    if (cfg.output.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream os(cfg.output, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output path: " + cfg.output);
    os << payload;
}

std::string render_table(const RunConfig& cfg, const std::vector<lrc::CurveTable>& curves) {
    std::ostringstream os;
    os << "delta";
    for (const auto& c : curves) os << '\t' << c.name;
    os << '\n';
    for (std::size_t i = 0; i < curves.front().grid.size(); ++i) {
        os << lrc::format_fixed4(curves.front().grid[i]);
        for (const auto& c : curves) os << '\t' << lrc::format_fixed4(c.values[i]);
        os << '\n';
    }
    (void)cfg;
    return os.str();
}

int run_table_or_curve(RunConfig& cfg, bool curve_mode) {
    const auto grid = parse_grid(cfg.delta_spec);
    if (grid.empty()) return config_error("empty or invalid delta grid");
    for (double d : grid)
        if (d < 0.0 || d > 1.0) return config_error("delta grid must lie in [0,1]");
    if (cfg.bounds.empty()) return config_error("no bounds requested");
    for (const auto& b : cfg.bounds)
        if (!bound_registry().count(b)) return config_error("unknown bound name: " + b);

    const auto curves = compute_curves(cfg, grid);
    std::string payload;
    if (curve_mode && cfg.format == "json")
        payload = lrc::curves_to_json(cfg.q, cfg.n, curves);
    else if (curve_mode || cfg.format == "csv")
        payload = lrc::curves_to_csv(curves);
    else if (cfg.format == "json")
        payload = lrc::curves_to_json(cfg.q, cfg.n, curves);
    else
        payload = render_table(cfg, curves);
    write_out(cfg, payload);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"asymptotic rate bounds for locally repairable codes"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool wants_bounds) {
        sub->add_option("--q", cfg.q, "field size")->check(CLI::Range(2, 64));
        sub->add_option("--n", cfg.n, "repair-group size (locality + 1)")->check(CLI::Range(1, 64));
        sub->add_option("--delta", cfg.delta_spec,
                        "grid: comma list or start:stop:step");
        if (wants_bounds)
            sub->add_option("--bounds", cfg.bounds, "bound names")->delimiter(',');
        sub->add_option("--mu", cfg.mu, "average repair-group size (wzl)");
        sub->add_option("--omega", cfg.omega, "relative weight (where applicable)");
        sub->add_option("--variant", cfg.variant, "wzl averaging: per-group | per-coordinate")
            ->check(CLI::IsMember({"per-group", "per-coordinate"}));
        sub->add_option("--format", cfg.format, "table | csv | json")
            ->check(CLI::IsMember({"table", "csv", "json"}));
        sub->add_option("--output", cfg.output, "output path (default stdout)");
        sub->add_option("--grid-tau", cfg.opt.tau_grid, "outer tau grid points");
        sub->add_option("--grid-theta", cfg.opt.theta_grid, "inner theta grid points");
        sub->add_option("--grid-omega", cfg.opt.omega_grid, "omega sweep grid points");
        sub->add_option("--grid-nu", cfg.opt.nu_grid, "nu sweep grid points");
        sub->add_option("--grid-cm-tau", cfg.opt.cm_tau_grid, "tau grid of the CM bound");
        sub->add_option("--value-tol", cfg.opt.value_tol, "refinement value tolerance");
    };

    auto* table = app.add_subcommand("table", "print bounds on a delta grid");
    add_common(table, true);
    auto* curve = app.add_subcommand("curve", "export bound curves as CSV/JSON");
    add_common(curve, true);
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    std::string only;
    verify->add_option("--only", only, "restrict to one group: tables | oracle | properties | n3")
        ->check(CLI::IsMember({"tables", "oracle", "properties", "n3"}));
    std::string verify_out;
    verify->add_option("--output", verify_out, "write the JSON summary to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (table->parsed()) return run_table_or_curve(cfg, false);
        if (curve->parsed()) return run_table_or_curve(cfg, true);

        const auto results = lrc::run_verification(only);
        nlohmann::ordered_json j;
        bool all_pass = true;
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& r : results) {
            std::printf("[%s] %-18s %6.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                        r.seconds, r.detail.c_str());
            nlohmann::ordered_json e;
            e["id"] = r.id;
            e["group"] = r.group;
            e["pass"] = r.pass;
            e["seconds"] = r.seconds;
            e["detail"] = r.detail;
            j["checks"].push_back(e);
            all_pass = all_pass && r.pass;
        }
        j["pass"] = all_pass;
        if (!verify_out.empty()) {
            std::ofstream os(verify_out, std::ios::binary);
            os << j.dump(2) << "\n";
        }
        return all_pass ? 0 : 1;
    } catch (const std::exception& e) {
        return config_error(e.what());
    }
}
