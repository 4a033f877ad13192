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

#include "lrc/curve_io.hpp"

#include <cfenv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lrc {

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string format_fixed4(double v) {
    // scale, round to nearest even, then print the integer part
    const double scaled = v * 1e4;
    double r = std::nearbyint(scaled);
    if (std::fabs(scaled - std::trunc(scaled)) == 0.5) {
        // exact .5 in the scaled value: force the even neighbor
        const double down = std::floor(scaled), up = std::ceil(scaled);
        r = (std::fmod(down, 2.0) == 0.0) ? down : up;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4f", r / 1e4);
    return buf;
}

std::string curves_to_csv(const std::vector<CurveTable>& curves) {
    if (curves.empty()) throw std::invalid_argument("curves_to_csv: no curves");
    const auto& grid = curves.front().grid;
    for (const auto& c : curves)
        if (c.grid != grid) throw std::invalid_argument("curves_to_csv: grids differ");
    std::ostringstream os;
    os << "delta";
    for (const auto& c : curves) os << ',' << c.name;
    os << '\n';
    for (std::size_t i = 0; i < grid.size(); ++i) {
        os << g17(grid[i]);
        for (const auto& c : curves) os << ',' << g17(c.values[i]);
        os << '\n';
    }
    return os.str();
}

std::vector<CurveTable> curves_from_csv(const std::string& csv) {
    std::istringstream is(csv);
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("curves_from_csv: empty input");
    std::vector<CurveTable> curves;
    {
        std::istringstream hs(line);
        std::string cell;
        bool first = true;
        while (std::getline(hs, cell, ',')) {
            if (first) {
                if (cell != "delta") throw std::invalid_argument("curves_from_csv: bad header");
                first = false;
            } else {
                CurveTable t;
                t.name = cell;
                curves.push_back(std::move(t));
            }
        }
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::size_t col = 0;
        while (std::getline(ls, cell, ',')) {
            const double v = std::strtod(cell.c_str(), nullptr);
            if (col == 0) {
                for (auto& c : curves) c.grid.push_back(v);
            } else {
                if (col - 1 >= curves.size())
                    throw std::invalid_argument("curves_from_csv: ragged row");
                curves[col - 1].values.push_back(v);
            }
            ++col;
        }
    }
    return curves;
}

std::string curves_to_json(int q, int n, const std::vector<CurveTable>& curves) {
    nlohmann::ordered_json j;
    j["meta"]["q"] = q;
    j["meta"]["n"] = n;
    std::vector<std::string> names;
    for (const auto& c : curves) names.push_back(c.name);
    j["meta"]["bounds"] = names;
    j["meta"]["grid"] = curves.empty() ? std::vector<double>{} : curves.front().grid;
    j["rows"] = nlohmann::ordered_json::array();
    if (!curves.empty()) {
        for (std::size_t i = 0; i < curves.front().grid.size(); ++i) {
            nlohmann::ordered_json row;
            row["delta"] = curves.front().grid[i];
            for (const auto& c : curves) row["values"][c.name] = c.values[i];
            j["rows"].push_back(row);
        }
    }
    return j.dump(2) + "\n";
}

}  // namespace lrc
