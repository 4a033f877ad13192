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

#ifndef LRC_CURVE_IO_HPP
#define LRC_CURVE_IO_HPP

#include <string>
#include <vector>

#include "lrc/lp_bounds.hpp"

namespace lrc {

/// CSV with header "delta,<name>,..." and one row per grid point; values at
/// full precision (%.17g), bytes deterministic across runs.
std::string curves_to_csv(const std::vector<CurveTable>& curves);

/// Parses the exact format curves_to_csv writes.
std::vector<CurveTable> curves_from_csv(const std::string& csv);

/// JSON export: {"meta":{"q","n","bounds","grid"},"rows":[{"delta","values":{...}}]}.
std::string curves_to_json(int q, int n, const std::vector<CurveTable>& curves);

/// Fixed 4-decimal formatting, ties resolved to even (table mode).
std::string format_fixed4(double v);

}  // namespace lrc

#endif
