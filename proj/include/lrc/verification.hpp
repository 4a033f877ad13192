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

#ifndef LRC_VERIFICATION_HPP
#define LRC_VERIFICATION_HPP

#include <string>
#include <vector>

namespace lrc {

struct CheckResult {
    std::string id;       // e.g. "tables.sp"
    std::string group;    // filter key: tables, oracle, properties, n3
    std::string detail;
    bool pass = false;
    double seconds = 0.0;
};

/// Runs the verification checks; an empty filter runs everything, otherwise
/// only checks whose group matches.
std::vector<CheckResult> run_verification(const std::string& filter = "");

}  // namespace lrc

#endif
