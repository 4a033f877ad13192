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

// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// check fails. The same checks back `lrc verify`.

#include <cstdio>

#include "lrc/verification.hpp"

int main() {
    const auto results = lrc::run_verification();
    bool all = true;
    for (const auto& r : results) {
        std::printf("[%s] %-18s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.seconds,
                    r.detail.c_str());
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed"
                            : "ACCEPTANCE: at least one criterion failed");
    return all ? 0 : 1;
}
