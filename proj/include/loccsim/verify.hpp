// Copyright 2026 The loccsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LOCCSIM_VERIFY_HPP
#define LOCCSIM_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

namespace loccsim {

struct SuiteResult {
    std::string name;
    bool passed = false;
    /// Largest deviation observed; booleans report 0 or 1.
    double max_error = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

/// Runs every invariant suite. `tol`, when set, replaces each suite's own
/// tolerance; a suite passes iff max_error <= tolerance.
std::vector<SuiteResult> run_verify_suites(std::optional<double> tol = std::nullopt);

}  // namespace loccsim

#endif
