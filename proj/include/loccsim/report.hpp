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

#ifndef LOCCSIM_REPORT_HPP
#define LOCCSIM_REPORT_HPP

#include <string>

#include "loccsim/locc.hpp"

namespace loccsim {

/// {protocol, r, per_state: [{index, branches: [{path, probability, leaf}],
/// residual_mass, total_probability}], mean_residual_mass, checks: {...}}
/// pretty-printed with sorted keys.
std::string report_json(const RunReport &report);

/// Short human-readable summary: one line per candidate plus the checks.
std::string report_text(const RunReport &report);

std::string opm_json(const OPMConstraintReport &report);
std::string opm_text(const OPMConstraintReport &report);

}  // namespace loccsim

#endif
