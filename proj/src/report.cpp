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

#include "loccsim/report.hpp"

#include <sstream>

#include "json.hpp"
#include "loccsim/sweeps.hpp"

namespace loccsim {

std::string report_json(const RunReport &report) {
    nlohmann::json j;
    j["protocol"] = report.protocol;
    j["r"] = report.r;
    j["mean_residual_mass"] = report.mean_residual();
    auto per_state = nlohmann::json::array();
    for (const auto &c : report.per_state) {
        auto branches = nlohmann::json::array();
        for (const auto &b : c.branches) {
            branches.push_back({{"path", b.path}, {"probability", b.probability}, {"leaf", to_string(b.leaf)}});
        }
        per_state.push_back({{"index", c.index},
                             {"branches", branches},
                             {"residual_mass", c.residual_mass},
                             {"total_probability", c.total_probability}});
    }
    j["per_state"] = per_state;
    j["checks"] = {{"completeness", report.completeness_ok()},
                   {"orthogonality", report.orthogonality_ok()},
                   {"leaf_contracts", report.leaf_contracts_ok()},
                   {"probability", report.probability_ok()},
                   {"worst_overlap", report.worst_overlap()},
                   {"violations", report.leaf_violations}};
    return j.dump(2) + "\n";
}

std::string report_text(const RunReport &report) {
    std::ostringstream out;
    out << "protocol " << report.protocol << " r=" << format_number(report.r) << "\n";
    for (const auto &c : report.per_state) {
        out << "  state " << c.index << ": residual " << format_number(c.residual_mass) << ", total "
            << format_number(c.total_probability) << ", " << c.branches.size() << " branches\n";
    }
    out << "mean residual mass (p_e / xi_e): " << format_number(report.mean_residual()) << "\n";
    out << "completeness: " << (report.completeness_ok() ? "ok" : "FAILED") << "\n";
    out << "orthogonality: " << (report.orthogonality_ok() ? "ok" : "FAILED")
        << " (worst overlap " << format_number(report.worst_overlap()) << ")\n";
    out << "leaf contracts: " << (report.leaf_contracts_ok() ? "ok" : "FAILED") << "\n";
    for (const auto &v : report.leaf_violations) {
        out << "  " << v << "\n";
    }
    out << "probability conservation: " << (report.probability_ok() ? "ok" : "FAILED") << "\n";
    return out.str();
}

std::string opm_json(const OPMConstraintReport &report) {
    nlohmann::json j = {{"party", std::string(1, report.party)},
                        {"constraints", report.constraints},
                        {"solution_dim", report.solution_dim},
                        {"trivial_only", report.trivial_only}};
    return j.dump(2) + "\n";
}

std::string opm_text(const OPMConstraintReport &report) {
    std::ostringstream out;
    out << "party " << report.party << ": constraints " << report.constraints << ", solution_dim "
        << report.solution_dim << ", trivial_only: " << (report.trivial_only ? "true" : "false") << "\n";
    return out.str();
}

}  // namespace loccsim
