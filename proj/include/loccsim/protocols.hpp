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

#ifndef LOCCSIM_PROTOCOLS_HPP
#define LOCCSIM_PROTOCOLS_HPP

#include <array>
#include <string>
#include <string_view>

#include "loccsim/ghz.hpp"
#include "loccsim/locc.hpp"

namespace loccsim {

enum class Family { BellLike, CaseI, CaseII, CaseIII };

std::string_view to_string(Family family);
/// Accepts "BellLike", "CaseI", "CaseII", "CaseIII" (case-insensitive).
/// Throws std::invalid_argument otherwise.
Family parse_family(std::string_view name);

struct ResourceSpec {
    Family family = Family::BellLike;
    double r = 1.0;
    StateVector realized;
    /// Dimensions of ancillas a, b, c (1 when absent).
    std::array<int, 3> ancilla_dims{1, 1, 1};
};

/// BellLike: (r^2|00> + |11>)_ab / sqrt(1 + r^4).
/// CaseI/II/III: build_ghz_state at angles (pi/2, pi/2, pi/2),
/// (pi/2, pi/2, pi/4) and (pi/2, pi/4, pi/4).
/// Throws std::domain_error unless r lies in (0, 1].
ResourceSpec make_resource(Family family, double r);

/// GHZ parameters behind a three-qubit family; throws for BellLike.
GhzParams family_params(Family family, double r);

struct ProtocolBundle {
    ResourceSpec resource;
    ProtocolTree tree;
};

/// GHZ-assisted tree; resource CaseI at r = 1.
ProtocolTree protocol_corollary1();
ProtocolBundle bundle_corollary1();
ProtocolBundle protocol_theorem1(double r);
ProtocolBundle protocol_corollary2(double r);
ProtocolBundle protocol_theorem2(double r);
ProtocolBundle protocol_theorem3(double r);

/// Looks up a bundle by name: corollary1, corollary2, theorem1, theorem2,
/// theorem3. corollary1 ignores r.
ProtocolBundle protocol_by_name(std::string_view name, double r);

/// Protocol associated with each sweep family.
ProtocolBundle protocol_for_family(Family family, double r);

/// Weight of the ancilla-correlated branch that survives Bob's flag filter
/// in protocol_theorem3: (5 - sqrt(17)) / 2.
double theorem3_filter_efficiency();

/// (1 - r^4) / (1 + r^4).
double residual_theorem1(double r);
/// |1 - 2 r^4| / (2 (1 + r^4)); vanishes at r^4 = 1/2.
double piecewise_residual_theorem2(double r);
/// |1 - 4 r^4| / (4 (1 + r^4)); vanishes at r^2 = 1/2.
double piecewise_residual_theorem3(double r);
/// Residual reached by protocol_theorem2.
double simulated_residual_theorem2(double r);
/// Residual reached by protocol_theorem3.
double simulated_residual_theorem3(double r);

}  // namespace loccsim

#endif
