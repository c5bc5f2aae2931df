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

#ifndef LOCCSIM_GHZ_HPP
#define LOCCSIM_GHZ_HPP

#include <numbers>
#include <string_view>

#include "loccsim/tensor.hpp"

namespace loccsim {

/// Parameters of a GHZ-class state (real r). Angles lie in (0, pi/2] and
/// r in (0, 1]; r = 0 is rejected because the filter diag(r, 1/r) is singular.
struct GhzParams {
    double a = std::numbers::pi / 2;
    double b = std::numbers::pi / 2;
    double c = std::numbers::pi / 2;
    double r = 1.0;

    /// Throws std::domain_error when outside the ranges above.
    void validate() const;
};

struct GhzClassState {
    GhzParams params;
    double k = 0.0;
    /// Squared norm of the filtered vector before normalization; equals k.
    double filtered_norm_sq = 0.0;
    /// Normalized state on slots (a:2, b:2, c:2).
    StateVector state;
};

struct PairConcurrences {
    double c12 = 0.0;
    double c13 = 0.0;
    double c23 = 0.0;
};

enum class CaseLabel { CaseI, CaseII, CaseIII, Generic };

std::string_view to_string(CaseLabel label);

/// (1 + r^4 + 2 r^2 cos a cos b cos c) / (8 r^2).
double normalization_k(const GhzParams &p);

/// Upper-triangular single-qubit filter [[1, cos t], [0, sin t]] / sqrt(2).
CMatrix ghz_filter(double angle);

/// normalize((g(a) x g(b) x g(c)) (r|000> + (1/r)|111>)) on slots a, b, c.
GhzClassState build_ghz_state(const GhzParams &p);

PairConcurrences closed_form_concurrences(const GhzParams &p);

/// Counts how many angles equal pi/2 within `tol`: three is CaseI, two
/// CaseII, one CaseIII, none Generic.
CaseLabel classify_case(const GhzParams &p, double tol = 1e-9);

}  // namespace loccsim

#endif
