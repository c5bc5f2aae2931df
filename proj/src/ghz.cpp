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

#include "loccsim/ghz.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace loccsim {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
// Angles at pi/2 may arrive with a rounding error from user arithmetic.
constexpr double kAngleSlack = 1e-12;

double denominator(const GhzParams &p) {
    double r2 = p.r * p.r;
    return 1.0 + r2 * r2 + 2.0 * r2 * std::cos(p.a) * std::cos(p.b) * std::cos(p.c);
}

}  // namespace

void GhzParams::validate() const {
    for (double angle : {a, b, c}) {
        if (!(angle > 0.0 && angle <= kHalfPi + kAngleSlack)) {
            throw std::domain_error("GHZ angle " + std::to_string(angle) + " outside (0, pi/2]");
        }
    }
    if (!(r > 0.0 && r <= 1.0)) {
        throw std::domain_error("GHZ parameter r = " + std::to_string(r) + " outside (0, 1]");
    }
}

std::string_view to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::CaseI:
            return "CaseI";
        case CaseLabel::CaseII:
            return "CaseII";
        case CaseLabel::CaseIII:
            return "CaseIII";
        case CaseLabel::Generic:
            return "Generic";
    }
    return "Generic";
}

double normalization_k(const GhzParams &p) {
    p.validate();
    return denominator(p) / (8.0 * p.r * p.r);
}

CMatrix ghz_filter(double angle) {
    const double s = 1.0 / std::sqrt(2.0);
    CMatrix g(2, 2);
    g << s, s * std::cos(angle), 0.0, s * std::sin(angle);
    return g;
}

GhzClassState build_ghz_state(const GhzParams &p) {
    p.validate();
    CVector seed = CVector::Zero(8);
    seed[0] = p.r;
    seed[7] = 1.0 / p.r;
    CMatrix filters = kron(kron(ghz_filter(p.a), ghz_filter(p.b)), ghz_filter(p.c));
    CVector filtered = filters * seed;

    GhzClassState out;
    out.params = p;
    out.k = normalization_k(p);
    out.filtered_norm_sq = filtered.squaredNorm();
    out.state = StateVector(SystemLayout{{'a', 2}, {'b', 2}, {'c', 2}}, filtered / filtered.norm());
    return out;
}

PairConcurrences closed_form_concurrences(const GhzParams &p) {
    p.validate();
    double scale = 2.0 * p.r * p.r / denominator(p);
    using std::cos;
    using std::sin;
    return {
        scale * sin(p.a) * sin(p.b) * cos(p.c),
        scale * sin(p.a) * cos(p.b) * sin(p.c),
        scale * cos(p.a) * sin(p.b) * sin(p.c),
    };
}

CaseLabel classify_case(const GhzParams &p, double tol) {
    int right = 0;
    for (double angle : {p.a, p.b, p.c}) {
        if (std::abs(angle - kHalfPi) <= tol) {
            ++right;
        }
    }
    switch (right) {
        case 3:
            return CaseLabel::CaseI;
        case 2:
            return CaseLabel::CaseII;
        case 1:
            return CaseLabel::CaseIII;
        default:
            return CaseLabel::Generic;
    }
}

}  // namespace loccsim
