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

#include "loccsim/protocols.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace loccsim {

namespace {

void check_r(double r) {
    if (!(r > 0.0 && r <= 1.0)) {
        throw std::domain_error("r must lie in (0, 1], got " + std::to_string(r));
    }
}

CMatrix proj(int dim, std::initializer_list<int> levels) {
    CMatrix p = CMatrix::Zero(dim, dim);
    for (int k : levels) {
        p(k, k) = 1.0;
    }
    return p;
}

CMatrix proj_sum(int k) {
    CVector v = basis(3, 0) + basis(3, k);
    return projector(v);
}

CMatrix identity(int dim) {
    return CMatrix::Identity(dim, dim);
}

/// Two-outcome projective measurement {P, I - P} on a party qutrit.
LocalMeasurement binary(char party, const CMatrix &p, const char *first, const char *second) {
    return make_measurement(party, false, {{first, p}, {second, identity(3) - p}});
}

/// Follow-up once Alice has tied her qutrit to the ancillas: candidates whose
/// A = 0 component carries b = z.
NodePtr follow_up(int z) {
    CMatrix pz = proj(2, {z});
    CMatrix n1 = kron(proj(3, {1}), pz);
    CMatrix n2 = kron(proj(3, {2}), pz);
    auto bob = make_measurement('B', true, {{"N1", n1}, {"N2", n2}, {"N3", identity(6) - n1 - n2}});

    auto after_n1 = measure(binary('C', proj_sum(1), "P+", "P-"), {identify(1), identify(2)});
    auto after_n2 = measure(binary('C', proj_sum(2), "P+", "P-"), {identify(3), identify(4)});

    auto alice_split = binary('A', proj(3, {1}), "A1", "A2");
    auto after_a1 = measure(binary('B', proj_sum(1), "P+", "P-"), {identify(5), identify(6)});
    auto after_a2 = measure(binary('B', proj_sum(2), "P+", "P-"), {identify(7), identify(8)});
    auto after_q0 = measure(alice_split, {after_a1, after_a2});

    auto charlie = make_measurement('C', false, {{"Q1", proj(3, {1})}, {"Q2", proj(3, {2})}, {"Q0", proj(3, {0})}});
    auto after_n3 = measure(charlie, {walgate_pair(9, 10), walgate_pair(11, 12), after_q0});

    return measure(bob, {after_n1, after_n2, after_n3});
}

NodePtr template_root(double x, double y) {
    return measure(measurement_template(x, y), {follow_up(0), follow_up(1), residual()});
}

/// Hermitian square root of I - K^dagger K, with negative eigenvalues clamped.
CMatrix complement_kraus(const CMatrix &k) {
    CMatrix rest = identity(static_cast<int>(k.cols())) - k.adjoint() * k;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rest);
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

std::string_view to_string(Family family) {
    switch (family) {
        case Family::BellLike:
            return "BellLike";
        case Family::CaseI:
            return "CaseI";
        case Family::CaseII:
            return "CaseII";
        case Family::CaseIII:
            return "CaseIII";
    }
    return "BellLike";
}

Family parse_family(std::string_view name) {
    std::string lower;
    for (char ch : name) {
        lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    for (Family f : {Family::BellLike, Family::CaseI, Family::CaseII, Family::CaseIII}) {
        std::string candidate;
        for (char ch : to_string(f)) {
            candidate += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        }
        if (candidate == lower) {
            return f;
        }
    }
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

GhzParams family_params(Family family, double r) {
    constexpr double half = std::numbers::pi / 2;
    constexpr double quarter = std::numbers::pi / 4;
    switch (family) {
        case Family::CaseI:
            return {half, half, half, r};
        case Family::CaseII:
            return {half, half, quarter, r};
        case Family::CaseIII:
            return {half, quarter, quarter, r};
        case Family::BellLike:
            break;
    }
    throw std::invalid_argument("BellLike is not a three-qubit family");
}

ResourceSpec make_resource(Family family, double r) {
    check_r(r);
    ResourceSpec spec;
    spec.family = family;
    spec.r = r;
    if (family == Family::BellLike) {
        double r2 = r * r;
        CVector amps = CVector::Zero(4);
        amps(0) = r2;
        amps(3) = 1.0;
        amps /= std::sqrt(1.0 + r2 * r2);
        spec.realized = StateVector({{'a', 2}, {'b', 2}}, amps);
        spec.ancilla_dims = {2, 2, 1};
        return spec;
    }
    spec.realized = build_ghz_state(family_params(family, r)).state;
    spec.ancilla_dims = {2, 2, 2};
    return spec;
}

ProtocolTree protocol_corollary1() {
    CMatrix m = kron(proj(3, {0}), proj(2, {0})) + kron(proj(3, {1, 2}), proj(2, {1}));
    auto alice = make_measurement('A', true, {{"M", m}, {"Mbar", identity(6) - m}});
    return {"corollary1", measure(alice, {follow_up(0), follow_up(1)})};
}

ProtocolBundle bundle_corollary1() {
    return {make_resource(Family::CaseI, 1.0), protocol_corollary1()};
}

ProtocolBundle protocol_theorem1(double r) {
    check_r(r);
    return {make_resource(Family::BellLike, r), {"theorem1", template_root(1.0, r * r)}};
}

ProtocolBundle protocol_corollary2(double r) {
    check_r(r);
    return {make_resource(Family::CaseI, r), {"corollary2", template_root(1.0, r * r)}};
}

ProtocolBundle protocol_theorem2(double r) {
    check_r(r);
    double r4 = std::pow(r, 4);
    auto alice = r4 <= 0.5 ? template_root(1.0, std::sqrt(2.0) * r * r) : template_root(1.0 / (std::sqrt(2.0) * r * r), 1.0);
    auto charlie = make_measurement('C', true, {{"c0", kron(identity(3), proj(2, {0}))},
                                                {"c1", kron(identity(3), proj(2, {1}))}});
    return {make_resource(Family::CaseII, r), {"theorem2", measure(charlie, {alice, residual()})}};
}

double theorem3_filter_efficiency() {
    return (5.0 - std::sqrt(17.0)) / 2.0;
}

ProtocolBundle protocol_theorem3(double r) {
    check_r(r);
    double r2 = r * r;
    auto alice = r2 <= 0.5 ? template_root(1.0, 2.0 * r2) : template_root(1.0 / (2.0 * r2), 1.0);

    // K maps |0>_b to |0>_b and |+>_b to |1>_b up to weights s = 2t, so b
    // becomes a copy of a.
    double t = std::sqrt(theorem3_filter_efficiency() / 2.0);
    double s = 2.0 * t;
    CVector minus(2);
    minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
    CMatrix k = s * basis(2, 0) * minus.adjoint() + t * proj(2, {1});
    CMatrix k_fail = complement_kraus(k);
    auto bob = make_measurement('B', true, {{"Kok", kron(identity(3), k)}, {"Kfail", kron(identity(3), k_fail)}});
    return {make_resource(Family::CaseIII, r), {"theorem3", measure(bob, {alice, residual()})}};
}

ProtocolBundle protocol_by_name(std::string_view name, double r) {
    if (name == "corollary1") {
        return bundle_corollary1();
    }
    if (name == "corollary2") {
        return protocol_corollary2(r);
    }
    if (name == "theorem1") {
        return protocol_theorem1(r);
    }
    if (name == "theorem2") {
        return protocol_theorem2(r);
    }
    if (name == "theorem3") {
        return protocol_theorem3(r);
    }
    throw std::invalid_argument("unknown protocol '" + std::string(name) + "'");
}

ProtocolBundle protocol_for_family(Family family, double r) {
    switch (family) {
        case Family::BellLike:
            return protocol_theorem1(r);
        case Family::CaseI:
            return protocol_corollary2(r);
        case Family::CaseII:
            return protocol_theorem2(r);
        case Family::CaseIII:
            return protocol_theorem3(r);
    }
    throw std::invalid_argument("unknown family");
}

double residual_theorem1(double r) {
    double r4 = std::pow(r, 4);
    return (1.0 - r4) / (1.0 + r4);
}

double piecewise_residual_theorem2(double r) {
    double r4 = std::pow(r, 4);
    return std::abs(1.0 - 2.0 * r4) / (2.0 * (1.0 + r4));
}

double piecewise_residual_theorem3(double r) {
    double r4 = std::pow(r, 4);
    return std::abs(1.0 - 4.0 * r4) / (4.0 * (1.0 + r4));
}

double simulated_residual_theorem2(double r) {
    double r4 = std::pow(r, 4);
    return r4 <= 0.5 ? (1.0 - r4) / (1.0 + r4) : r4 / (1.0 + r4);
}

double simulated_residual_theorem3(double r) {
    double r2 = r * r;
    double r4 = r2 * r2;
    double eta = theorem3_filter_efficiency();
    return r2 <= 0.5 ? 1.0 - 2.0 * eta * r4 / (1.0 + r4) : 1.0 - eta / (2.0 * (1.0 + r4));
}

}  // namespace loccsim
