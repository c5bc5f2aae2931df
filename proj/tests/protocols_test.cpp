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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "generators.hpp"
#include "loccsim/entanglement.hpp"
#include "loccsim/sweeps.hpp"

using namespace loccsim;

namespace {

RunReport run(const ProtocolBundle &b, bool keep = false) {
    return run_protocol(b.tree, build_canonical_set(), b.resource.realized, {.keep_leaf_states = keep, .r = b.resource.r});
}

std::vector<double> fifty() {
    return loccsim::testing::unit_grid(50);
}

/// Squared Schmidt coefficients of qubit a against the rest, the bound on
/// what Alice's template can extract.
std::pair<double, double> a_marginal(const StateVector &resource) {
    const char a[] = {'a'};
    auto rho = partial_trace(DensityMatrix::pure(resource), a);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix);
    return {es.eigenvalues()[0], es.eigenvalues()[1]};
}

}  // namespace

TEST(resources, realized_states) {
    double r = 0.6;
    double n = std::sqrt(1 + std::pow(r, 4));
    auto bell = make_resource(Family::BellLike, r);
    EXPECT_EQ(bell.ancilla_dims, (std::array<int, 3>{2, 2, 1}));
    EXPECT_NEAR(std::abs(bell.realized.amplitudes[0]), r * r / n, 1e-15);
    EXPECT_NEAR(std::abs(bell.realized.amplitudes[3]), 1 / n, 1e-15);
    auto one = make_resource(Family::CaseI, r);
    EXPECT_NEAR(std::abs(one.realized.amplitudes[0]), r * r / n, 1e-12);
    EXPECT_NEAR(std::abs(one.realized.amplitudes[7]), 1 / n, 1e-12);
    EXPECT_EQ(classify_case(family_params(Family::CaseII, r)), CaseLabel::CaseII);
    EXPECT_EQ(classify_case(family_params(Family::CaseIII, r)), CaseLabel::CaseIII);
    EXPECT_THROW(make_resource(Family::CaseII, 0.0), std::domain_error);
    EXPECT_THROW(family_params(Family::BellLike, 0.5), std::invalid_argument);
}

TEST(resources, family_names) {
    EXPECT_EQ(parse_family("caseiii"), Family::CaseIII);
    EXPECT_EQ(parse_family("BellLike"), Family::BellLike);
    EXPECT_THROW(parse_family("CaseIV"), std::invalid_argument);
}

TEST(corollary1, zero_residual_for_every_candidate) {
    auto rep = run(bundle_corollary1());
    EXPECT_TRUE(rep.valid());
    for (const auto &c : rep.per_state) {
        EXPECT_LT(c.residual_mass, 1e-12);
        EXPECT_NEAR(c.total_probability, 1.0, 1e-12);
    }
    EXPECT_EQ(protocol_corollary1().name, "corollary1");
}

TEST(corollary1, first_candidate_path) {
    auto rep = run(bundle_corollary1());
    const auto &c = rep.per_state[0];
    double through_plus = 0.0;
    for (const auto &b : c.branches) {
        EXPECT_EQ(b.leaf, LeafKind::Identify);
        ASSERT_EQ(b.path.size(), 3u);
        EXPECT_EQ(b.path[1], "B:N1");
        EXPECT_EQ(b.path[2], "C:P+");
        through_plus += b.probability;
    }
    EXPECT_NEAR(through_plus, 1.0, 1e-12);
}

TEST(theorem1, residual_examples) {
    EXPECT_LT(run(protocol_theorem1(1.0)).mean_residual(), 1e-12);
    EXPECT_NEAR(run(protocol_theorem1(0.9)).mean_residual(), 0.207656, 1e-6);
    EXPECT_GT(run(protocol_theorem1(1e-3)).mean_residual(), 1 - 1e-9);
    EXPECT_THROW(protocol_theorem1(0.0), std::domain_error);
    EXPECT_THROW(protocol_theorem1(1.01), std::domain_error);
}

TEST(theorem1, branch_masses_on_fifty_points) {
    for (double r : fifty()) {
        auto rep = run(protocol_theorem1(r));
        double r4 = std::pow(r, 4);
        EXPECT_TRUE(rep.valid());
        EXPECT_NEAR(rep.mean_success_through("A:M1"), r4 / (1 + r4), 1e-12);
        EXPECT_NEAR(rep.mean_success_through("A:M2"), r4 / (1 + r4), 1e-12);
        EXPECT_NEAR(rep.mean_residual(), residual_theorem1(r), 1e-12);
    }
}

TEST(theorem1, residual_branch_is_a_fixed_point) {
    auto set = build_canonical_set();
    for (double r : {0.2, 0.5, 0.95}) {
        auto rep = run(protocol_theorem1(r), true);
        int seen = 0;
        for (const auto &ls : rep.leaf_states) {
            if (ls.leaf != LeafKind::Residual) {
                continue;
            }
            const char keep[] = {'A', 'B', 'C'};
            auto rho = partial_trace(DensityMatrix::pure(ls.state.normalized()), keep);
            const auto &orig = set.states[static_cast<std::size_t>(ls.candidate - 1)].assembled.amplitudes;
            EXPECT_GT((orig.adjoint() * rho.matrix * orig)(0, 0).real(), 1 - 1e-10);
            ++seen;
        }
        EXPECT_EQ(seen, 12);
    }
}

TEST(corollary2, matches_theorem1) {
    EXPECT_LT(run(protocol_corollary2(1.0)).mean_residual(), 1e-12);
    EXPECT_NEAR(run(protocol_corollary2(0.9)).mean_residual(), 0.207656, 1e-6);
    for (double r : {0.1, 0.4, 0.77}) {
        EXPECT_NEAR(run(protocol_corollary2(r)).mean_residual(), run(protocol_theorem1(r)).mean_residual(), 1e-12);
        auto m = measure_resource(make_resource(Family::CaseI, r));
        EXPECT_NEAR(m.c_ab, 0.0, 1e-9);
        EXPECT_NEAR(m.c_ac, 0.0, 1e-9);
        EXPECT_NEAR(m.c_bc, 0.0, 1e-9);
    }
}

TEST(theorem2, simulated_residual_and_resource) {
    for (double r : fifty()) {
        auto b = protocol_theorem2(r);
        auto rep = run(b);
        EXPECT_TRUE(rep.valid()) << r;
        EXPECT_NEAR(rep.mean_residual(), simulated_residual_theorem2(r), 1e-12) << r;
        double r4 = std::pow(r, 4);
        auto m = measure_resource(b.resource);
        EXPECT_NEAR(m.c_ab, std::sqrt(2.0) * r * r / (1 + r4), 1e-9);
        EXPECT_NEAR(m.c_ac, 0.0, 1e-9);
        EXPECT_NEAR(m.c_bc, 0.0, 1e-9);
    }
}

TEST(theorem2, threshold_point) {
    double r = std::pow(0.5, 0.25);
    auto b = protocol_theorem2(r);
    auto rep = run(b);
    // Success is capped by twice the smaller a-marginal weight.
    auto [lo, hi] = a_marginal(b.resource.realized);
    EXPECT_NEAR(lo, 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(1 - rep.mean_residual(), 2 * lo, 1e-12);
    EXPECT_NEAR(rep.mean_residual(), 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(measure_resource(b.resource).c_ab, 2.0 / 3.0, 1e-9);
    // The Alice-node masses equal r^4/(1+r^4) each, measured after Charlie's c0.
    EXPECT_NEAR(rep.mean_success_through("A:M1"), 1.0 / 3.0, 1e-12);
}

TEST(theorem3, simulated_residual_and_resource) {
    for (double r : fifty()) {
        auto b = protocol_theorem3(r);
        auto rep = run(b);
        EXPECT_TRUE(rep.valid()) << r;
        EXPECT_NEAR(rep.mean_residual(), simulated_residual_theorem3(r), 1e-12) << r;
        double c = r * r / (1 + std::pow(r, 4));
        auto m = measure_resource(b.resource);
        EXPECT_NEAR(m.c_ab, c, 1e-9);
        EXPECT_NEAR(m.c_ac, c, 1e-9);
        EXPECT_NEAR(m.c_bc, 0.0, 1e-9);
    }
}

TEST(theorem3, filter_is_complete_and_efficiency_matches) {
    double eta = theorem3_filter_efficiency();
    EXPECT_NEAR(eta, (5 - std::sqrt(17.0)) / 2, 1e-15);
    double r = std::sqrt(0.5);
    auto rep = run(protocol_theorem3(r));
    double r4 = 0.25;
    // Alice's node sees eta times the unfiltered masses.
    EXPECT_NEAR(rep.mean_success_through("A:M1"), eta * r4 / (1 + r4), 1e-12);
    EXPECT_NEAR(rep.mean_success_through("A:M2"), eta * r4 / (1 + r4), 1e-12);
}

TEST(protocols, by_name_and_family) {
    EXPECT_EQ(protocol_by_name("theorem3", 0.5).tree.name, "theorem3");
    EXPECT_EQ(protocol_by_name("corollary1", 0.3).resource.r, 1.0);
    EXPECT_THROW(protocol_by_name("theorem4", 0.5), std::invalid_argument);
    EXPECT_EQ(protocol_for_family(Family::CaseI, 0.5).tree.name, "corollary2");
    EXPECT_EQ(protocol_for_family(Family::BellLike, 0.5).tree.name, "theorem1");
}

TEST(protocols, monotone_in_concurrence_below_threshold) {
    for (Family f : {Family::BellLike, Family::CaseII, Family::CaseIII}) {
        double threshold = f == Family::CaseII ? std::pow(0.5, 0.25) : f == Family::CaseIII ? std::sqrt(0.5) : 1.0;
        double prev_c = -1.0;
        double prev_p = 2.0;
        for (double r : fifty()) {
            if (r > threshold) {
                break;
            }
            auto rec = sweep_point(f, r);
            EXPECT_GT(rec.c_ab, prev_c);
            EXPECT_LT(rec.p3, prev_p - 1e-12) << to_string(f) << " r=" << r;
            prev_c = rec.c_ab;
            prev_p = rec.p3;
        }
    }
}

TEST(protocols, closed_form_helpers) {
    EXPECT_NEAR(piecewise_residual_theorem2(1.0), 0.25, 1e-15);
    EXPECT_NEAR(piecewise_residual_theorem2(std::sqrt(0.5)), 0.2, 1e-15);
    EXPECT_NEAR(piecewise_residual_theorem2(std::pow(0.5, 0.25)), 0.0, 1e-15);
    EXPECT_NEAR(piecewise_residual_theorem3(0.5), 0.176471, 1e-6);
    EXPECT_NEAR(piecewise_residual_theorem3(1.0), 0.375, 1e-15);
    EXPECT_NEAR(piecewise_residual_theorem3(std::sqrt(0.5)), 0.0, 1e-15);
    EXPECT_NEAR(residual_theorem1(0.9), 0.207656, 1e-6);
}

TEST(protocols, every_tree_is_valid_on_random_r) {
    loccsim::testing::Gen gen(61);
    for (int trial = 0; trial < 40; ++trial) {
        double r = gen.r();
        for (const char *name : {"corollary2", "theorem1", "theorem2", "theorem3"}) {
            auto rep = run(protocol_by_name(name, r));
            EXPECT_TRUE(rep.valid()) << name << " r=" << r;
            EXPECT_LT(rep.worst_overlap(), 1e-10);
        }
    }
}
