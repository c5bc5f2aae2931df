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

#include "loccsim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "loccsim/entanglement.hpp"
#include "loccsim/ghz.hpp"
#include "loccsim/protocols.hpp"
#include "loccsim/sweeps.hpp"

namespace loccsim {

namespace {

struct Measured {
    double error = 0.0;
    std::string detail;
};

std::vector<double> unit_grid(int n) {
    std::vector<double> g;
    for (int k = 1; k <= n; ++k) {
        g.push_back(static_cast<double>(k) / n);
    }
    return g;
}

std::vector<double> angle_grid(int n) {
    std::vector<double> g;
    for (int k = 1; k <= n; ++k) {
        g.push_back(std::numbers::pi / 2 * k / n);
    }
    return g;
}

double tangle_oracle(const GhzParams &p) {
    double den = 1.0 + std::pow(p.r, 4) + 2.0 * p.r * p.r * std::cos(p.a) * std::cos(p.b) * std::cos(p.c);
    double s = std::sin(p.a) * std::sin(p.b) * std::sin(p.c);
    return 4.0 * std::pow(p.r, 4) * s * s / (den * den);
}

template <typename F>
void over_ghz_grid(int n, F f) {
    for (double a : angle_grid(n)) {
        for (double b : angle_grid(n)) {
            for (double c : angle_grid(n)) {
                for (double r : unit_grid(n)) {
                    f(GhzParams{a, b, c, r});
                }
            }
        }
    }
}

Measured canonical_orthogonality() {
    auto set = build_canonical_set();
    CMatrix g = gram_matrix(set);
    double err = (g - CMatrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
    return {err, "12x12 Gram matrix against identity"};
}

Measured opm_triviality() {
    auto set = build_canonical_set();
    double err = 0.0;
    std::ostringstream d;
    for (char party : {'A', 'B', 'C'}) {
        auto rep = opm_triviality_check(set, party);
        err = std::max(err, rep.trivial_only ? 0.0 : 1.0);
        d << party << ":d_sol=" << rep.solution_dim << " ";
    }
    return {err, d.str()};
}

Measured concurrence_oracle() {
    double err = 0.0;
    int points = 0;
    over_ghz_grid(5, [&](const GhzParams &p) {
        auto st = build_ghz_state(p);
        auto cf = closed_form_concurrences(p);
        auto rho = DensityMatrix::pure(st.state);
        const char ab[] = {'a', 'b'};
        const char ac[] = {'a', 'c'};
        const char bc[] = {'b', 'c'};
        err = std::max(err, std::abs(concurrence_mixed(partial_trace(rho, ab)).value - cf.c12));
        err = std::max(err, std::abs(concurrence_mixed(partial_trace(rho, ac)).value - cf.c13));
        err = std::max(err, std::abs(concurrence_mixed(partial_trace(rho, bc)).value - cf.c23));
        ++points;
    });
    return {err, std::to_string(points) + " (a,b,c,r) points"};
}

Measured bell_like_concurrence() {
    double err = 0.0;
    for (double r : unit_grid(50)) {
        auto res = make_resource(Family::BellLike, r);
        double c = concurrence_mixed(DensityMatrix::pure(res.realized)).value;
        err = std::max(err, std::abs(c - 2 * r * r / (1 + std::pow(r, 4))));
    }
    return {err, "C_AB vs 2r^2/(1+r^4) on 50 r values"};
}

Measured tangle_oracle_suite() {
    double err = 0.0;
    over_ghz_grid(5, [&](const GhzParams &p) {
        err = std::max(err, std::abs(tangle(build_ghz_state(p).state, 'a').tau - tangle_oracle(p)));
    });
    return {err, "numeric tangle vs 4r^4 (sin a sin b sin c)^2 / den^2"};
}

Measured monogamy() {
    double worst = 0.0;
    over_ghz_grid(6, [&](const GhzParams &p) {
        auto psi = build_ghz_state(p).state;
        for (char focus : {'a', 'b', 'c'}) {
            auto t = tangle(psi, focus);
            worst = std::max(worst, -t.tau);
            for (double c2 : t.c2_pairs) {
                worst = std::max({worst, -c2, c2 - 1.0});
            }
            worst = std::max({worst, -t.c2_focus_rest, t.c2_focus_rest - 1.0});
        }
    });
    return {worst, "largest violation of tau >= 0 and C^2 in [0,1]"};
}

Measured corollary1() {
    auto b = bundle_corollary1();
    auto rep = run_protocol(b.tree, build_canonical_set(), b.resource.realized);
    double err = rep.valid() ? 0.0 : 1.0;
    for (const auto &c : rep.per_state) {
        err = std::max(err, c.residual_mass);
    }
    return {err, "GHZ resource, residual mass and validation"};
}

Measured theorem1_masses() {
    double err = 0.0;
    auto set = build_canonical_set();
    for (double r : unit_grid(50)) {
        auto b = protocol_theorem1(r);
        auto rep = run_protocol(b.tree, set, b.resource.realized);
        double r4 = std::pow(r, 4);
        double p = r4 / (1 + r4);
        err = std::max({err, std::abs(rep.mean_success_through("A:M1") - p),
                        std::abs(rep.mean_success_through("A:M2") - p),
                        std::abs(rep.mean_residual() - (1 - r4) / (1 + r4)), rep.valid() ? 0.0 : 1.0});
    }
    return {err, "branch masses vs r^4/(1+r^4), (1-r^4)/(1+r^4)"};
}

Measured theorem1_fixed_point() {
    auto set = build_canonical_set();
    double err = 0.0;
    for (double r : {0.3, 0.6, 0.9}) {
        auto b = protocol_theorem1(r);
        auto rep = run_protocol(b.tree, set, b.resource.realized, {.keep_leaf_states = true, .r = r});
        for (const auto &ls : rep.leaf_states) {
            if (ls.leaf != LeafKind::Residual) {
                continue;
            }
            const char keep[] = {'A', 'B', 'C'};
            auto rho = partial_trace(DensityMatrix::pure(ls.state.normalized()), keep);
            const auto &orig = set.states[static_cast<std::size_t>(ls.candidate - 1)].assembled.amplitudes;
            double fid = (orig.adjoint() * rho.matrix * orig)(0, 0).real();
            err = std::max(err, 1.0 - fid);
        }
    }
    return {err, "1 - fidelity of residual-branch states with the originals"};
}

Measured corollary2_matches() {
    auto set = build_canonical_set();
    double err = 0.0;
    for (double r : unit_grid(20)) {
        auto a = protocol_theorem1(r);
        auto b = protocol_corollary2(r);
        err = std::max(err, std::abs(run_protocol(a.tree, set, a.resource.realized).mean_residual() -
                                     run_protocol(b.tree, set, b.resource.realized).mean_residual()));
    }
    return {err, "CaseI residual equals Bell-like residual"};
}

Measured family_residual(Family family, double (*formula)(double)) {
    double err = 0.0;
    auto set = build_canonical_set();
    for (double r : unit_grid(50)) {
        auto b = protocol_for_family(family, r);
        auto rep = run_protocol(b.tree, set, b.resource.realized);
        err = std::max({err, std::abs(rep.mean_residual() - formula(r)), rep.valid() ? 0.0 : 1.0});
    }
    return {err, std::string(to_string(family)) + " simulated residual vs its closed form"};
}

Measured probability_conservation() {
    double err = 0.0;
    auto set = build_canonical_set();
    for (const char *name : {"corollary1", "corollary2", "theorem1", "theorem2", "theorem3"}) {
        for (double r : unit_grid(25)) {
            auto b = protocol_by_name(name, r);
            auto rep = run_protocol(b.tree, set, b.resource.realized);
            for (const auto &c : rep.per_state) {
                err = std::max(err, std::abs(c.total_probability - 1.0));
            }
            err = std::max(err, rep.worst_overlap());
        }
    }
    return {err, "|sum of path probabilities - 1| and node overlaps"};
}

Measured template_completeness() {
    double err = 0.0;
    for (double x : unit_grid(10)) {
        for (double y : unit_grid(10)) {
            err = std::max(err, measurement_template(x, y).completeness_residual());
        }
    }
    return {err, "sum M^dagger M - I over a 10x10 (X,Y) grid"};
}

}  // namespace

std::vector<SuiteResult> run_verify_suites(std::optional<double> tol) {
    struct Suite {
        const char *name;
        double tolerance;
        std::function<Measured()> run;
    };
    const std::vector<Suite> suites = {
        {"canonical-orthogonality", 1e-12, canonical_orthogonality},
        {"opm-triviality", 0.0, opm_triviality},
        {"concurrence-oracle", 1e-9, concurrence_oracle},
        {"bell-like-concurrence", 1e-9, bell_like_concurrence},
        {"tangle-oracle", 1e-9, tangle_oracle_suite},
        {"monogamy-positivity", 1e-9, monogamy},
        {"corollary1-zero-residual", 1e-12, corollary1},
        {"theorem1-branch-masses", 1e-12, theorem1_masses},
        {"theorem1-residual-fixed-point", 1e-10, theorem1_fixed_point},
        {"corollary2-matches-theorem1", 1e-12, corollary2_matches},
        {"theorem2-residual", 1e-12, [] { return family_residual(Family::CaseII, simulated_residual_theorem2); }},
        {"theorem3-residual", 1e-12, [] { return family_residual(Family::CaseIII, simulated_residual_theorem3); }},
        {"probability-conservation", 1e-10, probability_conservation},
        {"template-completeness", 1e-12, template_completeness},
    };
    std::vector<SuiteResult> out;
    for (const auto &s : suites) {
        SuiteResult res;
        res.name = s.name;
        res.tolerance = tol.value_or(s.tolerance);
        try {
            Measured m = s.run();
            res.max_error = m.error;
            res.detail = m.detail;
            res.passed = m.error <= res.tolerance;
        } catch (const std::exception &e) {
            res.max_error = 1.0;
            res.detail = std::string("exception: ") + e.what();
            res.passed = false;
        }
        out.push_back(std::move(res));
    }
    return out;
}

}  // namespace loccsim
