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

#ifndef LOCCSIM_LOCC_HPP
#define LOCCSIM_LOCC_HPP

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "loccsim/product_set.hpp"
#include "loccsim/tensor.hpp"

namespace loccsim {

/// Measurement operators on one party's system, optionally together with that
/// party's ancilla qubit. Operators act on party (x) ancilla with the party
/// digit most significant.
struct LocalMeasurement {
    char party = 'A';
    bool uses_ancilla = false;
    std::vector<std::string> labels;
    std::vector<CMatrix> operators;

    std::size_t outcomes() const {
        return operators.size();
    }
    /// {party} or {party, ancilla}; the ancilla of party 'A' is slot 'a'.
    std::vector<char> target_slots() const;
    /// max |sum_t M_t^dagger M_t - I|.
    double completeness_residual() const;
};

/// Builds a measurement and checks shape and completeness (within `tol`).
/// Throws std::invalid_argument otherwise.
LocalMeasurement make_measurement(char party, bool uses_ancilla,
                                  std::vector<std::pair<std::string, CMatrix>> outcomes, double tol = 1e-12);

/// Three-outcome measurement on Alice's qutrit and ancilla qubit:
///   M1 = X P[|0>_A;|0>_a] + Y P[(|1>,|2>)_A;|1>_a]
///   M2 = Y P[|0>_A;|1>_a] + X P[(|1>,|2>)_A;|0>_a]
///   M3 = I_A x (sqrt(1-X^2) P[|0>_a] + sqrt(1-Y^2) P[|1>_a])
/// X and Y must lie in (0, 1].
LocalMeasurement measurement_template(double x, double y);

enum class LeafKind { Identify, WalgatePair, Residual };
std::string_view to_string(LeafKind kind);

struct Leaf {
    LeafKind kind = LeafKind::Residual;
    std::vector<int> candidates;
};

struct ProtocolNode;
using NodePtr = std::shared_ptr<const ProtocolNode>;

struct MeasureNode {
    LocalMeasurement measurement;
    std::vector<NodePtr> branches;
};

struct ProtocolNode {
    std::variant<MeasureNode, Leaf> content;
};

NodePtr measure(LocalMeasurement m, std::vector<NodePtr> branches);
NodePtr identify(int candidate);
NodePtr walgate_pair(int first, int second);
NodePtr residual();

struct ProtocolTree {
    std::string name;
    NodePtr root;
};

struct BranchState {
    StateVector post;  // unnormalized M psi
    double probability = 0.0;  // <psi|M^dagger M|psi> / <psi|psi>
};

struct OutcomeBranch {
    std::string label;
    std::vector<BranchState> states;
};

/// Applies `m` to every candidate. Input states may be unnormalized; each
/// branch probability is relative to the incoming squared norm. Throws if `m`
/// is incomplete or its targets do not fit `layout`.
std::vector<OutcomeBranch> apply_measurement(std::span<const StateVector> candidates, const LocalMeasurement &m,
                                             const SystemLayout &layout, double tol = 1e-12);

struct PreservationCheck {
    bool preserving = true;
    /// Largest |<M psi_i|M psi_j>| / (|psi_i| |psi_j|) over outcomes and pairs.
    double worst_overlap = 0.0;
};

PreservationCheck check_orthogonality_preserving(const LocalMeasurement &m, std::span<const StateVector> candidates,
                                                 const SystemLayout &layout, double tol = 1e-10);

struct BranchRecord {
    std::vector<std::string> path;
    double probability = 0.0;
    LeafKind leaf = LeafKind::Residual;
};

struct CandidateRun {
    int index = 0;
    std::vector<BranchRecord> branches;
    double residual_mass = 0.0;
    double total_probability = 0.0;
};

struct NodeCheck {
    std::vector<std::string> path;
    char party = 'A';
    double completeness_residual = 0.0;
    double worst_overlap = 0.0;
    bool completeness_ok = true;
    bool orthogonality_ok = true;
};

struct LeafState {
    int candidate = 0;
    std::vector<std::string> path;
    LeafKind leaf = LeafKind::Residual;
    StateVector state;  // unnormalized, squared norm = path probability
};

struct RunReport {
    std::string protocol;
    double r = 1.0;
    std::vector<CandidateRun> per_state;
    std::vector<NodeCheck> node_checks;
    std::vector<std::string> leaf_violations;
    std::vector<LeafState> leaf_states;

    bool completeness_ok() const;
    bool orthogonality_ok() const;
    bool leaf_contracts_ok() const {
        return leaf_violations.empty();
    }
    bool probability_ok(double tol = 1e-10) const;
    bool valid() const {
        return completeness_ok() && orthogonality_ok() && leaf_contracts_ok() && probability_ok();
    }
    /// Residual mass averaged over equiprobable candidates.
    double mean_residual() const;
    /// Probability mass of non-residual leaves whose path contains `label`,
    /// averaged over candidates.
    double mean_success_through(std::string_view label) const;
    double worst_overlap() const;
};

struct RunOptions {
    double tol = 1e-10;
    /// Branches whose absolute probability falls below this are not followed.
    double survivor_floor = 1e-15;
    bool keep_leaf_states = false;
    double r = 1.0;
};

/// Executes `tree` on every candidate of `set` tensored with `resource`
/// (slots drawn from a, b, c; missing ancillas get dimension 1). Node-level
/// completeness and orthogonality preservation, leaf contracts and
/// probability conservation are all recorded in the report.
RunReport run_protocol(const ProtocolTree &tree, const StateSet &set, const StateVector &resource,
                       const RunOptions &options = {});

/// Layout (A,B,C,a,b,c) matching the ancilla slots of `resource`.
SystemLayout layout_for_resource(const StateVector &resource);

struct OPMConstraintReport {
    char party = 'A';
    int constraints = 0;
    int solution_dim = 0;
    bool trivial_only = false;
};

/// Builds the real-linear constraints <p_i|E|p_j> = 0 on a Hermitian E acting
/// on `party`, one pair of rows for every pair of candidates whose factors on
/// the other parties overlap, and reports the dimension of the solution
/// space. trivial_only holds iff that space is span{I}.
OPMConstraintReport opm_triviality_check(const StateSet &set, char party, double tol = 1e-10);

}  // namespace loccsim

#endif
