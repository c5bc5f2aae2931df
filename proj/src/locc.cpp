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

#include "loccsim/locc.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace loccsim {

namespace {

char ancilla_of(char party) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(party)));
}

bool is_party(char c) {
    return c == 'A' || c == 'B' || c == 'C';
}

std::string join_path(const std::vector<std::string> &path) {
    if (path.empty()) {
        return "<root>";
    }
    std::string s;
    for (const auto &p : path) {
        s += (s.empty() ? "" : " > ") + p;
    }
    return s;
}

using SplitCache = std::map<std::vector<char>, SlotSplit>;

std::vector<LocalAction> embed_all(const LocalMeasurement &m, const SystemLayout &layout, SplitCache *cache = nullptr) {
    auto targets = m.target_slots();
    SplitCache local;
    SplitCache &splits = cache ? *cache : local;
    auto it = splits.find(targets);
    if (it == splits.end()) {
        it = splits.emplace(targets, split_slots(layout, targets)).first;
    }
    std::vector<LocalAction> ops;
    ops.reserve(m.outcomes());
    for (const auto &op : m.operators) {
        ops.emplace_back(op, layout, it->second);
    }
    return ops;
}

double pair_overlap(const CVector &x, const CVector &y, double nx, double ny) {
    if (nx == 0.0 || ny == 0.0) {
        return 0.0;
    }
    return std::abs(x.dot(y)) / (nx * ny);
}

}  // namespace

std::vector<char> LocalMeasurement::target_slots() const {
    if (uses_ancilla) {
        return {party, ancilla_of(party)};
    }
    return {party};
}

double LocalMeasurement::completeness_residual() const {
    if (operators.empty()) {
        return 1.0;
    }
    auto d = operators.front().rows();
    CMatrix acc = CMatrix::Zero(d, d);
    for (const auto &op : operators) {
        acc += op.adjoint() * op;
    }
    return (acc - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

LocalMeasurement make_measurement(char party, bool uses_ancilla,
                                  std::vector<std::pair<std::string, CMatrix>> outcomes, double tol) {
    if (!is_party(party)) {
        throw std::invalid_argument(std::string("unknown party '") + party + "'");
    }
    if (outcomes.empty()) {
        throw std::invalid_argument("measurement without outcomes");
    }
    LocalMeasurement m;
    m.party = party;
    m.uses_ancilla = uses_ancilla;
    Eigen::Index side = outcomes.front().second.rows();
    if (uses_ancilla ? side % kPartyDim != 0 || side < kPartyDim : side != kPartyDim) {
        throw std::invalid_argument("measurement operators have unsupported size " + std::to_string(side));
    }
    for (auto &[label, op] : outcomes) {
        if (op.rows() != side || op.cols() != side) {
            throw std::invalid_argument("measurement operator '" + label + "' has inconsistent shape");
        }
        m.labels.push_back(std::move(label));
        m.operators.push_back(std::move(op));
    }
    double residual = m.completeness_residual();
    if (residual > tol) {
        throw std::invalid_argument("measurement on " + std::string(1, party) + " is incomplete (residual " +
                                    std::to_string(residual) + ")");
    }
    return m;
}

LocalMeasurement measurement_template(double x, double y) {
    if (!(x > 0.0 && x <= 1.0) || !(y > 0.0 && y <= 1.0)) {
        throw std::domain_error("measurement_template needs X, Y in (0, 1]");
    }
    CMatrix p0 = projector(basis(3, 0));
    CMatrix p12 = projector(basis(3, 1)) + projector(basis(3, 2));
    CMatrix a0 = projector(basis(2, 0));
    CMatrix a1 = projector(basis(2, 1));
    CMatrix m1 = x * kron(p0, a0) + y * kron(p12, a1);
    CMatrix m2 = y * kron(p0, a1) + x * kron(p12, a0);
    CMatrix fail = std::sqrt(1.0 - x * x) * a0 + std::sqrt(1.0 - y * y) * a1;
    CMatrix m3 = kron(CMatrix(CMatrix::Identity(3, 3)), fail);
    return make_measurement('A', true, {{"M1", m1}, {"M2", m2}, {"M3", m3}});
}

std::string_view to_string(LeafKind kind) {
    switch (kind) {
        case LeafKind::Identify:
            return "identify";
        case LeafKind::WalgatePair:
            return "walgate_pair";
        case LeafKind::Residual:
            return "residual";
    }
    return "residual";
}

NodePtr measure(LocalMeasurement m, std::vector<NodePtr> branches) {
    if (branches.size() != m.outcomes()) {
        throw std::invalid_argument("measurement on " + std::string(1, m.party) + " has " +
                                    std::to_string(m.outcomes()) + " outcomes but " +
                                    std::to_string(branches.size()) + " branches");
    }
    for (const auto &b : branches) {
        if (!b) {
            throw std::invalid_argument("null protocol branch");
        }
    }
    return std::make_shared<const ProtocolNode>(ProtocolNode{MeasureNode{std::move(m), std::move(branches)}});
}

NodePtr identify(int candidate) {
    return std::make_shared<const ProtocolNode>(ProtocolNode{Leaf{LeafKind::Identify, {candidate}}});
}

NodePtr walgate_pair(int first, int second) {
    if (first == second) {
        throw std::invalid_argument("walgate_pair needs two distinct candidates");
    }
    return std::make_shared<const ProtocolNode>(ProtocolNode{Leaf{LeafKind::WalgatePair, {first, second}}});
}

NodePtr residual() {
    return std::make_shared<const ProtocolNode>(ProtocolNode{Leaf{LeafKind::Residual, {}}});
}

std::vector<OutcomeBranch> apply_measurement(std::span<const StateVector> candidates, const LocalMeasurement &m,
                                             const SystemLayout &layout, double tol) {
    double residual = m.completeness_residual();
    if (residual > tol) {
        throw std::invalid_argument("incomplete measurement (residual " + std::to_string(residual) + ")");
    }
    auto ops = embed_all(m, layout);
    std::vector<OutcomeBranch> out;
    for (std::size_t k = 0; k < ops.size(); ++k) {
        OutcomeBranch branch{m.labels[k], {}};
        for (const auto &psi : candidates) {
            StateVector post = ops[k].apply(psi);
            double in = psi.amplitudes.squaredNorm();
            double p = in > 0.0 ? post.amplitudes.squaredNorm() / in : 0.0;
            branch.states.push_back({std::move(post), p});
        }
        out.push_back(std::move(branch));
    }
    return out;
}

PreservationCheck check_orthogonality_preserving(const LocalMeasurement &m, std::span<const StateVector> candidates,
                                                 const SystemLayout &layout, double tol) {
    PreservationCheck check;
    if (candidates.size() < 2) {
        return check;
    }
    auto ops = embed_all(m, layout);
    std::vector<double> norms;
    for (const auto &psi : candidates) {
        norms.push_back(psi.norm());
    }
    for (const auto &op : ops) {
        std::vector<CVector> posts;
        for (const auto &psi : candidates) {
            posts.push_back(op.apply(psi).amplitudes);
        }
        for (std::size_t i = 0; i < posts.size(); ++i) {
            for (std::size_t j = i + 1; j < posts.size(); ++j) {
                check.worst_overlap = std::max(check.worst_overlap, pair_overlap(posts[i], posts[j], norms[i], norms[j]));
            }
        }
    }
    check.preserving = check.worst_overlap < tol;
    return check;
}

bool RunReport::completeness_ok() const {
    return std::all_of(node_checks.begin(), node_checks.end(), [](const NodeCheck &c) { return c.completeness_ok; });
}

bool RunReport::orthogonality_ok() const {
    return std::all_of(node_checks.begin(), node_checks.end(), [](const NodeCheck &c) { return c.orthogonality_ok; });
}

bool RunReport::probability_ok(double tol) const {
    return std::all_of(per_state.begin(), per_state.end(),
                       [&](const CandidateRun &c) { return std::abs(c.total_probability - 1.0) < tol; });
}

double RunReport::mean_residual() const {
    if (per_state.empty()) {
        return 0.0;
    }
    double s = 0.0;
    for (const auto &c : per_state) {
        s += c.residual_mass;
    }
    return s / static_cast<double>(per_state.size());
}

double RunReport::mean_success_through(std::string_view label) const {
    if (per_state.empty()) {
        return 0.0;
    }
    double s = 0.0;
    for (const auto &c : per_state) {
        for (const auto &b : c.branches) {
            if (b.leaf != LeafKind::Residual && std::find(b.path.begin(), b.path.end(), label) != b.path.end()) {
                s += b.probability;
            }
        }
    }
    return s / static_cast<double>(per_state.size());
}

double RunReport::worst_overlap() const {
    double w = 0.0;
    for (const auto &c : node_checks) {
        w = std::max(w, c.worst_overlap);
    }
    return w;
}

SystemLayout layout_for_resource(const StateVector &resource) {
    int dims[3] = {1, 1, 1};
    for (const auto &s : resource.layout.slots()) {
        if (s.label < 'a' || s.label > 'c') {
            throw LayoutError(std::string("resource slot '") + s.label + "' is not an ancilla (a, b, c)");
        }
        dims[s.label - 'a'] = s.dim;
    }
    return SystemLayout::standard(dims[0], dims[1], dims[2]);
}

namespace {

struct Survivor {
    int candidate;
    StateVector state;
};

class Executor {
  public:
    Executor(const SystemLayout &layout, const RunOptions &options, RunReport &report, std::map<int, CandidateRun *> runs)
        : layout_(layout), options_(options), report_(report), runs_(std::move(runs)) {
    }

    void visit(const ProtocolNode &node, std::vector<std::string> &path, const std::vector<Survivor> &survivors) {
        if (const auto *leaf = std::get_if<Leaf>(&node.content)) {
            visit_leaf(*leaf, path, survivors);
        } else {
            visit_measure(std::get<MeasureNode>(node.content), path, survivors);
        }
    }

  private:
    void visit_measure(const MeasureNode &node, std::vector<std::string> &path,
                       const std::vector<Survivor> &survivors) {
        const auto &m = node.measurement;
        NodeCheck check;
        check.path = path;
        check.party = m.party;
        check.completeness_residual = m.completeness_residual();
        check.completeness_ok = check.completeness_residual < options_.tol;

        auto ops = embed_all(m, layout_, &splits_);
        std::vector<double> norms;
        for (const auto &s : survivors) {
            norms.push_back(s.state.norm());
        }
        std::vector<std::vector<Survivor>> next(ops.size());
        for (std::size_t k = 0; k < ops.size(); ++k) {
            std::vector<Survivor> all;
            for (const auto &s : survivors) {
                all.push_back({s.candidate, ops[k].apply(s.state)});
            }
            for (std::size_t i = 0; i < all.size(); ++i) {
                for (std::size_t j = i + 1; j < all.size(); ++j) {
                    check.worst_overlap = std::max(
                        check.worst_overlap,
                        pair_overlap(all[i].state.amplitudes, all[j].state.amplitudes, norms[i], norms[j]));
                }
            }
            for (auto &s : all) {
                if (s.state.amplitudes.squaredNorm() > options_.survivor_floor) {
                    next[k].push_back(std::move(s));
                }
            }
        }
        check.orthogonality_ok = check.worst_overlap < options_.tol;
        report_.node_checks.push_back(std::move(check));

        for (std::size_t k = 0; k < ops.size(); ++k) {
            path.push_back(std::string(1, m.party) + ":" + m.labels[k]);
            visit(*node.branches[k], path, next[k]);
            path.pop_back();
        }
    }

    void visit_leaf(const Leaf &leaf, const std::vector<std::string> &path, const std::vector<Survivor> &survivors) {
        for (const auto &s : survivors) {
            double p = s.state.amplitudes.squaredNorm();
            CandidateRun &run = *runs_.at(s.candidate);
            run.branches.push_back({path, p, leaf.kind});
            if (leaf.kind == LeafKind::Residual) {
                run.residual_mass += p;
            }
            if (options_.keep_leaf_states) {
                report_.leaf_states.push_back({s.candidate, path, leaf.kind, s.state});
            }
        }
        if (leaf.kind == LeafKind::Residual) {
            return;
        }
        for (const auto &s : survivors) {
            if (std::find(leaf.candidates.begin(), leaf.candidates.end(), s.candidate) == leaf.candidates.end()) {
                report_.leaf_violations.push_back(std::string(to_string(leaf.kind)) + " leaf at " + join_path(path) +
                                                  " reached by unexpected candidate " + std::to_string(s.candidate));
            }
        }
        if (leaf.kind == LeafKind::WalgatePair && survivors.size() == 2) {
            const auto &x = survivors[0].state;
            const auto &y = survivors[1].state;
            double ov = pair_overlap(x.amplitudes, y.amplitudes, x.norm(), y.norm());
            if (ov >= options_.tol) {
                report_.leaf_violations.push_back("walgate_pair leaf at " + join_path(path) +
                                                  " holds non-orthogonal survivors (overlap " + std::to_string(ov) +
                                                  ")");
            }
        }
    }

    const SystemLayout &layout_;
    const RunOptions &options_;
    RunReport &report_;
    std::map<int, CandidateRun *> runs_;
    SplitCache splits_;
};

}  // namespace

RunReport run_protocol(const ProtocolTree &tree, const StateSet &set, const StateVector &resource,
                       const RunOptions &options) {
    if (!tree.root) {
        throw std::invalid_argument("protocol tree has no root");
    }
    SystemLayout layout = layout_for_resource(resource);
    SystemLayout ancillas{{'a', layout.dim_of('a')}, {'b', layout.dim_of('b')}, {'c', layout.dim_of('c')}};
    StateVector padded = pad_to_layout(resource, ancillas);

    RunReport report;
    report.protocol = tree.name;
    report.r = options.r;
    report.per_state.reserve(set.size());
    std::vector<Survivor> initial;
    for (const auto &ps : set.states) {
        report.per_state.push_back({ps.index, {}, 0.0, 0.0});
        initial.push_back({ps.index, tensor({ps.assembled, padded})});
    }
    std::map<int, CandidateRun *> runs;
    for (auto &c : report.per_state) {
        if (!runs.emplace(c.index, &c).second) {
            throw std::invalid_argument("duplicate candidate index " + std::to_string(c.index));
        }
    }

    Executor exec(layout, options, report, runs);
    std::vector<std::string> path;
    exec.visit(*tree.root, path, initial);

    for (auto &c : report.per_state) {
        c.total_probability = 0.0;
        for (const auto &b : c.branches) {
            c.total_probability += b.probability;
        }
    }
    return report;
}

OPMConstraintReport opm_triviality_check(const StateSet &set, char party, double tol) {
    if (!is_party(party)) {
        throw std::invalid_argument(std::string("unknown party '") + party + "'");
    }
    const std::size_t focus = static_cast<std::size_t>(party - 'A');
    const int d = kPartyDim;

    // Real basis of Hermitian d x d matrices: diagonal units, then for k < l
    // the symmetric and antisymmetric off-diagonal pairs.
    std::vector<CMatrix> herm_basis;
    for (int k = 0; k < d; ++k) {
        CMatrix e = CMatrix::Zero(d, d);
        e(k, k) = 1.0;
        herm_basis.push_back(e);
    }
    for (int k = 0; k < d; ++k) {
        for (int l = k + 1; l < d; ++l) {
            CMatrix s = CMatrix::Zero(d, d);
            s(k, l) = 1.0;
            s(l, k) = 1.0;
            herm_basis.push_back(s);
            CMatrix a = CMatrix::Zero(d, d);
            a(k, l) = cplx(0.0, -1.0);
            a(l, k) = cplx(0.0, 1.0);
            herm_basis.push_back(a);
        }
    }
    const auto params = static_cast<Eigen::Index>(herm_basis.size());

    std::vector<Eigen::RowVectorXd> rows;
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            const auto &fi = set.states[i].factors;
            const auto &fj = set.states[j].factors;
            cplx complement = 1.0;
            for (std::size_t q = 0; q < 3; ++q) {
                if (q != focus) {
                    complement *= fi[q].dot(fj[q]);
                }
            }
            if (std::abs(complement) < tol) {
                continue;
            }
            Eigen::RowVectorXd re(params);
            Eigen::RowVectorXd im(params);
            for (Eigen::Index m = 0; m < params; ++m) {
                cplx v = fi[focus].dot(herm_basis[static_cast<std::size_t>(m)] * fj[focus]);
                re[m] = v.real();
                im[m] = v.imag();
            }
            rows.push_back(re);
            rows.push_back(im);
        }
    }

    OPMConstraintReport report;
    report.party = party;
    report.constraints = static_cast<int>(rows.size());
    if (rows.empty()) {
        report.solution_dim = static_cast<int>(params);
        report.trivial_only = false;
        return report;
    }
    Eigen::MatrixXd a(static_cast<Eigen::Index>(rows.size()), params);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        a.row(static_cast<Eigen::Index>(k)) = rows[k];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const auto &sv = svd.singularValues();
    double threshold = tol * std::max(1.0, sv.size() ? sv[0] : 0.0);
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv[k] > threshold) {
            ++rank;
        }
    }
    report.solution_dim = static_cast<int>(params - rank);

    Eigen::VectorXd identity = Eigen::VectorXd::Zero(params);
    identity.head(d).setOnes();
    bool identity_solves = (a * identity).cwiseAbs().maxCoeff() < tol;
    report.trivial_only = report.solution_dim == 1 && identity_solves;
    return report;
}

}  // namespace loccsim
