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

#include "loccsim/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace loccsim {

namespace {

const CMatrix &sigma_yy() {
    static const CMatrix yy = [] {
        CMatrix sy(2, 2);
        sy << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
        return kron(sy, sy);
    }();
    return yy;
}

}  // namespace

ConcurrenceResult concurrence_mixed(const DensityMatrix &rho, double tol) {
    const auto &slots = rho.layout.slots();
    if (slots.size() != 2 || slots[0].dim != 2 || slots[1].dim != 2) {
        throw LayoutError("concurrence_mixed needs two qubit slots, got " + rho.layout.describe());
    }
    if (!rho.is_hermitian(tol)) {
        throw std::domain_error("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - 1.0) > tol) {
        throw std::domain_error("density matrix trace " + std::to_string(rho.trace()) + " differs from 1");
    }

    CMatrix herm = 0.5 * (rho.matrix + rho.matrix.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(herm);
    const auto &evals = es.eigenvalues();
    if (evals.minCoeff() < -tol) {
        throw std::domain_error("density matrix has eigenvalue " + std::to_string(evals.minCoeff()));
    }

    // Factor rho = W W^dagger, dropping directions at the rounding floor.
    double floor = 1e-13 * std::max(1.0, herm.trace().real());
    std::vector<Eigen::Index> kept;
    for (Eigen::Index k = 0; k < evals.size(); ++k) {
        if (evals[k] > floor) {
            kept.push_back(k);
        }
    }
    ConcurrenceResult result;
    if (kept.empty()) {
        return result;
    }
    CMatrix w(4, static_cast<Eigen::Index>(kept.size()));
    for (std::size_t c = 0; c < kept.size(); ++c) {
        w.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(kept[c]) * std::sqrt(evals[kept[c]]);
    }
    CMatrix x = w.transpose() * sigma_yy() * w;
    Eigen::JacobiSVD<CMatrix> svd(x);
    const auto &sv = svd.singularValues();
    for (Eigen::Index k = 0; k < sv.size() && k < 4; ++k) {
        result.spin_flip_eigs[static_cast<std::size_t>(k)] = sv[k];
    }
    std::sort(result.spin_flip_eigs.begin(), result.spin_flip_eigs.end(), std::greater<>());
    const auto &l = result.spin_flip_eigs;
    result.value = std::max(0.0, l[0] - l[1] - l[2] - l[3]);
    return result;
}

double concurrence_pure_cut(const StateVector &psi, std::span<const char> focus) {
    if (!psi.is_normalized()) {
        throw std::domain_error("concurrence_pure_cut needs a normalized state");
    }
    DensityMatrix marginal = partial_trace(DensityMatrix::pure(psi), focus);
    if (marginal.layout.total_dim() != 2) {
        throw LayoutError("focus marginal " + marginal.layout.describe() + " is not two-dimensional");
    }
    const CMatrix &m = marginal.matrix;
    double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
    return 2.0 * std::sqrt(std::max(0.0, det));
}

TangleResult tangle(const StateVector &psi, char focus) {
    const auto &slots = psi.layout.slots();
    if (slots.size() != 3 || std::any_of(slots.begin(), slots.end(), [](const Slot &s) { return s.dim != 2; })) {
        throw LayoutError("tangle needs three qubit slots, got " + psi.layout.describe());
    }
    psi.layout.position(focus);
    std::vector<char> others;
    for (const auto &s : slots) {
        if (s.label != focus) {
            others.push_back(s.label);
        }
    }

    TangleResult t;
    const char f[] = {focus};
    double c = concurrence_pure_cut(psi, f);
    t.c2_focus_rest = c * c;
    DensityMatrix rho = DensityMatrix::pure(psi);
    for (std::size_t k = 0; k < 2; ++k) {
        const char pair[] = {focus, others[k]};
        double ck = concurrence_mixed(partial_trace(rho, pair)).value;
        t.c2_pairs[k] = ck * ck;
    }
    t.tau = t.c2_focus_rest - t.c2_pairs[0] - t.c2_pairs[1];
    return t;
}

}  // namespace loccsim
