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

#ifndef LOCCSIM_ENTANGLEMENT_HPP
#define LOCCSIM_ENTANGLEMENT_HPP

#include <array>
#include <span>

#include "loccsim/tensor.hpp"

namespace loccsim {

struct ConcurrenceResult {
    double value = 0.0;
    /// Square roots of the eigenvalues of rho (sy x sy) rho* (sy x sy), decreasing.
    std::array<double, 4> spin_flip_eigs{};
};

struct TangleResult {
    double c2_focus_rest = 0.0;
    std::array<double, 2> c2_pairs{};
    double tau = 0.0;
};

/// Wootters concurrence of a two-qubit density matrix.
///
/// The spin-flip eigenvalues are obtained as singular values of
/// W^T (sy x sy) W where rho = W W^dagger. This is algebraically the same
/// spectrum as that of rho * rho~ but stays accurate for rank-deficient
/// marginals, where the direct route loses half the significant digits.
///
/// Throws LayoutError unless rho has exactly two dimension-2 slots and
/// std::domain_error unless rho is Hermitian, unit-trace and PSD within
/// `tol`.
ConcurrenceResult concurrence_mixed(const DensityMatrix &rho, double tol = 1e-10);

/// 2 sqrt(det rho_focus) for a pure state whose focus marginal is a qubit.
double concurrence_pure_cut(const StateVector &psi, std::span<const char> focus);

/// Three-tangle tau = C^2(focus|rest) - C^2(focus,other1) - C^2(focus,other2)
/// for a normalized pure state on three dimension-2 slots. Pair terms use the
/// mixed-state concurrence of the two-qubit marginals, ordered as the other
/// slots appear in the layout.
TangleResult tangle(const StateVector &psi, char focus);

}  // namespace loccsim

#endif
