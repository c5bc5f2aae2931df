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

#ifndef LOCCSIM_TENSOR_HPP
#define LOCCSIM_TENSOR_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace loccsim {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Tolerances used by assertions and algebraic identity checks.
struct Tolerances {
    double assertion = 1e-10;
    double algebraic = 1e-12;
};

/// Raised when slot layouts are incompatible (duplicate labels, dimension
/// mismatch, unknown slot).
class LayoutError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct Slot {
    char label;
    int dim;

    bool operator==(const Slot &) const = default;
};

/// Ordered list of labelled subsystems. Amplitudes are flattened mixed-radix,
/// big-endian: the first slot is the most significant digit.
class SystemLayout {
  public:
    SystemLayout() = default;
    explicit SystemLayout(std::vector<Slot> slots);
    SystemLayout(std::initializer_list<Slot> slots) : SystemLayout(std::vector<Slot>(slots)) {
    }

    /// Canonical A,B,C (dim 3) followed by ancillas a,b,c. An absent ancilla
    /// has dimension 1.
    static SystemLayout standard(int dim_a, int dim_b, int dim_c);

    const std::vector<Slot> &slots() const {
        return slots_;
    }
    std::size_t size() const {
        return slots_.size();
    }
    std::size_t total_dim() const;
    bool has(char label) const;
    /// Position of `label` in the slot list; throws LayoutError if absent.
    std::size_t position(char label) const;
    int dim_of(char label) const;
    std::string describe() const;

    bool operator==(const SystemLayout &) const = default;

  private:
    std::vector<Slot> slots_;
};

/// Index map used to relate a global basis index to the digits of a subset of
/// slots. `sub[i]` is the index restricted to the selected slots, with digits
/// taken in the order `selected` lists them; `rest[i]` is the index restricted
/// to the complement in declared slot order.
struct SlotSplit {
    std::vector<std::size_t> sub;
    std::vector<std::size_t> rest;
    std::size_t sub_dim = 1;
    std::size_t rest_dim = 1;
};
SlotSplit split_slots(const SystemLayout &layout, std::span<const char> selected);

struct StateVector {
    SystemLayout layout;
    CVector amplitudes;

    StateVector() = default;
    StateVector(SystemLayout l, CVector amps);

    double norm() const {
        return amplitudes.norm();
    }
    bool is_normalized(double tol = 1e-10) const;
    StateVector normalized() const;
};

struct Operator {
    SystemLayout layout;
    CMatrix matrix;

    Operator() = default;
    Operator(SystemLayout l, CMatrix m);

    StateVector apply(const StateVector &x) const;
};

struct DensityMatrix {
    SystemLayout layout;
    CMatrix matrix;

    DensityMatrix() = default;
    DensityMatrix(SystemLayout l, CMatrix m);

    static DensityMatrix pure(const StateVector &psi);

    double trace() const {
        return matrix.trace().real();
    }
    bool is_hermitian(double tol = 1e-10) const;
    /// Smallest eigenvalue; requires Hermiticity.
    double min_eigenvalue() const;
};

/// Basis ket |index> in dimension `dim`.
CVector basis(int dim, int index);
/// Kronecker product of two amplitude vectors (left factor most significant).
CVector kron(const CVector &x, const CVector &y);
CMatrix kron(const CMatrix &x, const CMatrix &y);
/// Rank-one projector |v><v| onto the normalized direction of v.
CMatrix projector(const CVector &v);

StateVector tensor(std::span<const StateVector> factors);
StateVector tensor(std::initializer_list<StateVector> factors);

/// Embeds `op`, which acts on `target_slots` in the listed order, into the
/// full layout with identity on every other slot.
Operator embed_local(const CMatrix &op, const SystemLayout &layout, std::span<const char> target_slots);

/// Local operator applied by reshaping the state into (target, rest) form, at
/// cost O(D * d) instead of the O(D^2) of an embedded matrix.
class LocalAction {
  public:
    LocalAction(const CMatrix &op, const SystemLayout &layout, std::span<const char> target_slots);
    /// Reuses a split already computed for `layout` and the target slots.
    LocalAction(const CMatrix &op, const SystemLayout &layout, SlotSplit split);

    const SystemLayout &layout() const {
        return layout_;
    }
    StateVector apply(const StateVector &x) const;

  private:
    CMatrix op_;
    SystemLayout layout_;
    SlotSplit split_;
};

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const char> keep);

/// <x|y>, conjugate-linear in x.
cplx inner(const StateVector &x, const StateVector &y);

/// Expresses `psi` on `target`, which must contain every slot of `psi` with
/// the same dimension (in any order) plus any number of dimension-1 slots.
StateVector pad_to_layout(const StateVector &psi, const SystemLayout &target);

}  // namespace loccsim

#endif
