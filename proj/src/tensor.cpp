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

#include "loccsim/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace loccsim {

SystemLayout::SystemLayout(std::vector<Slot> slots) : slots_(std::move(slots)) {
    std::set<char> seen;
    for (const auto &s : slots_) {
        if (s.dim < 1) {
            throw LayoutError(std::string("slot '") + s.label + "' has non-positive dimension");
        }
        if (!seen.insert(s.label).second) {
            throw LayoutError(std::string("duplicate slot label '") + s.label + "'");
        }
    }
}

SystemLayout SystemLayout::standard(int dim_a, int dim_b, int dim_c) {
    return SystemLayout{{'A', 3}, {'B', 3}, {'C', 3}, {'a', dim_a}, {'b', dim_b}, {'c', dim_c}};
}

std::size_t SystemLayout::total_dim() const {
    std::size_t d = 1;
    for (const auto &s : slots_) {
        d *= static_cast<std::size_t>(s.dim);
    }
    return d;
}

bool SystemLayout::has(char label) const {
    return std::any_of(slots_.begin(), slots_.end(), [&](const Slot &s) { return s.label == label; });
}

std::size_t SystemLayout::position(char label) const {
    for (std::size_t k = 0; k < slots_.size(); ++k) {
        if (slots_[k].label == label) {
            return k;
        }
    }
    throw LayoutError(std::string("no slot labelled '") + label + "' in layout " + describe());
}

int SystemLayout::dim_of(char label) const {
    return slots_[position(label)].dim;
}

std::string SystemLayout::describe() const {
    std::string out = "(";
    for (std::size_t k = 0; k < slots_.size(); ++k) {
        if (k) {
            out += ",";
        }
        out += slots_[k].label;
        out += ":" + std::to_string(slots_[k].dim);
    }
    return out + ")";
}

SlotSplit split_slots(const SystemLayout &layout, std::span<const char> selected) {
    const auto &slots = layout.slots();
    std::vector<int> sel_pos(slots.size(), -1);
    for (std::size_t k = 0; k < selected.size(); ++k) {
        std::size_t p = layout.position(selected[k]);
        if (sel_pos[p] >= 0) {
            throw LayoutError(std::string("slot '") + selected[k] + "' selected twice");
        }
        sel_pos[p] = static_cast<int>(k);
    }

    // Place value of each selected slot within the sub index (listed order).
    std::vector<std::size_t> sub_stride(selected.size(), 1);
    for (std::size_t k = selected.size(); k-- > 1;) {
        sub_stride[k - 1] = sub_stride[k] * static_cast<std::size_t>(layout.dim_of(selected[k]));
    }

    SlotSplit split;
    for (std::size_t k = 0; k < slots.size(); ++k) {
        if (sel_pos[k] >= 0) {
            split.sub_dim *= static_cast<std::size_t>(slots[k].dim);
        } else {
            split.rest_dim *= static_cast<std::size_t>(slots[k].dim);
        }
    }

    std::size_t total = layout.total_dim();
    split.sub.assign(total, 0);
    split.rest.assign(total, 0);
    for (std::size_t i = 0; i < total; ++i) {
        std::size_t rem = i;
        std::size_t rest_stride = 1;
        std::size_t sub = 0;
        std::size_t rest = 0;
        for (std::size_t k = slots.size(); k-- > 0;) {
            auto d = static_cast<std::size_t>(slots[k].dim);
            std::size_t digit = rem % d;
            rem /= d;
            if (sel_pos[k] >= 0) {
                sub += digit * sub_stride[static_cast<std::size_t>(sel_pos[k])];
            } else {
                rest += digit * rest_stride;
                rest_stride *= d;
            }
        }
        split.sub[i] = sub;
        split.rest[i] = rest;
    }
    return split;
}

StateVector::StateVector(SystemLayout l, CVector amps) : layout(std::move(l)), amplitudes(std::move(amps)) {
    if (static_cast<std::size_t>(amplitudes.size()) != layout.total_dim()) {
        throw LayoutError("amplitude count " + std::to_string(amplitudes.size()) + " does not match layout " +
                          layout.describe());
    }
}

bool StateVector::is_normalized(double tol) const {
    return std::abs(norm() - 1.0) < tol;
}

StateVector StateVector::normalized() const {
    double n = norm();
    if (n == 0.0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    return StateVector(layout, amplitudes / n);
}

Operator::Operator(SystemLayout l, CMatrix m) : layout(std::move(l)), matrix(std::move(m)) {
    auto d = static_cast<Eigen::Index>(layout.total_dim());
    if (matrix.rows() != d || matrix.cols() != d) {
        throw LayoutError("operator shape does not match layout " + layout.describe());
    }
}

StateVector Operator::apply(const StateVector &x) const {
    if (!(x.layout == layout)) {
        throw LayoutError("operator layout " + layout.describe() + " differs from state layout " +
                          x.layout.describe());
    }
    return StateVector(layout, matrix * x.amplitudes);
}

DensityMatrix::DensityMatrix(SystemLayout l, CMatrix m) : layout(std::move(l)), matrix(std::move(m)) {
    auto d = static_cast<Eigen::Index>(layout.total_dim());
    if (matrix.rows() != d || matrix.cols() != d) {
        throw LayoutError("density matrix shape does not match layout " + layout.describe());
    }
}

DensityMatrix DensityMatrix::pure(const StateVector &psi) {
    return DensityMatrix(psi.layout, psi.amplitudes * psi.amplitudes.adjoint());
}

bool DensityMatrix::is_hermitian(double tol) const {
    return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff() < tol;
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(matrix, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

CVector basis(int dim, int index) {
    if (index < 0 || index >= dim) {
        throw std::out_of_range("basis index " + std::to_string(index) + " outside dimension " + std::to_string(dim));
    }
    CVector v = CVector::Zero(dim);
    v[index] = 1.0;
    return v;
}

CVector kron(const CVector &x, const CVector &y) {
    CVector out(x.size() * y.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        out.segment(i * y.size(), y.size()) = x[i] * y;
    }
    return out;
}

CMatrix kron(const CMatrix &x, const CMatrix &y) {
    CMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
        }
    }
    return out;
}

CMatrix projector(const CVector &v) {
    CVector u = v.normalized();
    return u * u.adjoint();
}

StateVector tensor(std::span<const StateVector> factors) {
    if (factors.empty()) {
        throw std::invalid_argument("tensor of an empty factor list");
    }
    std::vector<Slot> slots;
    CVector amps = CVector::Ones(1);
    for (const auto &f : factors) {
        slots.insert(slots.end(), f.layout.slots().begin(), f.layout.slots().end());
        amps = kron(amps, f.amplitudes);
    }
    return StateVector(SystemLayout(std::move(slots)), std::move(amps));
}

StateVector tensor(std::initializer_list<StateVector> factors) {
    return tensor(std::span<const StateVector>(factors.begin(), factors.size()));
}

Operator embed_local(const CMatrix &op, const SystemLayout &layout, std::span<const char> target_slots) {
    SlotSplit split = split_slots(layout, target_slots);
    if (op.rows() != op.cols() || static_cast<std::size_t>(op.rows()) != split.sub_dim) {
        throw LayoutError("local operator of size " + std::to_string(op.rows()) + "x" + std::to_string(op.cols()) +
                          " does not match target dimension " + std::to_string(split.sub_dim));
    }
    std::size_t total = layout.total_dim();
    CMatrix full = CMatrix::Zero(static_cast<Eigen::Index>(total), static_cast<Eigen::Index>(total));
    for (std::size_t i = 0; i < total; ++i) {
        for (std::size_t j = 0; j < total; ++j) {
            if (split.rest[i] == split.rest[j]) {
                full(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    op(static_cast<Eigen::Index>(split.sub[i]), static_cast<Eigen::Index>(split.sub[j]));
            }
        }
    }
    return Operator(layout, std::move(full));
}

LocalAction::LocalAction(const CMatrix &op, const SystemLayout &layout, std::span<const char> target_slots)
    : LocalAction(op, layout, split_slots(layout, target_slots)) {
}

LocalAction::LocalAction(const CMatrix &op, const SystemLayout &layout, SlotSplit split)
    : op_(op), layout_(layout), split_(std::move(split)) {
    if (op.rows() != op.cols() || static_cast<std::size_t>(op.rows()) != split_.sub_dim) {
        throw LayoutError("local operator of size " + std::to_string(op.rows()) + "x" + std::to_string(op.cols()) +
                          " does not match target dimension " + std::to_string(split_.sub_dim));
    }
}

StateVector LocalAction::apply(const StateVector &x) const {
    if (!(x.layout == layout_)) {
        throw LayoutError("state layout " + x.layout.describe() + " does not match operator layout " +
                          layout_.describe());
    }
    auto sd = static_cast<Eigen::Index>(split_.sub_dim);
    auto rd = static_cast<Eigen::Index>(split_.rest_dim);
    CMatrix grid(sd, rd);
    std::size_t total = layout_.total_dim();
    for (std::size_t i = 0; i < total; ++i) {
        grid(static_cast<Eigen::Index>(split_.sub[i]), static_cast<Eigen::Index>(split_.rest[i])) =
            x.amplitudes[static_cast<Eigen::Index>(i)];
    }
    CMatrix moved = op_ * grid;
    CVector out(static_cast<Eigen::Index>(total));
    for (std::size_t i = 0; i < total; ++i) {
        out[static_cast<Eigen::Index>(i)] =
            moved(static_cast<Eigen::Index>(split_.sub[i]), static_cast<Eigen::Index>(split_.rest[i]));
    }
    return StateVector(layout_, std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const char> keep) {
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace needs at least one kept slot");
    }
    // Kept slots are reported in declared layout order.
    std::vector<char> ordered(keep.begin(), keep.end());
    std::sort(ordered.begin(), ordered.end(), [&](char x, char y) {
        return rho.layout.position(x) < rho.layout.position(y);
    });
    SlotSplit split = split_slots(rho.layout, ordered);

    std::vector<Slot> kept;
    for (char label : ordered) {
        kept.push_back({label, rho.layout.dim_of(label)});
    }
    auto kd = static_cast<Eigen::Index>(split.sub_dim);
    CMatrix out = CMatrix::Zero(kd, kd);
    std::size_t total = rho.layout.total_dim();
    for (std::size_t i = 0; i < total; ++i) {
        for (std::size_t j = 0; j < total; ++j) {
            if (split.rest[i] == split.rest[j]) {
                out(static_cast<Eigen::Index>(split.sub[i]), static_cast<Eigen::Index>(split.sub[j])) +=
                    rho.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            }
        }
    }
    return DensityMatrix(SystemLayout(std::move(kept)), std::move(out));
}

cplx inner(const StateVector &x, const StateVector &y) {
    if (!(x.layout == y.layout)) {
        throw LayoutError("inner product between layouts " + x.layout.describe() + " and " + y.layout.describe());
    }
    return x.amplitudes.dot(y.amplitudes);
}

StateVector pad_to_layout(const StateVector &psi, const SystemLayout &target) {
    std::vector<char> source_labels;
    for (const auto &s : psi.layout.slots()) {
        if (target.dim_of(s.label) != s.dim) {
            throw LayoutError(std::string("slot '") + s.label + "' changes dimension in " + target.describe());
        }
        source_labels.push_back(s.label);
    }
    for (const auto &s : target.slots()) {
        if (!psi.layout.has(s.label) && s.dim != 1) {
            throw LayoutError(std::string("extra slot '") + s.label + "' must have dimension 1");
        }
    }
    // The selected digits, taken in source order, form the source index.
    SlotSplit split = split_slots(target, source_labels);
    CVector out(static_cast<Eigen::Index>(target.total_dim()));
    for (std::size_t i = 0; i < target.total_dim(); ++i) {
        out[static_cast<Eigen::Index>(i)] = psi.amplitudes[static_cast<Eigen::Index>(split.sub[i])];
    }
    return StateVector(target, std::move(out));
}

}  // namespace loccsim
