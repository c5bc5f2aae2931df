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

// Seeded generators for the property tests.

#ifndef LOCCSIM_TESTS_GENERATORS_HPP
#define LOCCSIM_TESTS_GENERATORS_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "loccsim/ghz.hpp"
#include "loccsim/tensor.hpp"

namespace loccsim::testing {

class Gen {
  public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {
    }

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }
    int integer(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }
    double normal() {
        return std::normal_distribution<double>(0.0, 1.0)(rng_);
    }

    CVector vector(int dim) {
        CVector v(dim);
        for (int i = 0; i < dim; ++i) {
            v[i] = cplx(normal(), normal());
        }
        return v;
    }
    CVector unit_vector(int dim) {
        return vector(dim).normalized();
    }
    CMatrix matrix(int rows, int cols) {
        CMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                m(i, j) = cplx(normal(), normal());
            }
        }
        return m;
    }
    /// Haar-ish unitary from the QR factor of a Gaussian matrix.
    CMatrix unitary(int dim) {
        Eigen::HouseholderQR<CMatrix> qr(matrix(dim, dim));
        return qr.householderQ();
    }
    /// Random density matrix of the given rank.
    CMatrix density(int dim, int rank) {
        CMatrix w = matrix(dim, rank);
        CMatrix rho = w * w.adjoint();
        return rho / rho.trace();
    }
    StateVector state(const SystemLayout &layout) {
        return StateVector(layout, unit_vector(static_cast<int>(layout.total_dim())));
    }
    /// Angles in (0, pi/2], sometimes exactly pi/2 so all cases are hit.
    double angle() {
        if (integer(0, 3) == 0) {
            return std::numbers::pi / 2;
        }
        return uniform(1e-3, std::numbers::pi / 2);
    }
    double r() {
        return integer(0, 5) == 0 ? 1.0 : uniform(1e-2, 1.0);
    }
    GhzParams ghz() {
        return {angle(), angle(), angle(), r()};
    }

  private:
    std::mt19937_64 rng_;
};

inline std::vector<double> unit_grid(int n) {
    std::vector<double> g;
    for (int k = 1; k <= n; ++k) {
        g.push_back(static_cast<double>(k) / n);
    }
    return g;
}

inline std::vector<double> angle_grid(int n) {
    std::vector<double> g;
    for (int k = 1; k <= n; ++k) {
        g.push_back(std::numbers::pi / 2 * k / n);
    }
    return g;
}

}  // namespace loccsim::testing

#endif
