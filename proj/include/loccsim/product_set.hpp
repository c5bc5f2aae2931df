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

#ifndef LOCCSIM_PRODUCT_SET_HPP
#define LOCCSIM_PRODUCT_SET_HPP

#include <array>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "loccsim/tensor.hpp"

namespace loccsim {

/// A product state on A x B x C (each dimension 3) kept with its per-party
/// factors, which the orthogonality-preserving-measurement analysis needs.
struct ProductState {
    int index = 0;
    std::array<CVector, 3> factors;
    StateVector assembled;
};

struct StateSet {
    std::vector<ProductState> states;
    SystemLayout layout{{'A', 3}, {'B', 3}, {'C', 3}};

    std::size_t size() const {
        return states.size();
    }
};

struct OrthogonalityCheck {
    bool orthogonal = true;
    double max_overlap = 0.0;
};

constexpr int kPartyDim = 3;

/// Normalizes each factor and assembles |f_A>|f_B>|f_C>.
ProductState make_product_state(int index, const CVector &fa, const CVector &fb, const CVector &fc);

/// The twelve-state set in 3 x 3 x 3:
///   |0>|1>|0+-1>, |0>|2>|0+-2>, |1>|0+-1>|0>, |2>|0+-2>|0>,
///   |0+-1>|0>|1>, |0+-2>|0>|2>  (indices 1..12 in that order).
StateSet build_canonical_set();

/// max_{i != j} |<psi_i|psi_j>| compared against `tol`.
OrthogonalityCheck verify_orthogonality(const StateSet &set, double tol = 1e-10);

/// Gram matrix <psi_i|psi_j>.
CMatrix gram_matrix(const StateSet &set);

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {
    }
    int line() const {
        return line_;
    }

  private:
    int line_;
};

/// Parses the line-oriented state-set format, e.g. `0 | 1 | 0+1`. Each party
/// is a signed sum of basis labels 0..2; `#` starts a comment. Factors are
/// normalized. Throws ParseError with the offending line number.
StateSet parse_state_set(std::istream &in);
StateSet parse_state_set_string(const std::string &text);

}  // namespace loccsim

#endif
