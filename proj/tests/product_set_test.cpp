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

#include "loccsim/product_set.hpp"

#include <cmath>
#include <sstream>

#include "gtest/gtest.h"
#include "generators.hpp"

using namespace loccsim;

namespace {

CVector sum(int i, int j, double sign) {
    return (basis(3, i) + sign * basis(3, j)) / std::sqrt(2.0);
}

/// Schmidt rank across the cut (party | rest) of an assembled state.
int schmidt_rank(const StateVector &psi, int party) {
    CMatrix m(3, 9);
    for (int i = 0; i < 27; ++i) {
        int digits[3] = {i / 9, (i / 3) % 3, i % 3};
        int rest = 0;
        for (int q = 0; q < 3; ++q) {
            if (q != party) {
                rest = rest * 3 + digits[q];
            }
        }
        m(digits[party], rest) = psi.amplitudes[i];
    }
    Eigen::JacobiSVD<CMatrix> svd(m);
    int rank = 0;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
        rank += svd.singularValues()[k] > 1e-12 ? 1 : 0;
    }
    return rank;
}

}  // namespace

TEST(canonical_set, shape_and_order) {
    auto set = build_canonical_set();
    ASSERT_EQ(set.size(), 12u);
    for (std::size_t i = 0; i < set.size(); ++i) {
        EXPECT_EQ(set.states[i].index, static_cast<int>(i) + 1);
        EXPECT_TRUE(set.states[i].assembled.is_normalized(1e-12));
    }
    EXPECT_LT((set.states[0].factors[2] - sum(0, 1, +1)).norm(), 1e-15);
    EXPECT_LT((set.states[7].factors[1] - sum(0, 2, -1)).norm(), 1e-15);
    EXPECT_LT((set.states[10].factors[0] - sum(0, 2, +1)).norm(), 1e-15);
    EXPECT_NEAR(std::abs(inner(set.states[4].assembled, set.states[5].assembled)), 0.0, 1e-15);
}

TEST(canonical_set, gram_is_identity) {
    auto g = gram_matrix(build_canonical_set());
    EXPECT_LT((g - CMatrix::Identity(12, 12)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(canonical_set, every_state_is_fully_product) {
    for (const auto &s : build_canonical_set().states) {
        for (int party = 0; party < 3; ++party) {
            EXPECT_EQ(schmidt_rank(s.assembled, party), 1);
        }
    }
}

TEST(verify_orthogonality, examples) {
    EXPECT_TRUE(verify_orthogonality(build_canonical_set()).orthogonal);
    StateSet pair;
    pair.states.push_back(make_product_state(1, basis(3, 0), basis(3, 0), basis(3, 0)));
    pair.states.push_back(make_product_state(2, basis(3, 0), basis(3, 0), basis(3, 0) + basis(3, 1)));
    auto check = verify_orthogonality(pair);
    EXPECT_FALSE(check.orthogonal);
    EXPECT_NEAR(check.max_overlap, 1 / std::sqrt(2.0), 1e-12);
    StateSet single;
    single.states.push_back(pair.states[0]);
    EXPECT_TRUE(verify_orthogonality(single).orthogonal);
    EXPECT_THROW(verify_orthogonality(StateSet{}), std::invalid_argument);
}

TEST(make_product_state, normalizes_factors) {
    auto s = make_product_state(3, 2.0 * basis(3, 1), basis(3, 0) + basis(3, 2), 5.0 * basis(3, 2));
    EXPECT_TRUE(s.assembled.is_normalized(1e-12));
    EXPECT_NEAR(s.factors[0].norm(), 1.0, 1e-15);
}

TEST(parse_state_set, reproduces_canonical_set) {
    const char *text = R"(# twelve states
0 | 1 | 0+1
0 | 1 | 0-1
0 | 2 | 0+2
0 | 2 | 0-2
1 | 0+1 | 0
1 | 0-1 | 0
2 | 0+2 | 0
2 | 0−2 | 0   # unicode minus
0+1 | 0 | 1

0-1 | 0 | 1
0+2 | 0 | 2
0-2 | 0 | 2
)";
    auto parsed = parse_state_set_string(text);
    auto canonical = build_canonical_set();
    ASSERT_EQ(parsed.size(), canonical.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        EXPECT_EQ(parsed.states[i].index, static_cast<int>(i) + 1);
        EXPECT_LT((parsed.states[i].assembled.amplitudes - canonical.states[i].assembled.amplitudes).norm(), 1e-15);
    }
}

TEST(parse_state_set, error_lines) {
    auto line_of = [](const std::string &text) {
        try {
            parse_state_set_string(text);
        } catch (const ParseError &e) {
            return e.line();
        }
        return -1;
    };
    EXPECT_EQ(line_of("0 | 1 | 0\n0 | | 1\n"), 2);
    EXPECT_EQ(line_of("0 | 1\n"), 1);
    EXPECT_EQ(line_of("# c\n0 | 1 | 3\n"), 2);
    EXPECT_EQ(line_of("0 | 1 | 0 | 1\n"), 1);
    EXPECT_EQ(line_of("0 | 1 | x\n"), 1);
    EXPECT_EQ(line_of("0 | 1 | 0-0\n"), 1);
    EXPECT_EQ(line_of("0 | 1 | 0+\n"), 1);
    EXPECT_THROW(parse_state_set_string("# only comments\n\n"), ParseError);
}

TEST(parse_state_set, stream_overload) {
    std::istringstream in("0 | 0 | 0\n1 | 1 | 1\n");
    auto set = parse_state_set(in);
    EXPECT_EQ(set.size(), 2u);
    EXPECT_TRUE(verify_orthogonality(set).orthogonal);
}
