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

#include <cctype>
#include <sstream>

namespace loccsim {

namespace {

CVector ket(int i) {
    return basis(kPartyDim, i);
}

CVector sum(int i, int j, double sign) {
    return ket(i) + sign * ket(j);
}

std::string trim(const std::string &s) {
    auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

// Accepts ASCII '-' and the Unicode minus sign (U+2212, UTF-8 E2 88 92).
CVector parse_party(const std::string &text, int line) {
    std::string s = trim(text);
    if (s.empty()) {
        throw ParseError(line, "empty party term");
    }
    CVector v = CVector::Zero(kPartyDim);
    double sign = 1.0;
    bool expect_label = true;
    bool any = false;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char ch = static_cast<unsigned char>(s[i]);
        if (std::isspace(ch)) {
            ++i;
            continue;
        }
        bool minus = ch == '-' || (ch == 0xE2 && s.compare(i, 3, "\xE2\x88\x92") == 0);
        if (ch == '+' || minus) {
            if (expect_label && any) {
                throw ParseError(line, "dangling sign in '" + s + "'");
            }
            sign = minus ? -1.0 : 1.0;
            expect_label = true;
            i += (ch == 0xE2) ? 3 : 1;
            continue;
        }
        if (std::isdigit(ch)) {
            if (!expect_label) {
                throw ParseError(line, "missing sign between labels in '" + s + "'");
            }
            int label = ch - '0';
            if (label >= kPartyDim) {
                throw ParseError(line, "basis label " + std::to_string(label) + " outside 0.." +
                                           std::to_string(kPartyDim - 1));
            }
            v[label] += sign;
            sign = 1.0;
            expect_label = false;
            any = true;
            ++i;
            continue;
        }
        throw ParseError(line, std::string("unexpected character '") + s[i] + "'");
    }
    if (expect_label) {
        throw ParseError(line, "term '" + s + "' ends without a basis label");
    }
    if (v.norm() == 0.0) {
        throw ParseError(line, "term '" + s + "' is the zero vector");
    }
    return v;
}

}  // namespace

ProductState make_product_state(int index, const CVector &fa, const CVector &fb, const CVector &fc) {
    ProductState p;
    p.index = index;
    p.factors = {fa.normalized(), fb.normalized(), fc.normalized()};
    p.assembled = StateVector(SystemLayout{{'A', 3}, {'B', 3}, {'C', 3}},
                              kron(kron(p.factors[0], p.factors[1]), p.factors[2]));
    return p;
}

StateSet build_canonical_set() {
    StateSet set;
    int index = 1;
    auto add = [&](const CVector &a, const CVector &b, const CVector &c) {
        set.states.push_back(make_product_state(index++, a, b, c));
    };
    for (int k : {1, 2}) {
        add(ket(0), ket(k), sum(0, k, +1));
        add(ket(0), ket(k), sum(0, k, -1));
    }
    for (int k : {1, 2}) {
        add(ket(k), sum(0, k, +1), ket(0));
        add(ket(k), sum(0, k, -1), ket(0));
    }
    for (int k : {1, 2}) {
        add(sum(0, k, +1), ket(0), ket(k));
        add(sum(0, k, -1), ket(0), ket(k));
    }
    return set;
}

CMatrix gram_matrix(const StateSet &set) {
    auto n = static_cast<Eigen::Index>(set.size());
    CMatrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            g(i, j) = inner(set.states[static_cast<std::size_t>(i)].assembled,
                            set.states[static_cast<std::size_t>(j)].assembled);
        }
    }
    return g;
}

OrthogonalityCheck verify_orthogonality(const StateSet &set, double tol) {
    if (set.states.empty()) {
        throw std::invalid_argument("verify_orthogonality on an empty set");
    }
    for (const auto &s : set.states) {
        if (!(s.assembled.layout == set.layout)) {
            throw LayoutError("state " + std::to_string(s.index) + " has layout " + s.assembled.layout.describe());
        }
    }
    OrthogonalityCheck check;
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            check.max_overlap = std::max(check.max_overlap, std::abs(inner(set.states[i].assembled, set.states[j].assembled)));
        }
    }
    check.orthogonal = check.max_overlap < tol;
    return check;
}

StateSet parse_state_set(std::istream &in) {
    StateSet set;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto hash = raw.find('#');
        std::string content = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (content.empty()) {
            continue;
        }
        std::vector<std::string> parts;
        std::stringstream ss(content);
        std::string part;
        while (std::getline(ss, part, '|')) {
            parts.push_back(part);
        }
        if (content.back() == '|') {
            parts.emplace_back();
        }
        if (parts.size() != 3) {
            throw ParseError(line, "expected 3 parties separated by '|', found " + std::to_string(parts.size()));
        }
        CVector a = parse_party(parts[0], line);
        CVector b = parse_party(parts[1], line);
        CVector c = parse_party(parts[2], line);
        set.states.push_back(make_product_state(static_cast<int>(set.states.size()) + 1, a, b, c));
    }
    if (set.states.empty()) {
        throw ParseError(line, "state set is empty");
    }
    return set;
}

StateSet parse_state_set_string(const std::string &text) {
    std::istringstream in(text);
    return parse_state_set(in);
}

}  // namespace loccsim
