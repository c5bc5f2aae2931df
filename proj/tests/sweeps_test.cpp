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

#include "loccsim/sweeps.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

using namespace loccsim;

namespace {

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        out.push_back(cell);
    }
    return out;
}

std::filesystem::path temp_file(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("loccsim_sweeps_" + name);
}

}  // namespace

TEST(r_grid, inclusive_and_validated) {
    auto g = r_grid(0.1, 1.0, 9);
    ASSERT_EQ(g.size(), 10u);
    EXPECT_EQ(g.front(), 0.1);
    EXPECT_EQ(g.back(), 1.0);
    EXPECT_THROW(r_grid(0.0, 1.0, 10), std::invalid_argument);
    EXPECT_THROW(r_grid(0.5, 0.4, 10), std::invalid_argument);
    EXPECT_THROW(r_grid(0.5, 1.2, 10), std::invalid_argument);
    EXPECT_THROW(r_grid(0.1, 1.0, 1), std::invalid_argument);
}

TEST(sweep, bell_like_reproduction) {
    auto records = sweep(Family::BellLike, 0.02, 1.0, 50);
    ASSERT_EQ(records.size(), 51u);
    for (const auto &rec : records) {
        double r4 = std::pow(rec.r, 4);
        EXPECT_NEAR(rec.p3, (1 - r4) / (1 + r4), 1e-12);
        EXPECT_NEAR(rec.c_ab, 2 * rec.r * rec.r / (1 + r4), 1e-9);
        EXPECT_NEAR(rec.p1 + rec.p2 + rec.p3, 1.0, 1e-10);
        EXPECT_EQ(rec.c_ac, 0.0);
        EXPECT_EQ(rec.tangle, 0.0);
        EXPECT_EQ(rec.case_label, "n/a");
    }
    EXPECT_NEAR(records.back().p3, 0.0, 1e-12);
    EXPECT_NEAR(records.back().c_ab, 1.0, 1e-9);
}

TEST(sweep, three_qubit_families_match_their_forms) {
    for (Family f : {Family::CaseII, Family::CaseIII}) {
        for (const auto &rec : sweep(f, 0.05, 1.0, 19)) {
            double r4 = std::pow(rec.r, 4);
            double expected_p3 = f == Family::CaseII ? simulated_residual_theorem2(rec.r) : simulated_residual_theorem3(rec.r);
            EXPECT_NEAR(rec.p3, expected_p3, 1e-12);
            EXPECT_NEAR(rec.p1 + rec.p2 + rec.p3, 1.0, 1e-10);
            double c = (f == Family::CaseII ? std::sqrt(2.0) : 1.0) * rec.r * rec.r / (1 + r4);
            EXPECT_NEAR(rec.c_ab, c, 1e-9);
            double tau = (f == Family::CaseII ? 2.0 : 1.0) * r4 / ((1 + r4) * (1 + r4));
            EXPECT_NEAR(rec.tangle, tau, 1e-9);
            EXPECT_EQ(rec.case_label, std::string(to_string(f)));
        }
    }
}

TEST(pe_vs_measure, zero_threshold_measure_values) {
    // Measure coordinates at the zero-threshold radii of the piecewise forms.
    std::vector<double> r2{std::pow(0.5, 0.25)};
    auto c2 = pe_vs_measure(Family::CaseII, Measure::ConcurrenceAB, r2);
    EXPECT_NEAR(c2[0].x, 2.0 / 3.0, 1e-9);
    std::vector<double> r3{std::sqrt(0.5)};
    auto c3 = pe_vs_measure(Family::CaseIII, Measure::ConcurrenceAB, r3);
    EXPECT_NEAR(c3[0].x, 0.4, 1e-9);
    auto t3 = pe_vs_measure(Family::CaseIII, Measure::Tangle, r3);
    EXPECT_NEAR(t3[0].x, 4.0 / 25.0, 1e-9);
    EXPECT_EQ(t3[0].measure, Measure::Tangle);
}

TEST(pe_vs_measure, case_comparison_at_fixed_concurrence) {
    double x = 0.3;
    double p2 = simulated_residual(Family::CaseII, invert_measure(Family::CaseII, Measure::ConcurrenceAB, x));
    double p3 = simulated_residual(Family::CaseIII, invert_measure(Family::CaseIII, Measure::ConcurrenceAB, x));
    // With the filter CaseIII pays for, the simulated CaseIII curve sits above CaseII.
    EXPECT_GT(p3, p2);
    auto pw2 = piecewise_residual_theorem2(invert_measure(Family::CaseII, Measure::ConcurrenceAB, x));
    auto pw3 = piecewise_residual_theorem3(invert_measure(Family::CaseIII, Measure::ConcurrenceAB, x));
    EXPECT_LT(pw3, pw2);
}

TEST(invert_measure, round_trip) {
    for (Family f : {Family::BellLike, Family::CaseII, Family::CaseIII}) {
        for (double r : {0.1, 0.45, 0.8, 1.0}) {
            double x = measure_value(measure_resource(make_resource(f, r)), Measure::ConcurrenceAB);
            EXPECT_NEAR(invert_measure(f, Measure::ConcurrenceAB, x), r, 1e-7) << to_string(f);
        }
    }
    EXPECT_THROW(invert_measure(Family::CaseIII, Measure::ConcurrenceAB, 0.6), std::domain_error);
}

TEST(csv, sweep_columns_and_round_trip) {
    auto records = sweep(Family::CaseII, 0.1, 1.0, 4);
    std::ostringstream out;
    write_sweep_csv(out, records);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "family,r,P1,P2,P3,C_AB,C_AC,C_BC,tangle,case");
    for (const auto &rec : records) {
        ASSERT_TRUE(std::getline(in, line));
        auto cells = split(line);
        ASSERT_EQ(cells.size(), 10u);
        EXPECT_EQ(cells[0], "CaseII");
        EXPECT_EQ(std::stod(cells[1]), rec.r);
        EXPECT_EQ(std::stod(cells[4]), rec.p3);
        EXPECT_EQ(std::stod(cells[5]), rec.c_ab);
        EXPECT_EQ(std::stod(cells[8]), rec.tangle);
        EXPECT_EQ(cells[9], "CaseII");
    }
    EXPECT_FALSE(std::getline(in, line));
}

TEST(csv, empty_and_curve) {
    std::ostringstream empty;
    write_sweep_csv(empty, std::vector<SweepRecord>{});
    EXPECT_EQ(empty.str(), "family,r,P1,P2,P3,C_AB,C_AC,C_BC,tangle,case\n");
    std::vector<CurvePoint> pts{{Family::CaseIII, Measure::Tangle, 0.5, 0.04, 0.9}};
    std::ostringstream curve;
    write_curve_csv(curve, pts);
    EXPECT_EQ(curve.str(), "family,measure,x,y\nCaseIII,tangle,0.040000000000000001,0.90000000000000002\n");
}

TEST(csv, file_output_and_failure) {
    auto path = temp_file("fig.csv");
    auto records = sweep(Family::BellLike, 0.5, 1.0, 2);
    emit_csv(path.string(), records);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "family,r,P1,P2,P3,C_AB,C_AC,C_BC,tangle,case");
    std::filesystem::remove(path);
    EXPECT_THROW(emit_csv("/nonexistent-dir/x.csv", records), std::runtime_error);
}

TEST(format_number, seventeen_digits_round_trip) {
    for (double v : {0.1, 1.0 / 3.0, 2e-300, 0.0, -1.25}) {
        EXPECT_EQ(std::stod(format_number(v)), v);
    }
    EXPECT_EQ(format_number(1.0), "1");
}

TEST(crossover, piecewise_forms_cross_where_expected) {
    auto pw = [](Family f, double r) {
        return f == Family::CaseII ? piecewise_residual_theorem2(r) : piecewise_residual_theorem3(r);
    };
    auto c = locate_crossover(Measure::ConcurrenceAB, 200, pw);
    ASSERT_TRUE(c.found);
    EXPECT_NEAR(c.x, 0.495, 1e-3);
    EXPECT_TRUE(c.case3_below);
    auto t = locate_crossover(Measure::Tangle, 200, pw);
    ASSERT_TRUE(t.found);
    EXPECT_NEAR(t.x, 0.245, 1e-3);
}

TEST(crossover, simulated_curves_do_not_cross) {
    auto c = locate_crossover(Measure::ConcurrenceAB, 40);
    EXPECT_FALSE(c.found);
    EXPECT_EQ(c.sign_below, -1);
    EXPECT_FALSE(c.case3_below);
    EXPECT_NEAR(c.x_max, 0.5, 1e-9);
}

TEST(crossover, exact_zero_on_grid_is_reported) {
    auto fn = [](Family f, double r) { return f == Family::CaseII ? r : 0.5; };
    auto c = locate_crossover(Measure::ConcurrenceAB, 10, fn);
    ASSERT_TRUE(c.found);
    EXPECT_NEAR(invert_measure(Family::CaseII, Measure::ConcurrenceAB, c.x), 0.5, 1e-9);
}

TEST(inversion_diagnostic, explicit_forms) {
    // The tangle expression for CaseII traces the piecewise form; the
    // concurrence expressions do not.
    auto t2 = inversion_diagnostic(Family::CaseII, Measure::Tangle, 100);
    EXPECT_EQ(t2.non_finite, 0);
    EXPECT_LT(t2.max_deviation, 1e-6);
    auto c2 = inversion_diagnostic(Family::CaseII, Measure::ConcurrenceAB, 100);
    EXPECT_GT(c2.non_finite + (c2.max_deviation > 1e-3 ? 1 : 0), 0);
    EXPECT_THROW(inversion_diagnostic(Family::BellLike, Measure::Tangle, 10), std::invalid_argument);
    EXPECT_THROW(explicit_residual(Family::CaseI, Measure::Tangle, 0.1), std::invalid_argument);
}

TEST(measures, names) {
    EXPECT_EQ(parse_measure("tangle"), Measure::Tangle);
    EXPECT_EQ(parse_measure("concurrence_AB"), Measure::ConcurrenceAB);
    EXPECT_THROW(parse_measure("entropy"), std::invalid_argument);
}
