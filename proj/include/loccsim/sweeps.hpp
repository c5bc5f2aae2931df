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

#ifndef LOCCSIM_SWEEPS_HPP
#define LOCCSIM_SWEEPS_HPP

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loccsim/protocols.hpp"

namespace loccsim {

struct SweepRecord {
    Family family = Family::BellLike;
    double r = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;
    double c_ab = 0.0;
    double c_ac = 0.0;
    double c_bc = 0.0;
    double tangle = 0.0;
    std::string case_label;
};

struct ResourceMeasures {
    double c_ab = 0.0;
    double c_ac = 0.0;
    double c_bc = 0.0;
    double tangle = 0.0;
    std::string case_label;
};

/// Numeric pair concurrences on the ancilla qubits and the three-tangle with
/// focus a. BellLike resources have no c, so C_AC = C_BC = tangle = 0.
ResourceMeasures measure_resource(const ResourceSpec &resource);

/// steps + 1 evenly spaced points from r_min to r_max inclusive. Throws
/// std::invalid_argument unless 0 < r_min <= r_max <= 1 and steps >= 2.
std::vector<double> r_grid(double r_min, double r_max, int steps);

/// One simulated point: P1 and P2 are the mean success masses through Alice's
/// outcomes M1 and M2, P3 the mean residual mass.
SweepRecord sweep_point(Family family, double r);
std::vector<SweepRecord> sweep(Family family, double r_min, double r_max, int steps);

enum class Measure { ConcurrenceAB, Tangle };
std::string_view to_string(Measure measure);
Measure parse_measure(std::string_view name);

struct CurvePoint {
    Family family = Family::BellLike;
    Measure measure = Measure::ConcurrenceAB;
    double r = 0.0;
    double x = 0.0;
    double y = 0.0;
};

double measure_value(const ResourceMeasures &m, Measure measure);

/// Parametric curve (measure(r), P3(r)) over `grid`.
std::vector<CurvePoint> pe_vs_measure(Family family, Measure measure, std::span<const double> grid);

/// Shortest decimal form that round-trips a double.
std::string format_number(double value);

void write_sweep_csv(std::ostream &out, std::span<const SweepRecord> records);
void write_curve_csv(std::ostream &out, std::span<const CurvePoint> points);
/// Throws std::runtime_error when the file cannot be written.
void emit_csv(const std::string &path, std::span<const SweepRecord> records);
void emit_csv(const std::string &path, std::span<const CurvePoint> points);

/// Inverse of r -> measure(r) for a family, by bisection on (0, 1]. Requires
/// the measure to be increasing in r; throws std::domain_error if `value`
/// lies outside the attainable range.
double invert_measure(Family family, Measure measure, double value);

using ResidualFn = std::function<double(Family, double)>;
/// Mean residual of the family's protocol, simulated.
double simulated_residual(Family family, double r);

struct CrossoverResult {
    Measure measure = Measure::ConcurrenceAB;
    int grid_points = 0;
    double x_min = 0.0;
    double x_max = 0.0;
    bool found = false;
    /// Smallest x at which P3(CaseII) - P3(CaseIII) changes sign.
    double x = 0.0;
    /// Sign of P3(CaseII) - P3(CaseIII) just below the crossover (or over the
    /// whole range when none is found): +1, -1 or 0.
    int sign_below = 0;
    /// CaseIII on-or-below CaseII (within 1e-12) on every grid point below x.
    bool case3_below = false;
};

/// Scans the shared measure range of CaseII and CaseIII on `grid_points`
/// points and refines the first sign change of P3(CaseII) - P3(CaseIII) by
/// bisection.
CrossoverResult locate_crossover(Measure measure, int grid_points, const ResidualFn &residual = simulated_residual);

struct InversionDiagnostic {
    Family family = Family::CaseII;
    Measure measure = Measure::ConcurrenceAB;
    int samples = 0;
    /// Samples where the explicit expression is not a finite number.
    int non_finite = 0;
    double max_deviation = 0.0;
    double worst_x = 0.0;
};

/// Explicit residual-vs-measure expressions for CaseII and CaseIII, written
/// as functions of x = C_AB or tau with r eliminated, transcribed term by
/// term. Returns NaN where a square root goes negative.
double explicit_residual(Family family, Measure measure, double x);

/// Evaluates explicit_residual at x = measure(r) and compares it with the
/// piecewise zero-threshold residual at the same r, for `samples` values of r
/// evenly spread over (0, 1].
InversionDiagnostic inversion_diagnostic(Family family, Measure measure, int samples);

}  // namespace loccsim

#endif
