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

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "loccsim/entanglement.hpp"

namespace loccsim {

namespace {

constexpr std::array<char, 2> kPairAB{'a', 'b'};
constexpr std::array<char, 2> kPairAC{'a', 'c'};
constexpr std::array<char, 2> kPairBC{'b', 'c'};

double pair_concurrence(const StateVector &psi, std::span<const char> pair) {
    return concurrence_mixed(partial_trace(DensityMatrix::pure(psi), pair)).value;
}

void check_three_qubit(Family family) {
    if (family != Family::CaseII && family != Family::CaseIII) {
        throw std::invalid_argument("only CaseII and CaseIII have explicit residual curves");
    }
}

int sign_of(double v) {
    if (v > 0.0) {
        return 1;
    }
    return v < 0.0 ? -1 : 0;
}

}  // namespace

ResourceMeasures measure_resource(const ResourceSpec &resource) {
    ResourceMeasures m;
    const StateVector &psi = resource.realized;
    if (resource.family == Family::BellLike) {
        m.c_ab = concurrence_mixed(DensityMatrix::pure(psi)).value;
        m.case_label = "n/a";
        return m;
    }
    m.c_ab = pair_concurrence(psi, kPairAB);
    m.c_ac = pair_concurrence(psi, kPairAC);
    m.c_bc = pair_concurrence(psi, kPairBC);
    m.tangle = tangle(psi, 'a').tau;
    m.case_label = std::string(to_string(classify_case(family_params(resource.family, resource.r))));
    return m;
}

std::vector<double> r_grid(double r_min, double r_max, int steps) {
    if (!(r_min > 0.0 && r_min <= r_max && r_max <= 1.0)) {
        throw std::invalid_argument("r range must satisfy 0 < r_min <= r_max <= 1");
    }
    if (steps < 2) {
        throw std::invalid_argument("steps must be at least 2");
    }
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(steps) + 1);
    for (int k = 0; k <= steps; ++k) {
        grid.push_back((r_min * (steps - k) + r_max * k) / steps);
    }
    return grid;
}

SweepRecord sweep_point(Family family, double r) {
    ProtocolBundle bundle = protocol_for_family(family, r);
    RunReport report = run_protocol(bundle.tree, build_canonical_set(), bundle.resource.realized, {.r = r});
    if (!report.valid()) {
        throw std::runtime_error(std::string(to_string(family)) + " protocol failed validation at r = " +
                                 format_number(r));
    }
    ResourceMeasures m = measure_resource(bundle.resource);
    SweepRecord rec;
    rec.family = family;
    rec.r = r;
    rec.p1 = report.mean_success_through("A:M1");
    rec.p2 = report.mean_success_through("A:M2");
    rec.p3 = report.mean_residual();
    rec.c_ab = m.c_ab;
    rec.c_ac = m.c_ac;
    rec.c_bc = m.c_bc;
    rec.tangle = m.tangle;
    rec.case_label = m.case_label;
    return rec;
}

std::vector<SweepRecord> sweep(Family family, double r_min, double r_max, int steps) {
    std::vector<SweepRecord> out;
    for (double r : r_grid(r_min, r_max, steps)) {
        out.push_back(sweep_point(family, r));
    }
    return out;
}

std::string_view to_string(Measure measure) {
    return measure == Measure::Tangle ? "tangle" : "concurrence_AB";
}

Measure parse_measure(std::string_view name) {
    if (name == "tangle" || name == "tau") {
        return Measure::Tangle;
    }
    if (name == "concurrence_AB" || name == "C_AB" || name == "concurrence") {
        return Measure::ConcurrenceAB;
    }
    throw std::invalid_argument("unknown measure '" + std::string(name) + "'");
}

double measure_value(const ResourceMeasures &m, Measure measure) {
    return measure == Measure::Tangle ? m.tangle : m.c_ab;
}

std::vector<CurvePoint> pe_vs_measure(Family family, Measure measure, std::span<const double> grid) {
    std::vector<CurvePoint> out;
    for (double r : grid) {
        SweepRecord rec = sweep_point(family, r);
        double x = measure == Measure::Tangle ? rec.tangle : rec.c_ab;
        out.push_back({family, measure, r, x, rec.p3});
    }
    return out;
}

std::string format_number(double value) {
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

void write_sweep_csv(std::ostream &out, std::span<const SweepRecord> records) {
    out << "family,r,P1,P2,P3,C_AB,C_AC,C_BC,tangle,case\n";
    for (const auto &rec : records) {
        out << to_string(rec.family) << ',' << format_number(rec.r) << ',' << format_number(rec.p1) << ','
            << format_number(rec.p2) << ',' << format_number(rec.p3) << ',' << format_number(rec.c_ab) << ','
            << format_number(rec.c_ac) << ',' << format_number(rec.c_bc) << ',' << format_number(rec.tangle) << ','
            << rec.case_label << '\n';
    }
}

void write_curve_csv(std::ostream &out, std::span<const CurvePoint> points) {
    out << "family,measure,x,y\n";
    for (const auto &p : points) {
        out << to_string(p.family) << ',' << to_string(p.measure) << ',' << format_number(p.x) << ','
            << format_number(p.y) << '\n';
    }
}

namespace {

template <typename T, typename Writer>
void emit_to_file(const std::string &path, std::span<const T> rows, Writer writer) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    writer(file, rows);
    file.flush();
    if (!file) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

}  // namespace

void emit_csv(const std::string &path, std::span<const SweepRecord> records) {
    emit_to_file(path, records, write_sweep_csv);
}

void emit_csv(const std::string &path, std::span<const CurvePoint> points) {
    emit_to_file(path, points, write_curve_csv);
}

namespace {

double measure_at(Family family, Measure measure, double r) {
    ResourceSpec resource = make_resource(family, r);
    if (measure == Measure::ConcurrenceAB && family != Family::BellLike) {
        return pair_concurrence(resource.realized, kPairAB);
    }
    return measure_value(measure_resource(resource), measure);
}

}  // namespace

double invert_measure(Family family, Measure measure, double value) {
    auto at = [&](double r) { return measure_at(family, measure, r); };
    double top = at(1.0);
    if (!(value >= 0.0 && value <= top)) {
        throw std::domain_error(std::string(to_string(measure)) + " value " + format_number(value) +
                                " is outside the range of " + std::string(to_string(family)));
    }
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        double mid = 0.5 * (lo + hi);
        if (at(mid) < value) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return hi;
}

double simulated_residual(Family family, double r) {
    ProtocolBundle bundle = protocol_for_family(family, r);
    return run_protocol(bundle.tree, build_canonical_set(), bundle.resource.realized, {.r = r}).mean_residual();
}

CrossoverResult locate_crossover(Measure measure, int grid_points, const ResidualFn &residual) {
    if (grid_points < 2) {
        throw std::invalid_argument("crossover scan needs at least 2 grid points");
    }
    CrossoverResult res;
    res.measure = measure;
    res.grid_points = grid_points;
    auto top = [&](Family f) { return measure_at(f, measure, 1.0); };
    res.x_max = std::min(top(Family::CaseII), top(Family::CaseIII));
    res.x_min = res.x_max / grid_points;

    auto gap = [&](double x) {
        return residual(Family::CaseII, invert_measure(Family::CaseII, measure, x)) -
               residual(Family::CaseIII, invert_measure(Family::CaseIII, measure, x));
    };

    std::vector<double> xs;
    std::vector<double> gs;
    for (int k = 1; k <= grid_points; ++k) {
        double x = k == grid_points ? res.x_max : res.x_max * k / grid_points;
        xs.push_back(x);
        gs.push_back(gap(x));
    }
    res.sign_below = sign_of(gs.front());

    std::size_t hit = xs.size();
    for (std::size_t k = 1; k < xs.size(); ++k) {
        if (sign_of(gs[k]) != sign_of(gs[k - 1])) {
            hit = k;
            break;
        }
    }
    if (hit < xs.size()) {
        res.found = true;
        double lo = xs[hit - 1];
        double hi = xs[hit];
        int s_lo = sign_of(gs[hit - 1]);
        if (s_lo == 0) {
            hi = lo;
        }
        for (int it = 0; it < 100 && hi - lo > 1e-13; ++it) {
            double mid = 0.5 * (lo + hi);
            if (sign_of(gap(mid)) == s_lo) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        res.x = 0.5 * (lo + hi);
    } else {
        res.x = res.x_max;
    }

    res.case3_below = true;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if ((xs[k] < res.x || !res.found) && gs[k] < -1e-12) {
            res.case3_below = false;
        }
    }
    return res;
}

double explicit_residual(Family family, Measure measure, double x) {
    check_three_qubit(family);
    const double c = x;
    const double t = x;
    if (family == Family::CaseII) {
        if (measure == Measure::ConcurrenceAB) {
            if (c <= 2.0 / 3.0) {
                double num = 1.0 - std::pow(1.0 - std::sqrt(1.0 - 2.0 * c), 2) / (c * c);
                double inner = 1.0 + (1.0 - std::sqrt(1.0 - 2.0 * c * c)) / (std::sqrt(2.0) * c);
                return num / (2.0 * (1.0 + inner * inner));
            }
            double q = std::pow(1.0 - std::sqrt(1.0 - 2.0 * c), 2);
            return (1.0 - c * c / q) / (1.0 + 2.0 * c * c / q);
        }
        double s = std::sqrt(1.0 - 2.0 * t);
        if (t <= 4.0 / 9.0) {
            return t / (2.0 * (1.0 - s)) * (1.0 - (2.0 - 2.0 * t - 2.0 * s) / t);
        }
        return (1.0 - t - s) / (1.0 - s) * (1.0 - t / (2.0 - 2.0 * t - 2.0 * s));
    }
    if (measure == Measure::ConcurrenceAB) {
        if (c <= 2.0 / 5.0) {
            double num = 1.0 - std::pow(1.0 - std::sqrt(1.0 - 4.0 * c), 2) / (c * c);
            double inner = 1.0 + (1.0 - std::sqrt(1.0 - 4.0 * c * c)) / (2.0 * c);
            return num / (4.0 * (1.0 + inner * inner));
        }
        double q = std::pow(1.0 - std::sqrt(1.0 - 4.0 * c), 2);
        return (1.0 - c * c / q) / (1.0 + 4.0 * c * c / q);
    }
    double s = std::sqrt(1.0 - 4.0 * t);
    if (t <= 4.0 / 25.0) {
        return t / (2.0 * (1.0 - 2.0 * s)) * (1.0 - (2.0 - 4.0 * t - 4.0 * s) / t);
    }
    return (1.0 - 2.0 * t - 2.0 * s) / (1.0 - 2.0 * s) * (1.0 - t / (2.0 - 4.0 * t - 4.0 * s));
}

InversionDiagnostic inversion_diagnostic(Family family, Measure measure, int samples) {
    check_three_qubit(family);
    if (samples < 1) {
        throw std::invalid_argument("inversion diagnostic needs at least one sample");
    }
    InversionDiagnostic d;
    d.family = family;
    d.measure = measure;
    d.samples = samples;
    for (int k = 1; k <= samples; ++k) {
        double r = static_cast<double>(k) / samples;
        double x = measure_value(measure_resource(make_resource(family, r)), measure);
        double expected =
            family == Family::CaseII ? piecewise_residual_theorem2(r) : piecewise_residual_theorem3(r);
        double got = explicit_residual(family, measure, x);
        if (!std::isfinite(got)) {
            ++d.non_finite;
            continue;
        }
        double dev = std::abs(got - expected);
        if (dev > d.max_deviation) {
            d.max_deviation = dev;
            d.worst_x = x;
        }
    }
    return d;
}

}  // namespace loccsim
