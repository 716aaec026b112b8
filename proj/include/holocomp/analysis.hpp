// Copyright 2026 The holocomp Authors
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

#pragma once

// Gate fidelity |Tr(U^dagger V)| / Tr(U^dagger U), error sweeps and log-log
// power-law fits of infidelity against error magnitude.

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

#include "holocomp/numeric.hpp"
#include "holocomp/pulse.hpp"
#include "holocomp/qutrit.hpp"
#include "holocomp/twoqubit.hpp"

namespace holocomp::analysis {

/// Infidelities below this are floating-point noise and are left out of fits.
inline constexpr double kInfidelityFloor = 1e-14;

struct FidelityResult {
    double value = 1.0;
    double infidelity = 0.0;
};

inline FidelityResult gate_fidelity(const ComplexMatrix& ideal, const ComplexMatrix& actual) {
    if (!is_square(ideal) || ideal.rows() != actual.rows() || ideal.cols() != actual.cols()) {
        throw InvalidArgument("gate_fidelity: shape mismatch");
    }
    const double norm = (ideal.adjoint() * ideal).trace().real();
    if (!(norm > 0.0)) throw InvalidArgument("gate_fidelity: ideal gate has zero norm");
    const double value = std::abs((ideal.adjoint() * actual).trace()) / norm;
    return {value, 1.0 - value};
}

struct ScalingSample {
    double epsilon = 0.0;
    double infidelity = 0.0;
};

struct ScalingFit {
    std::vector<ScalingSample> samples;  // every evaluated point, in epsilon order
    std::size_t used = 0;                // points above the floor that entered the fit
    double slope = 0.0;
    double intercept = 0.0;  // natural-log intercept: log(1 - F) = intercept + slope log(eps)
    double r_squared = 0.0;
    double slope_stderr = std::numeric_limits<double>::quiet_NaN();
    double slope_ci95 = std::numeric_limits<double>::quiet_NaN();  // half-width of the 95% interval
};

/// Unweighted least squares on (log eps, log infidelity).
inline ScalingFit fit_power_law(std::vector<ScalingSample> samples, double floor = kInfidelityFloor) {
    ScalingFit fit;
    std::vector<double> xs, ys;
    for (const auto& s : samples) {
        if (s.epsilon > 0.0 && s.infidelity >= floor) {
            xs.push_back(std::log(s.epsilon));
            ys.push_back(std::log(s.infidelity));
        }
    }
    fit.samples = std::move(samples);
    fit.used = xs.size();
    if (xs.size() < 2) throw DegenerateFit("fit_power_law: fewer than two samples above the infidelity floor");

    const double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0.0) throw DegenerateFit("fit_power_law: all epsilons identical");
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double sse = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
        sse += r * r;
    }
    fit.r_squared = syy > 0.0 ? 1.0 - sse / syy : 1.0;
    if (xs.size() > 2) {
        fit.slope_stderr = std::sqrt(sse / (n - 2.0) / sxx);
        const boost::math::students_t dist(n - 2.0);
        fit.slope_ci95 = boost::math::quantile(boost::math::complement(dist, 0.025)) * fit.slope_stderr;
    }
    return fit;
}

/// `points` log-spaced values from 10^lo_exp to 10^hi_exp inclusive.
inline std::vector<double> logspace(double lo_exp, double hi_exp, int points) {
    if (points < 1) throw InvalidArgument("logspace: need at least one point");
    std::vector<double> out;
    for (int i = 0; i < points; ++i) {
        const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
        out.push_back(std::pow(10.0, lo_exp + t * (hi_exp - lo_exp)));
    }
    return out;
}

/// 12 points in [1e-3, 10^-1.5].
inline std::vector<double> default_epsilon_grid() { return logspace(-3.0, -1.5, 12); }

enum class GateKind { single, composite2, composite4, twoqubit_single, twoqubit_composite };
enum class ErrorMode { common, differential, single_field, two_qubit };

inline std::string_view to_string(GateKind k) {
    switch (k) {
        case GateKind::single: return "single";
        case GateKind::composite2: return "composite2";
        case GateKind::composite4: return "composite4";
        case GateKind::twoqubit_single: return "twoqubit_single";
        case GateKind::twoqubit_composite: return "twoqubit_composite";
    }
    return "?";
}

inline std::string_view to_string(ErrorMode m) {
    switch (m) {
        case ErrorMode::common: return "common";
        case ErrorMode::differential: return "differential";
        case ErrorMode::single_field: return "single_field";
        case ErrorMode::two_qubit: return "two_qubit";
    }
    return "?";
}

inline GateKind parse_gate_kind(std::string_view s) {
    for (auto k : {GateKind::single, GateKind::composite2, GateKind::composite4, GateKind::twoqubit_single,
                   GateKind::twoqubit_composite}) {
        if (to_string(k) == s) return k;
    }
    throw InvalidArgument("unknown gate kind '" + std::string(s) + "'");
}

inline ErrorMode parse_error_mode(std::string_view s) {
    for (auto m : {ErrorMode::common, ErrorMode::differential, ErrorMode::single_field, ErrorMode::two_qubit}) {
        if (to_string(m) == s) return m;
    }
    throw InvalidArgument("unknown error mode '" + std::string(s) + "'");
}

inline bool is_two_qubit(GateKind k) { return k == GateKind::twoqubit_single || k == GateKind::twoqubit_composite; }

struct SweepSpec {
    GateKind gate_kind = GateKind::composite4;
    double theta = std::numbers::pi / 4;
    double phi = 0.0;
    ErrorMode error_mode = ErrorMode::common;
    std::vector<double> epsilons = default_epsilon_grid();
    twoqubit::ComputationalLabel jk = twoqubit::label_11();
    Envelope envelope = Envelope::square;
    int steps = 16;
};

inline void validate(const SweepSpec& spec) {
    if (spec.epsilons.empty()) throw InvalidArgument("SweepSpec: epsilon list is empty");
    for (std::size_t i = 0; i < spec.epsilons.size(); ++i) {
        if (!(spec.epsilons[i] > 0.0)) throw InvalidArgument("SweepSpec: epsilons must be positive");
        if (!(spec.epsilons[i] < 1.0)) throw InvalidArgument("SweepSpec: epsilons must be < 1");
        if (i > 0 && !(spec.epsilons[i] > spec.epsilons[i - 1])) {
            throw InvalidArgument("SweepSpec: epsilons must be strictly increasing");
        }
    }
    if (is_two_qubit(spec.gate_kind) != (spec.error_mode == ErrorMode::two_qubit)) {
        throw InvalidArgument("SweepSpec: two-qubit gates pair with the two_qubit error mode only");
    }
    if (spec.steps <= 0) throw InvalidArgument("SweepSpec: steps must be positive");
}

inline qutrit::ErrorModel error_model_for(ErrorMode mode, double eps) {
    switch (mode) {
        case ErrorMode::common: return {eps, eps};
        case ErrorMode::differential: return {eps, -eps};
        case ErrorMode::single_field: return {eps, 0.0};
        case ErrorMode::two_qubit: break;
    }
    throw InvalidArgument("error_model_for: two_qubit mode has no one-qubit model");
}

struct GatePair {
    ComplexMatrix ideal;
    ComplexMatrix actual;
};

/// Ideal target and error-affected gate for one sweep point.
inline GatePair sweep_gates(const SweepSpec& spec, double eps) {
    const auto segments = qutrit::default_segments(spec.envelope, spec.steps);
    const qutrit::BrightDarkFrame frame(spec.theta, spec.phi);
    switch (spec.gate_kind) {
        case GateKind::single:
            return {qutrit::elementary_target(frame),
                    qutrit::elementary_gate_with_error(frame, error_model_for(spec.error_mode, eps), segments)};
        case GateKind::composite2:
            return {qutrit::composite_two_target(frame),
                    qutrit::composite_two(frame, error_model_for(spec.error_mode, eps), segments)};
        case GateKind::composite4:
            return {qutrit::logical_rotation_target(spec.theta, spec.phi),
                    qutrit::composite_four(frame, error_model_for(spec.error_mode, eps), segments)};
        case GateKind::twoqubit_single:
            return {twoqubit::twoqubit_elementary_target(spec.jk),
                    twoqubit::twoqubit_elementary(spec.jk, twoqubit::TwoQubitErrorModel{eps}, segments)};
        case GateKind::twoqubit_composite:
            return {twoqubit::twoqubit_composite_target(spec.jk),
                    twoqubit::twoqubit_composite(spec.jk, twoqubit::TwoQubitErrorModel{eps}, segments)};
    }
    throw InvalidArgument("sweep_gates: unknown gate kind");
}

inline double sweep_infidelity(const SweepSpec& spec, double eps) {
    const auto g = sweep_gates(spec, eps);
    return gate_fidelity(g.ideal, g.actual).infidelity;
}

inline ScalingFit run_sweep(const SweepSpec& spec) {
    validate(spec);
    std::vector<ScalingSample> samples;
    samples.reserve(spec.epsilons.size());
    for (double eps : spec.epsilons) samples.push_back({eps, sweep_infidelity(spec, eps)});
    return fit_power_law(std::move(samples));
}

/// infidelity(eps) / infidelity(eps/2): about 2^n for an order-n law.
template <typename Builder>
double order_ratio_test(const ComplexMatrix& ideal, Builder&& build_actual, double eps) {
    if (!(eps > 0.0) || eps > 0.05) throw InvalidArgument("order_ratio_test: eps must lie in (0, 0.05]");
    if (eps < 1e-7) throw DegenerateFit("order_ratio_test: eps below the floating-point floor");
    const double full = gate_fidelity(ideal, build_actual(eps)).infidelity;
    const double half = gate_fidelity(ideal, build_actual(eps / 2)).infidelity;
    if (full < kInfidelityFloor || half < kInfidelityFloor) {
        throw DegenerateFit("order_ratio_test: infidelities are at the floating-point floor");
    }
    return full / half;
}

inline double order_ratio_test(const SweepSpec& spec, double eps) {
    const auto ideal = sweep_gates(spec, eps).ideal;
    return order_ratio_test(ideal, [&](double e) { return sweep_gates(spec, e).actual; }, eps);
}

}  // namespace holocomp::analysis
