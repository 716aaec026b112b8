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

// One-qubit holonomic gates on a three-level system {|0>, |1>, |e>}.
//
// The drive couples both computational levels to the ancilla |e> with a common
// envelope; in the bright/dark frame only |b> couples to |e>, so the dark state
// is a spectator. Two half-loops (phase pi/2, then 0) of area pi/2 each close a
// loop in G(3;2) and yield U = -i|e><e| + i|b><b| + |d><d|.

#include <array>
#include <cmath>
#include <numbers>
#include <optional>

#include "holocomp/numeric.hpp"
#include "holocomp/pulse.hpp"

namespace holocomp::qutrit {

inline constexpr Eigen::Index kDim = 3;
inline constexpr Eigen::Index kZero = 0;
inline constexpr Eigen::Index kOne = 1;
inline constexpr Eigen::Index kExcited = 2;

/// Ordered basis (|0>, |1>, |e>).
struct QutritBasis {
    ComplexVector zero = basis_vector(kDim, kZero);
    ComplexVector one = basis_vector(kDim, kOne);
    ComplexVector excited = basis_vector(kDim, kExcited);
};

inline ComplexVector excited_state() { return basis_vector(kDim, kExcited); }

/// Bright/dark parametrization of the two-tone drive.
struct BrightDarkFrame {
    double theta = 0.0;
    double phi = 0.0;
    ComplexVector bright;
    ComplexVector dark;

    BrightDarkFrame(double theta_, double phi_) : theta(theta_), phi(phi_) {
        const double c = std::cos(theta / 2);
        const double s = std::sin(theta / 2);
        const Complex phase = std::polar(1.0, phi);
        bright = ComplexVector::Zero(kDim);
        dark = ComplexVector::Zero(kDim);
        bright(kZero) = c;
        bright(kOne) = s * phase;
        dark(kZero) = s;
        dark(kOne) = -c * phase;
    }
};

/// Unknown fractional deviations of the two Rabi frequencies.
struct ErrorModel {
    double eps0 = 0.0;
    double eps1 = 0.0;

    bool valid() const { return std::abs(eps0) < 1.0 && std::abs(eps1) < 1.0; }
};

inline void validate(const ErrorModel& m) {
    if (!m.valid()) throw InvalidArgument("ErrorModel: |eps0| and |eps1| must be < 1");
}

/// The error-deformed drive expressed as an envelope scale and a shifted mixing angle.
struct EffectiveErrorParams {
    double eps = 0.0;          // envelope Omega -> (1 + eps) Omega
    double theta_prime = 0.0;  // mixing angle theta -> theta'
};

/// Reparametrize per-field errors as (eps, theta'). The atan2 form is the
/// continuous branch of 2 arctan[(1+eps1)/(1+eps0) tan(theta/2)], mapping
/// [0, pi] onto [0, pi] including theta = pi.
inline EffectiveErrorParams effective_error_params(double theta, const ErrorModel& model) {
    if (1.0 + model.eps0 == 0.0) throw SingularParameter("effective_error_params: 1 + eps0 == 0");
    validate(model);
    const double a0 = 1.0 + model.eps0;
    const double a1 = 1.0 + model.eps1;
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    EffectiveErrorParams out;
    out.eps = std::sqrt(a0 * a0 * c * c + a1 * a1 * s * s) - 1.0;
    out.theta_prime = 2.0 * std::atan2(a1 * s, a0 * c);
    return out;
}

/// theta'' defined through (pi - theta)' = pi - theta'', with (pi - theta)'
/// obtained from the same per-field errors.
inline double theta_double_prime(double theta, const ErrorModel& model) {
    return std::numbers::pi - effective_error_params(std::numbers::pi - theta, model).theta_prime;
}

/// Omega (e^{i phi0} |b><e| + e^{-i phi0} |e><b|).
inline ComplexMatrix hamiltonian(const BrightDarkFrame& frame, double omega, double phi0) {
    if (omega < 0.0) throw InvalidArgument("hamiltonian: omega must be non-negative");
    const ComplexMatrix coupling = std::polar(omega, phi0) * outer(frame.bright, excited_state());
    return coupling + coupling.adjoint();
}

/// Drive written per laser field with independent strength errors:
/// (1+eps0) Omega cos(theta/2) e^{i phi0} |0><e| + (1+eps1) Omega sin(theta/2) e^{i(phi0+phi)} |1><e| + h.c.
inline ComplexMatrix field_hamiltonian(double theta, double phi, double omega, double phi0,
                                       const ErrorModel& model = {}) {
    if (omega < 0.0) throw InvalidArgument("field_hamiltonian: omega must be non-negative");
    ComplexMatrix h = ComplexMatrix::Zero(kDim, kDim);
    h(kZero, kExcited) = std::polar((1.0 + model.eps0) * omega * std::cos(theta / 2), phi0);
    h(kOne, kExcited) = std::polar((1.0 + model.eps1) * omega * std::sin(theta / 2), phi0 + phi);
    h(kExcited, kZero) = std::conj(h(kZero, kExcited));
    h(kExcited, kOne) = std::conj(h(kOne, kExcited));
    return h;
}

using SegmentPair = std::array<PulseSegment, 2>;

/// First half-loop at phase pi/2, second at phase 0, area pi/2 each.
inline SegmentPair default_segments(Envelope envelope = Envelope::square, int steps = 16) {
    return {PulseSegment{std::numbers::pi / 2, std::numbers::pi / 2, envelope, steps},
            PulseSegment{std::numbers::pi / 2, 0.0, envelope, steps}};
}

/// The two unit-Rabi generators of the elementary loop, in time order.
inline Schedule elementary_schedule(const BrightDarkFrame& frame, const SegmentPair& segments = default_segments(),
                                    double area_scale = 1.0) {
    return {GeneratorSegment{hamiltonian(frame, 1.0, segments[0].phi0), area_scale * segments[0].area},
            GeneratorSegment{hamiltonian(frame, 1.0, segments[1].phi0), area_scale * segments[1].area}};
}

namespace detail {

inline ComplexMatrix run_pair(const ComplexMatrix& first, const ComplexMatrix& second, const SegmentPair& segments,
                              double area_scale) {
    return evolve_segment(second, segments[1], area_scale) * evolve_segment(first, segments[0], area_scale);
}

inline void require_nominal_areas(const SegmentPair& segments) {
    for (const auto& s : segments) {
        if (std::abs(s.area - std::numbers::pi / 2) > 1e-12) {
            throw InvalidArgument("error-affected gate requires nominal segment areas of pi/2");
        }
    }
}

}  // namespace detail

/// U_{theta,phi} evolved from the two-segment schedule.
inline ComplexMatrix elementary_gate(const BrightDarkFrame& frame, const SegmentPair& segments = default_segments()) {
    return detail::run_pair(hamiltonian(frame, 1.0, segments[0].phi0), hamiltonian(frame, 1.0, segments[1].phi0),
                            segments, 1.0);
}

/// Closed form -i|e><e| + i|b><b| + |d><d|.
inline ComplexMatrix elementary_target(const BrightDarkFrame& frame) {
    return -kI * projector(excited_state()) + kI * projector(frame.bright) + projector(frame.dark);
}

/// U'_{theta,phi}: envelope scaled by (1 + eps), mixing angle replaced by theta'.
inline ComplexMatrix elementary_gate_with_error(const BrightDarkFrame& frame, const ErrorModel& model,
                                                const SegmentPair& segments = default_segments()) {
    detail::require_nominal_areas(segments);
    const auto p = effective_error_params(frame.theta, model);
    const BrightDarkFrame deformed(p.theta_prime, frame.phi);
    return detail::run_pair(hamiltonian(deformed, 1.0, segments[0].phi0),
                            hamiltonian(deformed, 1.0, segments[1].phi0), segments, 1.0 + p.eps);
}

/// Same gate as elementary_gate_with_error, evolved under the per-field drive
/// without the (eps, theta') reparametrization.
inline ComplexMatrix elementary_gate_from_fields(const BrightDarkFrame& frame, const ErrorModel& model,
                                                 const SegmentPair& segments = default_segments()) {
    validate(model);
    return detail::run_pair(field_hamiltonian(frame.theta, frame.phi, 1.0, segments[0].phi0, model),
                            field_hamiltonian(frame.theta, frame.phi, 1.0, segments[1].phi0, model), segments, 1.0);
}

inline ComplexMatrix maybe_with_error(const BrightDarkFrame& frame, const std::optional<ErrorModel>& model,
                                      const SegmentPair& segments) {
    return model ? elementary_gate_with_error(frame, *model, segments) : elementary_gate(frame, segments);
}

/// U U; ideal value -|e><e| - |b><b| + |d><d|.
inline ComplexMatrix composite_two(const BrightDarkFrame& frame, const std::optional<ErrorModel>& model = std::nullopt,
                                   const SegmentPair& segments = default_segments()) {
    const ComplexMatrix u = maybe_with_error(frame, model, segments);
    return u * u;
}

inline ComplexMatrix composite_two_target(const BrightDarkFrame& frame) {
    return -projector(excited_state()) - projector(frame.bright) + projector(frame.dark);
}

/// -|e><e| - |b'><b'| + |d'><d'|: the composite_two product with the envelope
/// error removed and only theta -> theta' kept.
inline ComplexMatrix theta_deformed_reflection(const BrightDarkFrame& frame, const ErrorModel& model) {
    const BrightDarkFrame deformed(effective_error_params(frame.theta, model).theta_prime, frame.phi);
    return composite_two_target(deformed);
}

/// U_{theta} U_{theta} U_{pi-theta} U_{pi-theta}; the rightmost factor acts first.
inline ComplexMatrix composite_four(const BrightDarkFrame& frame,
                                    const std::optional<ErrorModel>& model = std::nullopt,
                                    const SegmentPair& segments = default_segments()) {
    const BrightDarkFrame mirrored(std::numbers::pi - frame.theta, frame.phi);
    const ComplexMatrix u = maybe_with_error(frame, model, segments);
    const ComplexMatrix v = maybe_with_error(mirrored, model, segments);
    return u * u * v * v;
}

/// sigma_alpha = cos(alpha) sigma_x + sin(alpha) sigma_y.
inline ComplexMatrix sigma_alpha(double alpha) {
    ComplexMatrix s = ComplexMatrix::Zero(2, 2);
    s(0, 1) = std::polar(1.0, -alpha);
    s(1, 0) = std::polar(1.0, alpha);
    return s;
}

/// |e><e| + exp[i (pi - 2 theta) sigma_{phi + pi/2}] on span{|0>, |1>}.
inline ComplexMatrix logical_rotation_target(double theta, double phi) {
    const double angle = std::numbers::pi - 2.0 * theta;
    // sigma^2 = I, so exp(i a sigma) = cos(a) I + i sin(a) sigma.
    const ComplexMatrix rot = std::cos(angle) * ComplexMatrix::Identity(2, 2) +
                              kI * std::sin(angle) * sigma_alpha(phi + std::numbers::pi / 2);
    ComplexMatrix out = ComplexMatrix::Zero(kDim, kDim);
    out.topLeftCorner(2, 2) = rot;
    out(kExcited, kExcited) = 1.0;
    return out;
}

/// The four-factor envelope-error operator
///   e^{-i eps pi/2 X} e^{+i eps pi/2 Y} e^{+i eps pi/2 X} e^{-i eps pi/2 Y}
/// with X = |b><e| + h.c. and Y = i|b><e| + h.c. built on the frame's bright state.
/// Satisfies U'U' = U_theta * envelope_error_factor(frame(theta'), eps).
inline ComplexMatrix envelope_error_factor(const BrightDarkFrame& frame, double eps) {
    if (!(std::abs(eps) < 1.0)) throw InvalidArgument("envelope_error_factor: |eps| must be < 1");
    const ComplexMatrix x = hamiltonian(frame, 1.0, 0.0);
    const ComplexMatrix y = hamiltonian(frame, 1.0, std::numbers::pi / 2);
    const double a = eps * std::numbers::pi / 2;
    return expm_hermitian_generator(x, a) * expm_hermitian_generator(y, -a) * expm_hermitian_generator(x, -a) *
           expm_hermitian_generator(y, a);
}

/// envelope_error_factor - I; the first-order terms in eps cancel.
inline ComplexMatrix bch_residual(const BrightDarkFrame& frame, double eps) {
    return envelope_error_factor(frame, eps) - ComplexMatrix::Identity(kDim, kDim);
}

/// Elementary-loop schedules concatenated in time order for composite_two / composite_four.
inline Schedule composite_two_schedule(const BrightDarkFrame& frame, const SegmentPair& segments = default_segments()) {
    Schedule s = elementary_schedule(frame, segments);
    const Schedule again = s;
    s.insert(s.end(), again.begin(), again.end());
    return s;
}

inline Schedule composite_four_schedule(const BrightDarkFrame& frame,
                                        const SegmentPair& segments = default_segments()) {
    const Schedule first = composite_two_schedule(BrightDarkFrame(std::numbers::pi - frame.theta, frame.phi), segments);
    const Schedule second = composite_two_schedule(frame, segments);
    Schedule s = first;
    s.insert(s.end(), second.begin(), second.end());
    return s;
}

}  // namespace holocomp::qutrit
