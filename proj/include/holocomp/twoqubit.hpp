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

// Two-qubit holonomic gate on the five-level model space
// {|00>, |01>, |10>, |11>, |a>}. The drive couples one computational state
// |jk> (optionally a second |lm>) to the ancilla |a>, which has the same
// three-level structure as the one-qubit drive.

#include <array>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/SVD>

#include "holocomp/numeric.hpp"
#include "holocomp/pulse.hpp"
#include "holocomp/qutrit.hpp"

namespace holocomp::twoqubit {

inline constexpr Eigen::Index kDim = 5;
inline constexpr Eigen::Index kAncilla = 4;

/// One of |00>, |01>, |10>, |11>; index is the binary value jk.
struct ComputationalLabel {
    int index = 3;

    static ComputationalLabel parse(std::string_view s) {
        if (s.size() != 2 || (s[0] != '0' && s[0] != '1') || (s[1] != '0' && s[1] != '1')) {
            throw InvalidArgument("computational label must be one of 00, 01, 10, 11 (got '" + std::string(s) + "')");
        }
        return {(s[0] - '0') * 2 + (s[1] - '0')};
    }
    std::string str() const { return {char('0' + index / 2), char('0' + index % 2)}; }
    friend bool operator==(ComputationalLabel, ComputationalLabel) = default;
};

inline ComputationalLabel label_11() { return {3}; }

/// Fractional deviation of Omega_jk.
struct TwoQubitErrorModel {
    double eps_jk = 0.0;
    bool valid() const { return std::abs(eps_jk) < 1.0; }
};

/// Omega_jk e^{i phi_jk} |jk><a| + Omega_lm e^{i phi_lm} |lm><a| + h.c.
inline ComplexMatrix twoqubit_hamiltonian(ComputationalLabel jk, ComputationalLabel lm, double omega_jk,
                                          double phi_jk, double omega_lm, double phi_lm) {
    if (jk.index < 0 || jk.index > 3 || lm.index < 0 || lm.index > 3) {
        throw InvalidArgument("twoqubit_hamiltonian: labels must be computational");
    }
    if (jk == lm) throw InvalidArgument("twoqubit_hamiltonian: jk and lm must differ");
    ComplexMatrix h = ComplexMatrix::Zero(kDim, kDim);
    h(jk.index, kAncilla) = std::polar(omega_jk, phi_jk);
    h(lm.index, kAncilla) = std::polar(omega_lm, phi_lm);
    return h + h.adjoint().eval();
}

/// Drive on |jk> alone (Omega_lm = 0).
inline ComplexMatrix single_drive(ComputationalLabel jk, double omega, double phase) {
    const ComputationalLabel other{jk.index == 0 ? 1 : 0};
    return twoqubit_hamiltonian(jk, other, omega, phase, 0.0, 0.0);
}

inline void validate(const TwoQubitErrorModel& m) {
    if (!m.valid()) throw InvalidArgument("TwoQubitErrorModel: |eps_jk| must be < 1");
}

/// Two half-loops: generator i|jk><a| - i|a><jk|, then |jk><a| + |a><jk|.
inline Schedule twoqubit_schedule(ComputationalLabel jk, const std::optional<TwoQubitErrorModel>& model = std::nullopt,
                                  const qutrit::SegmentPair& segments = qutrit::default_segments()) {
    const double omega = model ? 1.0 + model->eps_jk : 1.0;
    if (model) validate(*model);
    return {GeneratorSegment{single_drive(jk, omega, segments[0].phi0), segments[0].area},
            GeneratorSegment{single_drive(jk, omega, segments[1].phi0), segments[1].area}};
}

/// U_jk; with a model the Rabi frequency is (1 + eps_jk) Omega_jk for both segments.
inline ComplexMatrix twoqubit_elementary(ComputationalLabel jk,
                                         const std::optional<TwoQubitErrorModel>& model = std::nullopt,
                                         const qutrit::SegmentPair& segments = qutrit::default_segments()) {
    const double scale = model ? 1.0 + model->eps_jk : 1.0;
    if (model) validate(*model);
    return evolve_segment(single_drive(jk, 1.0, segments[1].phi0), segments[1], scale) *
           evolve_segment(single_drive(jk, 1.0, segments[0].phi0), segments[0], scale);
}

/// -i|a><a| + i|jk><jk| + sum_{hn != jk} |hn><hn|
inline ComplexMatrix twoqubit_elementary_target(ComputationalLabel jk) {
    ComplexMatrix u = ComplexMatrix::Identity(kDim, kDim);
    u(kAncilla, kAncilla) = -kI;
    u(jk.index, jk.index) = kI;
    return u;
}

/// U_jk U_jk
inline ComplexMatrix twoqubit_composite(ComputationalLabel jk,
                                        const std::optional<TwoQubitErrorModel>& model = std::nullopt,
                                        const qutrit::SegmentPair& segments = qutrit::default_segments()) {
    const ComplexMatrix u = twoqubit_elementary(jk, model, segments);
    return u * u;
}

/// -|a><a| - |jk><jk| + sum_{hn != jk} |hn><hn|
inline ComplexMatrix twoqubit_composite_target(ComputationalLabel jk) {
    ComplexMatrix u = ComplexMatrix::Identity(kDim, kDim);
    u(kAncilla, kAncilla) = -1.0;
    u(jk.index, jk.index) = -1.0;
    return u;
}

inline std::array<ComplexVector, 4> computational_basis() {
    return {basis_vector(kDim, 0), basis_vector(kDim, 1), basis_vector(kDim, 2), basis_vector(kDim, 3)};
}

/// Restriction of a model-space operator to span{|00>, |01>, |10>, |11>}.
inline ComplexMatrix computational_block(const ComplexMatrix& u) {
    if (u.rows() != kDim || u.cols() != kDim) throw InvalidArgument("computational_block: expected a 5x5 operator");
    return u.topLeftCorner(4, 4);
}

/// Singular values of the realigned operator R[(a c),(b d)] = U[(a b),(c d)];
/// the number of nonzero values is the operator-Schmidt rank.
inline Eigen::VectorXd operator_schmidt_coefficients(const ComplexMatrix& u) {
    if (u.rows() != 4 || u.cols() != 4) throw InvalidArgument("operator_schmidt_coefficients: expected 4x4");
    ComplexMatrix r(4, 4);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) r(2 * a + c, 2 * b + d) = u(2 * a + b, 2 * c + d);
    return Eigen::JacobiSVD<ComplexMatrix>(r).singularValues();
}

/// True iff a 4x4 unitary is not a tensor product of one-qubit unitaries.
inline bool entangling_power_check(const ComplexMatrix& gate, double tol = 1e-9) {
    if (gate.rows() != 4 || gate.cols() != 4) throw InvalidArgument("entangling_power_check: expected a 4x4 gate");
    if (!is_unitary(gate, 1e-9)) throw InvalidArgument("entangling_power_check: gate is not unitary");
    const Eigen::VectorXd sv = operator_schmidt_coefficients(gate);
    return sv(1) > tol;
}

}  // namespace holocomp::twoqubit
