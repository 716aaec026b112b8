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

#include "holocomp/qutrit.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace holocomp;
using namespace holocomp::qutrit;

namespace {

constexpr double kPi = std::numbers::pi;

/// Columns |e>, |b>, |d>.
ComplexMatrix ebd(const BrightDarkFrame& f) {
    ComplexMatrix w(3, 3);
    w.col(0) = excited_state();
    w.col(1) = f.bright;
    w.col(2) = f.dark;
    return w;
}

ComplexMatrix diag3(Complex a, Complex b, Complex c) {
    ComplexMatrix m = ComplexMatrix::Zero(3, 3);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
}

/// Eq.-(5)-style drive integrated by RK4 directly from the per-field couplings.
ComplexMatrix rk4_field_gate(double theta, double phi, const ErrorModel& m, bool sine_squared = false) {
    auto field = [&](double phi0) {
        ComplexMatrix h = ComplexMatrix::Zero(3, 3);
        h(0, 2) = (1 + m.eps0) * std::cos(theta / 2) * std::polar(1.0, phi0);
        h(1, 2) = (1 + m.eps1) * std::sin(theta / 2) * std::polar(1.0, phi0 + phi);
        h(2, 0) = std::conj(h(0, 2));
        h(2, 1) = std::conj(h(1, 2));
        return h;
    };
    return oracle::rk4_schedule({{field(kPi / 2), kPi / 2}, {field(0.0), kPi / 2}}, sine_squared, 4000);
}

}  // namespace

TEST(QutritBasis, orthonormal) {
    const QutritBasis b;
    const ComplexVector v[] = {b.zero, b.one, b.excited};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_NEAR(std::abs(v[i].dot(v[j])), i == j ? 1.0 : 0.0, 1e-12);
}

TEST(BrightDarkFrame, orthogonal_and_normalized) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    for (int k = 0; k < 50; ++k) {
        const BrightDarkFrame f(angle(rng), angle(rng));
        EXPECT_LT(std::abs(f.bright.dot(f.dark)), 1e-12);
        EXPECT_LT(std::abs(f.bright(kExcited)) + std::abs(f.dark(kExcited)), 1e-15);
        EXPECT_TRUE(is_normalized(f.bright, 1e-12));
        EXPECT_TRUE(is_normalized(f.dark, 1e-12));
    }
}

TEST(hamiltonian, special_cases) {
    const BrightDarkFrame f(0.7, 0.2);
    EXPECT_EQ(hamiltonian(f, 0.0, 0.3).norm(), 0.0);
    const ComplexMatrix h0 = hamiltonian(BrightDarkFrame(0.0, 0.0), 1.0, 0.0);
    ComplexMatrix expected = ComplexMatrix::Zero(3, 3);
    expected(kZero, kExcited) = expected(kExcited, kZero) = 1.0;
    EXPECT_LT(frobenius_distance(h0, expected), 1e-15);
    EXPECT_THROW(hamiltonian(f, -1.0, 0.0), InvalidArgument);
}

TEST(hamiltonian, hermitian_and_annihilates_dark_state) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int k = 0; k < 50; ++k) {
        const BrightDarkFrame f(angle(rng), angle(rng));
        const ComplexMatrix h = hamiltonian(f, 1.3, angle(rng));
        EXPECT_TRUE(is_hermitian(h, 1e-14));
        EXPECT_LT((h * f.dark).norm(), 1e-14);
    }
}

TEST(effective_error_params, common_mode_and_zero) {
    for (double theta : {0.1, 1.0, 2.5}) {
        const auto p = effective_error_params(theta, {0.03, 0.03});
        EXPECT_NEAR(p.eps, 0.03, 1e-15);
        EXPECT_NEAR(p.theta_prime, theta, 1e-15);
        const auto z = effective_error_params(theta, {});
        EXPECT_EQ(z.eps, 0.0);
        EXPECT_NEAR(z.theta_prime, theta, 1e-15);
    }
}

TEST(effective_error_params, frozen_high_precision_values) {
    // 40-digit evaluation at theta = pi/3, eps0 = 0.1, eps1 = 0.
    const auto p = effective_error_params(kPi / 3, {0.1, 0.0});
    EXPECT_NEAR(p.eps, 0.075871739567500676, 1e-15);
    EXPECT_NEAR(p.theta_prime, 0.96668057592182501, 1e-15);
}

TEST(effective_error_params, matches_diagonalized_field_drive) {
    // The per-field drive has eigenvalues {-(1+eps), 0, 1+eps}, and its null
    // vector is the deformed dark state.
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> angle(0.0, kPi), err(-0.2, 0.2);
    for (int k = 0; k < 30; ++k) {
        const double theta = angle(rng), phi = 2 * angle(rng);
        const ErrorModel m{err(rng), err(rng)};
        const auto p = effective_error_params(theta, m);
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(field_hamiltonian(theta, phi, 1.0, 0.4, m));
        EXPECT_NEAR(eig.eigenvalues()(2), 1.0 + p.eps, 1e-12);
        EXPECT_NEAR(eig.eigenvalues()(0), -(1.0 + p.eps), 1e-12);
        const ComplexVector null = eig.eigenvectors().col(1);
        EXPECT_NEAR(std::abs(null.dot(BrightDarkFrame(p.theta_prime, phi).dark)), 1.0, 1e-10);
    }
}

TEST(effective_error_params, branch_is_continuous_on_zero_to_pi) {
    const ErrorModel m{-0.15, 0.12};
    double previous = -1.0;
    for (int k = 0; k <= 200; ++k) {
        const double theta = kPi * k / 200;
        const double tp = effective_error_params(theta, m).theta_prime;
        EXPECT_GE(tp, 0.0);
        EXPECT_LE(tp, kPi + 1e-15);
        EXPECT_GT(tp, previous);
        previous = tp;
    }
    EXPECT_NEAR(effective_error_params(kPi, m).theta_prime, kPi, 1e-15);
}

TEST(effective_error_params, errors) {
    EXPECT_THROW(effective_error_params(0.3, {-1.0, 0.0}), SingularParameter);
    EXPECT_THROW(effective_error_params(0.3, {0.0, 1.5}), InvalidArgument);
}

TEST(elementary_gate, diagonal_in_excited_bright_dark_basis) {
    for (double theta : {0.0, kPi / 5, kPi / 2, 2.0, kPi}) {
        for (double phi : {0.0, 0.9, -2.1}) {
            const BrightDarkFrame f(theta, phi);
            const ComplexMatrix u = elementary_gate(f);
            const ComplexMatrix w = ebd(f);
            EXPECT_LT(frobenius_distance(w.adjoint() * u * w, diag3(-kI, kI, 1.0)), 1e-10);
            EXPECT_LT(frobenius_distance(u, elementary_target(f)), 1e-10);
            EXPECT_LT((u * f.dark - f.dark).norm(), 1e-10);
        }
    }
}

TEST(elementary_gate, fourth_power_is_identity) {
    const ComplexMatrix u = elementary_gate(BrightDarkFrame(1.1, 0.4));
    EXPECT_LT(frobenius_distance(u * u * u * u, ComplexMatrix::Identity(3, 3)), 1e-10);
}

TEST(elementary_gate, theta_half_pi_matches_rk4_and_closed_form) {
    const ComplexMatrix u = elementary_gate(BrightDarkFrame(kPi / 2, 0.0));
    ComplexMatrix expected(3, 3);
    expected << Complex(0.5, 0.5), Complex(-0.5, 0.5), 0, Complex(-0.5, 0.5), Complex(0.5, 0.5), 0, 0, 0, -kI;
    EXPECT_LT(frobenius_distance(u, expected), 1e-12);
    EXPECT_LT(frobenius_distance(u, rk4_field_gate(kPi / 2, 0.0, {})), 1e-10);
}

TEST(elementary_gate_with_error, reduces_to_ideal_and_common_mode) {
    const BrightDarkFrame f(0.8, 1.7);
    EXPECT_LT(frobenius_distance(elementary_gate_with_error(f, {}), elementary_gate(f)), 1e-14);
    const double eps = 0.04;
    auto stretched = default_segments();
    for (auto& s : stretched) s.area *= 1 + eps;
    EXPECT_LT(frobenius_distance(elementary_gate_with_error(f, {eps, eps}), elementary_gate(f, stretched)), 1e-13);
}

TEST(elementary_gate_with_error, matches_rk4_of_per_field_drive) {
    const double theta = kPi / 4, phi = kPi / 3;
    const ErrorModel m{0.02, -0.01};
    const ComplexMatrix expected = rk4_field_gate(theta, phi, m);
    const BrightDarkFrame f(theta, phi);
    EXPECT_LT(frobenius_distance(elementary_gate_with_error(f, m), expected), 1e-9);
    EXPECT_LT(frobenius_distance(elementary_gate_from_fields(f, m), expected), 1e-9);
    EXPECT_TRUE(is_unitary(elementary_gate_with_error(f, m), 1e-10));
}

TEST(elementary_gate_with_error, sine_squared_envelope_matches_rk4) {
    const double theta = 1.9, phi = -0.6;
    const ErrorModel m{-0.05, 0.08};
    const auto segs = default_segments(Envelope::sine_squared, 32);
    const ComplexMatrix expected = rk4_field_gate(theta, phi, m, true);
    EXPECT_LT(frobenius_distance(elementary_gate_with_error(BrightDarkFrame(theta, phi), m, segs), expected), 1e-9);
}

TEST(elementary_gate_with_error, reparametrized_equals_per_field_property) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> angle(0.0, kPi), err(-0.2, 0.2);
    for (int k = 0; k < 100; ++k) {
        const BrightDarkFrame f(angle(rng), 2 * angle(rng));
        const ErrorModel m{err(rng), err(rng)};
        EXPECT_LT(frobenius_distance(elementary_gate_with_error(f, m), elementary_gate_from_fields(f, m)), 1e-9);
    }
}

TEST(elementary_gate_with_error, requires_nominal_areas) {
    auto segs = default_segments();
    segs[0].area = 1.0;
    EXPECT_THROW(elementary_gate_with_error(BrightDarkFrame(1.0, 0.0), {0.01, 0.0}, segs), InvalidArgument);
}

TEST(pulse_shape, square_and_sine_squared_agree) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> angle(0.0, kPi), err(-0.1, 0.1);
    const auto sq = default_segments(Envelope::square);
    const auto ss = default_segments(Envelope::sine_squared, 24);
    for (int k = 0; k < 20; ++k) {
        const BrightDarkFrame f(angle(rng), 2 * angle(rng));
        const ErrorModel m{err(rng), err(rng)};
        EXPECT_LT(frobenius_distance(elementary_gate(f, sq), elementary_gate(f, ss)), 1e-9);
        EXPECT_LT(frobenius_distance(composite_four(f, m, sq), composite_four(f, m, ss)), 1e-9);
    }
}

TEST(composite_two, ideal_value) {
    const BrightDarkFrame f(1.2, 0.5);
    const ComplexMatrix c = composite_two(f);
    const ComplexMatrix w = ebd(f);
    EXPECT_LT(frobenius_distance(w.adjoint() * c * w, diag3(-1.0, -1.0, 1.0)), 1e-10);
    const ComplexMatrix u = elementary_gate(f);
    EXPECT_EQ(frobenius_distance(c, u * u), 0.0);
}

TEST(composite_two, common_mode_error_is_second_order) {
    const BrightDarkFrame f(1.2, 0.5);
    const ComplexMatrix ideal = composite_two(f);
    const double d1 = frobenius_distance(composite_two(f, ErrorModel{0.01, 0.01}), ideal);
    const double d2 = frobenius_distance(composite_two(f, ErrorModel{0.005, 0.005}), ideal);
    EXPECT_NEAR(d1 / d2, 4.0, 0.1);
}

TEST(composite_two, differential_error_is_theta_shift) {
    // Only the theta -> theta' reflection survives at first order.
    const BrightDarkFrame f(kPi / 3, 0.0);
    const ErrorModel m{0.01, -0.01};
    const ComplexMatrix c = composite_two(f, m);
    const double to_ideal = frobenius_distance(c, composite_two_target(f));
    const double to_deformed = frobenius_distance(c, theta_deformed_reflection(f, m));
    const double eps = effective_error_params(f.theta, m).eps;
    EXPECT_GT(to_ideal, 5e-3);
    EXPECT_LT(to_deformed, 10 * eps * eps + 1e-12);
    EXPECT_LT(to_deformed, 2e-2 * to_ideal);
}

TEST(composite_two, factorizes_into_reflection_and_envelope_factor) {
    const BrightDarkFrame f(0.9, 2.2);
    const ErrorModel m{0.03, 0.01};
    const auto p = effective_error_params(f.theta, m);
    const ComplexMatrix rhs =
        theta_deformed_reflection(f, m) * envelope_error_factor(BrightDarkFrame(p.theta_prime, f.phi), p.eps);
    EXPECT_LT(frobenius_distance(composite_two(f, m), rhs), 1e-13);
}

TEST(composite_four, matches_logical_rotation) {
    for (double theta : {kPi / 6, kPi / 4, kPi / 3, kPi / 2, 2.7})
        for (double phi : {0.0, kPi / 4, kPi / 2, -1.3})
            EXPECT_LT(frobenius_distance(composite_four(BrightDarkFrame(theta, phi)),
                                         logical_rotation_target(theta, phi)),
                      1e-10);
}

TEST(composite_four, special_angles) {
    EXPECT_LT(frobenius_distance(composite_four(BrightDarkFrame(kPi / 2, 0.3)), ComplexMatrix::Identity(3, 3)), 1e-10);
    // Direct exponential of i (pi/2) sigma_y.
    ComplexMatrix gen = ComplexMatrix::Zero(2, 2);
    gen(0, 1) = -kI;
    gen(1, 0) = kI;
    const ComplexMatrix rot = oracle::taylor_expm(kI * (kPi / 2) * gen);
    EXPECT_LT(frobenius_distance(composite_four(BrightDarkFrame(kPi / 4, 0.0)).topLeftCorner(2, 2), rot), 1e-10);
    EXPECT_LT(frobenius_distance(rot, kI * gen), 1e-12);
}

TEST(composite_four, fourth_order_infidelity) {
    const BrightDarkFrame f(kPi / 4, 0.0);
    const ComplexMatrix target = logical_rotation_target(f.theta, f.phi);
    auto infidelity = [&](const ErrorModel& m) {
        const ComplexMatrix v = composite_four(f, m);
        return 1.0 - std::abs((target.adjoint() * v).trace()) / 3.0;
    };
    const double ratio = infidelity({0.03, 0.01}) / infidelity({0.015, 0.005});
    EXPECT_NEAR(ratio, 16.0, 1.5);
}

TEST(composite_four, no_first_order_error_term) {
    // Fit d(s) = c1 s + c2 s^2 + c3 s^3 for errors (s a, s b).
    const BrightDarkFrame f(1.0, 0.6);
    const ComplexMatrix ideal = composite_four(f);
    for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{1.0, -1.0}, std::pair{1.0, 0.0}, std::pair{0.3, 0.8}}) {
        Eigen::MatrixXd design(12, 3);
        Eigen::VectorXd rhs(12);
        for (int k = 0; k < 12; ++k) {
            const double s = std::pow(10.0, -4.0 + 2.0 * k / 11.0);
            design(k, 0) = s;
            design(k, 1) = s * s;
            design(k, 2) = s * s * s;
            rhs(k) = frobenius_distance(composite_four(f, ErrorModel{s * a, s * b}), ideal);
        }
        const Eigen::VectorXd c = design.colPivHouseholderQr().solve(rhs);
        EXPECT_LT(std::abs(c(0)), 1e-3 * std::abs(c(1))) << a << "," << b;
    }
}

TEST(logical_rotation_target, values) {
    EXPECT_LT(frobenius_distance(logical_rotation_target(kPi / 2, 0.4), ComplexMatrix::Identity(3, 3)), 1e-15);
    EXPECT_LT(frobenius_distance(logical_rotation_target(0.0, 0.0), diag3(-1.0, -1.0, 1.0)), 1e-15);
    const double theta = kPi / 3, phi = kPi / 4;
    const ComplexMatrix rot = oracle::taylor_expm(kI * (kPi - 2 * theta) * sigma_alpha(phi + kPi / 2));
    EXPECT_LT(frobenius_distance(logical_rotation_target(theta, phi).topLeftCorner(2, 2), rot), 1e-13);
}

TEST(theta_double_prime, first_order_terms_cancel) {
    const double theta = 1.1;
    std::vector<double> ratios;
    for (double x : {1e-2, 5e-3, 2.5e-3, 1.25e-3}) {
        const ErrorModel m{0.0, x};  // eps0 = 0 gives x = eps1
        const double tp = effective_error_params(theta, m).theta_prime;
        const double tpp = theta_double_prime(theta, m);
        EXPECT_NEAR(tpp, 2 * std::atan(std::tan(theta / 2) / (1 + x)), 1e-14);
        const double mirrored = effective_error_params(kPi - theta, m).theta_prime;
        EXPECT_NEAR(mirrored - tp - (kPi - 2 * theta), -(tpp + tp - 2 * theta), 1e-14);
        ratios.push_back(std::abs(tpp + tp - 2 * theta) / (x * x));
    }
    // Bounded by a constant fit on small x.
    for (double r : ratios) EXPECT_LT(r, 1.2 * ratios.back() + 1e-6);
    EXPECT_NEAR(ratios.front(), ratios.back(), 0.05 * ratios.back());
}

TEST(bch_residual, zero_and_second_order) {
    const BrightDarkFrame f(kPi / 3, 0.0);
    EXPECT_LT(bch_residual(f, 0.0).norm(), 1e-13);
    const double ratio = bch_residual(f, 0.02).norm() / bch_residual(f, 0.01).norm();
    EXPECT_NEAR(ratio, 4.0, 0.2);
    const double small = bch_residual(f, 2e-4).norm() / bch_residual(f, 1e-4).norm();
    EXPECT_NEAR(small, 4.0, 0.01);
}

TEST(bch_residual, frozen_norm) {
    // 40-digit product of the four factors at eps = 0.05, theta = pi/3, phi = 0.
    EXPECT_NEAR(bch_residual(BrightDarkFrame(kPi / 3, 0.0), 0.05).norm(), 0.017411315705674496, 1e-14);
    EXPECT_THROW(bch_residual(BrightDarkFrame(1.0, 0.0), 1.0), InvalidArgument);
}
