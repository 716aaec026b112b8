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


#include "holocomp/twoqubit.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace holocomp;
using namespace holocomp::twoqubit;

namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix kron2(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
    return out;
}

bool makhlin_local(const ComplexMatrix& u) {
    const auto [g1, g2] = oracle::makhlin_invariants(u);
    return std::abs(g1 - Complex(1.0, 0.0)) < 1e-9 && std::abs(g2 - 3.0) < 1e-9;
}

}  // namespace

TEST(ComputationalLabel, parse_and_print) {
    for (const char* s : {"00", "01", "10", "11"}) EXPECT_EQ(ComputationalLabel::parse(s).str(), s);
    EXPECT_EQ(ComputationalLabel::parse("10").index, 2);
    EXPECT_EQ(label_11().index, 3);
    for (const char* s : {"", "1", "2a", "111", "a1"}) EXPECT_THROW(ComputationalLabel::parse(s), InvalidArgument);
}

TEST(twoqubit_hamiltonian, structure) {
    const ComplexMatrix h = twoqubit_hamiltonian({3}, {0}, 0.7, 0.3, 0.2, -1.0);
    EXPECT_TRUE(is_hermitian(h));
    EXPECT_NEAR(std::abs(h(3, kAncilla) - std::polar(0.7, 0.3)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(h(0, kAncilla) - std::polar(0.2, -1.0)), 0.0, 1e-15);
    EXPECT_EQ(h.block(0, 0, 4, 4).norm(), 0.0);
    EXPECT_EQ(h(kAncilla, kAncilla), Complex(0.0));
    EXPECT_THROW(twoqubit_hamiltonian({1}, {1}, 1, 0, 1, 0), InvalidArgument);
    EXPECT_THROW(twoqubit_hamiltonian({4}, {1}, 1, 0, 1, 0), InvalidArgument);
}

TEST(twoqubit_elementary, ideal_values) {
    ComplexMatrix expected = ComplexMatrix::Identity(5, 5);
    expected(3, 3) = kI;
    expected(4, 4) = -kI;
    EXPECT_LT(frobenius_distance(twoqubit_elementary(label_11()), expected), 1e-10);
    for (int jk = 0; jk < 4; ++jk) {
        const ComplexMatrix u = twoqubit_elementary({jk});
        EXPECT_LT(frobenius_distance(u, twoqubit_elementary_target({jk})), 1e-10);
        EXPECT_LT(frobenius_distance(u * u * u * u, ComplexMatrix::Identity(5, 5)), 1e-10);
        EXPECT_LT(frobenius_distance(twoqubit_composite({jk}), twoqubit_composite_target({jk})), 1e-10);
    }
}

TEST(twoqubit_elementary, matches_rk4) {
    const qutrit::SegmentPair segs = qutrit::default_segments(Envelope::sine_squared, 32);
    const TwoQubitErrorModel m{0.03};
    const ComplexMatrix expected =
        oracle::rk4_schedule({{single_drive({2}, 1.03, kPi / 2), kPi / 2}, {single_drive({2}, 1.03, 0.0), kPi / 2}},
                             true, 4000);
    EXPECT_LT(frobenius_distance(twoqubit_elementary({2}, m, segs), expected), 1e-9);
    EXPECT_LT(frobenius_distance(twoqubit_elementary({2}, m), expected), 1e-9);
}

TEST(twoqubit_elementary, error_only_touches_driven_pair) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> err(-0.3, 0.3);
    for (int k = 0; k < 40; ++k) {
        const int jk = static_cast<int>(rng() % 4);
        const ComplexMatrix u = twoqubit_elementary({jk}, TwoQubitErrorModel{err(rng)});
        EXPECT_TRUE(is_unitary(u, 1e-12));
        for (int hn = 0; hn < 4; ++hn) {
            if (hn == jk) continue;
            EXPECT_LT((u * basis_vector(5, hn) - basis_vector(5, hn)).norm(), 1e-14);
        }
        // The error leaks |jk> only into the ancilla.
        const ComplexVector out = u * basis_vector(5, jk);
        EXPECT_NEAR(std::norm(out(jk)) + std::norm(out(kAncilla)), 1.0, 1e-12);
    }
}

TEST(twoqubit_composite, phase_gate_on_computational_block) {
    ComplexMatrix cz = ComplexMatrix::Identity(4, 4);
    cz(3, 3) = -1.0;
    EXPECT_LT(frobenius_distance(computational_block(twoqubit_composite(label_11())), cz), 1e-10);
    EXPECT_THROW(computational_block(ComplexMatrix::Identity(4, 4)), InvalidArgument);
}

TEST(twoqubit_composite, error_scaling) {
    const ComplexMatrix target = twoqubit_composite_target(label_11());
    auto dist_single = [](double e) {
        return frobenius_distance(twoqubit_elementary(label_11(), TwoQubitErrorModel{e}),
                                  twoqubit_elementary_target(label_11()));
    };
    auto dist_comp = [&](double e) {
        return frobenius_distance(twoqubit_composite(label_11(), TwoQubitErrorModel{e}), target);
    };
    EXPECT_NEAR(dist_single(0.01) / dist_single(0.005), 2.0, 0.02);
    EXPECT_NEAR(dist_comp(0.01) / dist_comp(0.005), 4.0, 0.05);
}

TEST(entangling_power_check, agrees_with_makhlin_invariants) {
    ComplexMatrix cz = ComplexMatrix::Identity(4, 4);
    cz(3, 3) = -1.0;
    EXPECT_TRUE(entangling_power_check(cz));
    EXPECT_FALSE(makhlin_local(cz));
    const ComplexMatrix cs = computational_block(twoqubit_elementary(label_11()));
    EXPECT_TRUE(entangling_power_check(cs));
    EXPECT_FALSE(makhlin_local(cs));
    EXPECT_FALSE(entangling_power_check(ComplexMatrix::Identity(4, 4)));

    std::mt19937_64 rng(22);
    for (int k = 0; k < 30; ++k) {
        const ComplexMatrix local = kron2(oracle::random_unitary(rng, 2), oracle::random_unitary(rng, 2));
        EXPECT_TRUE(makhlin_local(local));
        EXPECT_FALSE(entangling_power_check(local));
        const ComplexMatrix generic = oracle::random_unitary(rng, 4);
        EXPECT_EQ(entangling_power_check(generic), !makhlin_local(generic));
        const ComplexMatrix dressed = kron2(oracle::random_unitary(rng, 2), oracle::random_unitary(rng, 2)) * cz *
                                      kron2(oracle::random_unitary(rng, 2), oracle::random_unitary(rng, 2));
        EXPECT_TRUE(entangling_power_check(dressed));
    }
}

TEST(entangling_power_check, rejects_bad_input) {
    EXPECT_THROW(entangling_power_check(ComplexMatrix::Identity(3, 3)), InvalidArgument);
    EXPECT_THROW(entangling_power_check(2.0 * ComplexMatrix::Identity(4, 4)), InvalidArgument);
    EXPECT_THROW(twoqubit_elementary(label_11(), TwoQubitErrorModel{1.0}), InvalidArgument);
}
