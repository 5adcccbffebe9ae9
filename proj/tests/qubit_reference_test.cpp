// Copyright 2026 The ceqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ceqaoa/qubit_reference.hpp"

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "ceqaoa/layers.hpp"

namespace ceqaoa::qubit {
namespace {

Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

Eigen::Matrix2cd pauli_y() {
    Eigen::Matrix2cd m;
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

// Two-qubit gate as a 4x4 matrix in the basis |q1 q0⟩ (q0 = bit 0), read off the simulator.
Eigen::Matrix4cd simulated(GateKind kind, double angle) {
    Eigen::Matrix4cd out;
    for (int col = 0; col < 4; ++col) {
        QubitState s(2);
        s.amplitudes()[0] = 0.0;
        s.amplitudes()[col] = 1.0;
        s.apply({kind, {0, 1}, angle});
        for (int r = 0; r < 4; ++r) out(r, col) = s.amplitudes()[r];
    }
    return out;
}

TEST(Gates, TwoQubitRotationsMatchExponentials) {
    const Eigen::Matrix4cd xx = Eigen::kroneckerProduct(pauli_x(), pauli_x());
    const Eigen::Matrix4cd yy = Eigen::kroneckerProduct(pauli_y(), pauli_y());
    for (double th : {0.3, 1.2, -2.5}) {
        const Eigen::Matrix4cd rxx = (Complex(0, -th / 2) * xx).exp();
        const Eigen::Matrix4cd ryy = (Complex(0, -th / 2) * yy).exp();
        const Eigen::Matrix4cd rxy = (Complex(0, -th / 2) * (xx + yy)).exp();
        EXPECT_LT((simulated(GateKind::kRXX, th) - rxx).norm(), 1e-12);
        EXPECT_LT((simulated(GateKind::kRYY, th) - ryy).norm(), 1e-12);
        EXPECT_LT((simulated(GateKind::kXYRot, th) - rxy).norm(), 1e-12);
    }
}

TEST(Gates, ControlledGatesAndValidation) {
    QubitState s(2);
    s.apply({GateKind::kX, {0}, 0.0});
    s.apply({GateKind::kCX, {0, 1}, 0.0});
    EXPECT_NEAR(std::norm(s.amplitudes()[3]), 1.0, 1e-15);
    s.apply({GateKind::kCRY, {0, 1}, std::numbers::pi});
    // RY(π)|1⟩ = −|0⟩ on the target.
    EXPECT_NEAR(std::abs(s.amplitudes()[1] - Complex(-1.0, 0.0)), 0.0, 1e-15);
    EXPECT_THROW(s.apply({GateKind::kCX, {0, 0}, 0.0}), std::invalid_argument);
    EXPECT_THROW(s.apply({GateKind::kX, {2}, 0.0}), std::out_of_range);
    EXPECT_THROW(QubitState(kMaxQubits + 1), std::invalid_argument);
}

TEST(Encoder, CascadeAngleFrozen) {
    // 2·arccos(1/√3) and 2·arccos(1/√2).
    EXPECT_NEAR(cascade_angle(3, 0), 1.9106332362490186, 1e-15);
    EXPECT_NEAR(cascade_angle(3, 1), std::numbers::pi / 2, 1e-15);
    EXPECT_NEAR(cascade_angle(3, 0), 1.91063, 1e-5);
}

TEST(Encoder, PreparesExactWState) {
    for (EncoderVariant v : {EncoderVariant::kXYRotation, EncoderVariant::kCxCry}) {
        for (std::size_t n = 2; n <= 12; ++n) {
            QubitState s(n);
            const auto gates = one_hot_block_prepare(n, v);
            s.apply(gates);
            for (Index i = 0; i < (Index{1} << n); ++i) {
                const bool one_hot = std::has_single_bit(i);
                const Complex want = one_hot ? Complex(1.0 / std::sqrt(double(n)), 0.0) : Complex(0.0, 0.0);
                ASSERT_NEAR(std::abs(s.amplitudes()[i] - want), 0.0, 1e-12) << "n=" << n << " i=" << i;
            }
            EXPECT_EQ(count_two_qubit(gates), v == EncoderVariant::kXYRotation ? n - 1 : 2 * (n - 1));
        }
    }
}

TEST(Encoder, VariantsAgreeOnMultiBlockState) {
    QubitState a(9);
    QubitState b(9);
    a.apply(multi_block_prepare(3, 3, EncoderVariant::kXYRotation));
    b.apply(multi_block_prepare(3, 3, EncoderVariant::kCxCry));
    for (Index i = 0; i < 512; ++i) ASSERT_NEAR(std::abs(a.amplitudes()[i] - b.amplitudes()[i]), 0.0, 1e-12);
    EXPECT_THROW(multi_block_prepare(4, 6), std::invalid_argument);
}

TEST(Projection, UniformAndLeakage) {
    const BlockLayout l(3, 3);
    QubitState s(9);
    s.apply(multi_block_prepare(3, 3));
    const auto proj = project_to_encoded(s, l);
    EXPECT_LT(proj.leaked_mass, 1e-12);
    for (Index i = 0; i < l.dim(); ++i) EXPECT_NEAR(std::abs(proj.state[i] - Complex(1.0 / std::sqrt(27.0), 0)), 0.0, 1e-12);

    // An X on one block qubit moves all mass out of the one-hot subspace.
    QubitState leaky = s;
    leaky.apply({GateKind::kX, {4}, 0.0});
    EXPECT_NEAR(project_to_encoded(leaky, l).leaked_mass, 1.0, 1e-12);
    EXPECT_EQ(one_hot_index(l, {{1, 2, 0}}), (Index{1} << 1) | (Index{1} << 5) | (Index{1} << 6));
    EXPECT_THROW(project_to_encoded(QubitState(8), l), std::invalid_argument);
}

TEST(Mixer, XYPairsPreserveOneHotSubspace) {
    const BlockLayout l(3, 2);
    QubitState s(6);
    s.apply(multi_block_prepare(3, 2));
    s.apply({GateKind::kPhase, {1}, 0.7});
    s.apply(block_xy_mixer_gates(3, 2, 0.41));
    EXPECT_LT(project_to_encoded(s, l).leaked_mass, 1e-12);
    EXPECT_EQ(block_xy_mixer_gates(4, 1, 0.1).size(), 12u);
    EXPECT_EQ(block_xy_mixer_gates(4, 1, 0.1, PairRange::kExcludeLastSymbol).size(), 6u);
}

double trotter_error(std::size_t steps) {
    const BlockLayout l(3, 1);
    const double beta = 0.7;
    QubitState s(3);
    s.apply({GateKind::kX, {0}, 0.0});
    const auto step = block_xy_mixer_gates(3, 1, beta / double(steps));
    for (std::size_t k = 0; k < steps; ++k) s.apply(step);
    EncodedState exact = EncodedState::basis(l, 0);
    apply_mixer(exact, 2 * beta, MixerNormalization::kRaw);
    const auto proj = project_to_encoded(s, l);
    double err = 0.0;
    for (Index i = 0; i < 3; ++i) err += std::norm(proj.state[i] - exact[i]);
    return std::sqrt(err);
}

TEST(Mixer, TrotterErrorHalvesWithStepCount) {
    const double e8 = trotter_error(8);
    const double e16 = trotter_error(16);
    const double e64 = trotter_error(64);
    EXPECT_GT(e8, e16);
    EXPECT_NEAR(e8 / e16, 2.0, 0.2);
    EXPECT_LT(e64, 0.02);
}

TEST(GateList, TextFormat) {
    std::ostringstream out;
    write_gate_list(out, one_hot_block_prepare(2));
    const std::string text = out.str();
    EXPECT_EQ(text.rfind("X 0", 0), 0u);
    EXPECT_NE(text.find("XYROT 0 1"), std::string::npos);
}

}  // namespace
}  // namespace ceqaoa::qubit
