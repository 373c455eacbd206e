// Copyright 2026 The imprecise-q Authors
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

#include "impq/state_vector.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "gtest/gtest.h"
#include "impq/error.h"
#include "impq/gates.h"

namespace impq {
namespace {

constexpr double kTol = 1e-12;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

StateVector random_state(int num_qubits, Rng &rng) {
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    double norm = 0;
    for (auto &a : amps) {
        a = {rng.normal(), rng.normal()};
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return StateVector::from_amplitudes(std::move(amps));
}

UnitaryGate random_1q(Rng &rng) {
    const GateKind kinds[] = {GateKind::H, GateKind::X, GateKind::Z, GateKind::I};
    return make_faulty_1q(kinds[rng.uniform_int(0, 3)], -3 + 6 * rng.uniform());
}

TEST(state_vector, init_register) {
    StateVector s = init_register(3);
    ASSERT_EQ(s.size(), 8u);
    EXPECT_EQ(s[0], Complex(1));
    for (std::uint64_t i = 1; i < 8; i++) {
        EXPECT_EQ(s[i], Complex(0));
    }
    StateVector one = init_register(1);
    EXPECT_EQ(one.size(), 2u);
    EXPECT_EQ(one[0], Complex(1));
    EXPECT_EQ(one[1], Complex(0));
    StateVector seven = init_register(7);
    EXPECT_NEAR(std::abs(overlap(seven, seven)), 1.0, kTol);
}

TEST(state_vector, init_register_bounds) {
    EXPECT_THROW(init_register(0), ResourceError);
    EXPECT_THROW(init_register(25), ResourceError);
    EXPECT_NO_THROW(init_register(kMaxQubits));
}

TEST(state_vector, from_amplitudes_rejects_bad_input) {
    EXPECT_THROW(StateVector::from_amplitudes({1, 1}), UsageError);
    EXPECT_THROW(StateVector::from_amplitudes({1, 0, 0}), UsageError);
    EXPECT_NO_THROW(StateVector::from_amplitudes({0, 1}));
}

TEST(state_vector, ideal_x_on_top_wire) {
    StateVector s = init_register(3);
    apply_gate(s, make_faulty_1q(GateKind::X, 0), {1});
    EXPECT_NEAR(std::abs(s[0b100] - Complex(1)), 0, kTol);
}

TEST(state_vector, ideal_h_keeps_global_i) {
    StateVector s = init_register(1);
    apply_gate(s, make_faulty_1q(GateKind::H, 0), {1});
    EXPECT_NEAR(std::abs(s[0] - Complex(0, kInvSqrt2)), 0, kTol);
    EXPECT_NEAR(std::abs(s[1] - Complex(0, kInvSqrt2)), 0, kTol);
}

TEST(state_vector, ideal_cnot) {
    StateVector s = StateVector::basis_state(2, 0b10);
    apply_gate(s, make_faulty_cnot(0, 0), {1, 2});
    EXPECT_NEAR(std::abs(s[0b11] - Complex(1)), 0, kTol);

    // Control below target.
    StateVector t = StateVector::basis_state(3, 0b001);
    apply_gate(t, make_faulty_cnot(0, 0), {3, 1});
    EXPECT_NEAR(std::abs(t[0b101] - Complex(1)), 0, kTol);
}

TEST(state_vector, apply_gate_rejects_bad_targets) {
    StateVector s = init_register(3);
    const UnitaryGate x = make_faulty_1q(GateKind::X, 0);
    const UnitaryGate cx = make_faulty_cnot(0, 0);
    EXPECT_THROW(apply_gate(s, x, {0}), UsageError);
    EXPECT_THROW(apply_gate(s, x, {4}), UsageError);
    EXPECT_THROW(apply_gate(s, x, {1, 2}), UsageError);
    EXPECT_THROW(apply_gate(s, cx, {2, 2}), UsageError);
    EXPECT_THROW(apply_gate(s, cx, {1}), UsageError);
}

TEST(state_vector, unitary_gate_rejects_non_unitary) {
    EXPECT_THROW(UnitaryGate(Matrix2{1, 0, 0, 2}), UsageError);
    EXPECT_THROW(UnitaryGate(Matrix2{1, 1e-9, 0, 1}), UsageError);
}

TEST(state_vector, norm_preservation_property) {
    Rng rng(7);
    for (int trial = 0; trial < 200; trial++) {
        const int n = 1 + static_cast<int>(rng.uniform_int(1, 6));
        StateVector s = random_state(n, rng);
        if (rng.uniform() < 0.5) {
            const int q = static_cast<int>(rng.uniform_int(1, static_cast<std::uint64_t>(n)));
            apply_gate(s, random_1q(rng), {q});
        } else {
            const int a = static_cast<int>(rng.uniform_int(1, static_cast<std::uint64_t>(n)));
            int b = static_cast<int>(rng.uniform_int(1, static_cast<std::uint64_t>(n - 1)));
            if (b >= a) {
                b++;
            }
            apply_gate(s, make_faulty_cnot(-3 + 6 * rng.uniform(), -3 + 6 * rng.uniform()), {a, b});
        }
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-9);
    }
}

TEST(state_vector, composition_with_adjoint_restores_state) {
    Rng rng(11);
    for (int trial = 0; trial < 100; trial++) {
        StateVector s = random_state(4, rng);
        const StateVector before = s;
        const UnitaryGate g = make_faulty_cnot(rng.normal(), rng.normal());
        apply_gate(s, g, {3, 1});
        apply_gate(s, g.adjoint(), {3, 1});
        for (std::uint64_t i = 0; i < s.size(); i++) {
            EXPECT_NEAR(std::abs(s[i] - before[i]), 0, 1e-9);
        }
    }
}

TEST(state_vector, two_qubit_gate_matches_kron_oracle) {
    // (A (x) B) on wires (1, 2) of a 2-qubit register equals the dense product.
    Rng rng(3);
    const Matrix2 a = make_faulty_1q(GateKind::H, 0.3).matrix2();
    const Matrix2 b = make_faulty_1q(GateKind::Z, -0.7).matrix2();
    const Matrix4 ab = kron(a, b);
    StateVector s = random_state(2, rng);
    StateVector expected = s;
    std::vector<Complex> dense(4);
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            dense[r] += ab(r, c) * s[c];
        }
    }
    apply_gate(s, UnitaryGate(ab), {1, 2});
    apply_gate(expected, UnitaryGate(a), {1});
    apply_gate(expected, UnitaryGate(b), {2});
    for (int i = 0; i < 4; i++) {
        EXPECT_NEAR(std::abs(s[i] - dense[i]), 0, kTol);
        EXPECT_NEAR(std::abs(expected[i] - dense[i]), 0, kTol);
    }
}

TEST(state_vector, measure_basis_state) {
    Rng rng(1);
    StateVector s = StateVector::basis_state(1, 1);
    EXPECT_EQ(measure_qubits(s, {1}, rng).value, 1u);
}

TEST(state_vector, measure_collapses_superposition) {
    Rng rng(5);
    StateVector s = StateVector::from_amplitudes({kInvSqrt2, kInvSqrt2});
    const auto outcome = measure_qubits(s, {1}, rng);
    EXPECT_NEAR(std::abs(s[outcome.value]), 1.0, kTol);
    EXPECT_NEAR(std::abs(s[1 - outcome.value]), 0.0, kTol);
}

TEST(state_vector, measure_frequency_matches_born_rule) {
    // 10^4 fair coin flips: 0.02 is about four standard deviations.
    int zeros = 0;
    for (int t = 0; t < 10000; t++) {
        Rng rng(stream_seed(99, StreamTag::kMeasurement, static_cast<std::uint64_t>(t)));
        StateVector s = StateVector::from_amplitudes({kInvSqrt2, kInvSqrt2});
        zeros += measure_qubits(s, {1}, rng).value == 0;
    }
    EXPECT_NEAR(zeros / 10000.0, 0.5, 0.02);
}

TEST(state_vector, measurement_outcome_bit_order) {
    Rng rng(2);
    StateVector s = StateVector::basis_state(4, 0b0110);
    const auto outcome = measure_qubits(s, {3, 1, 2}, rng);
    EXPECT_EQ(outcome.value, 0b101u);
    EXPECT_EQ(outcome.bit(0), 1);
    EXPECT_EQ(outcome.bit(1), 0);
    EXPECT_EQ(outcome.bit(2), 1);
}

TEST(state_vector, measurement_branches_sum_to_one) {
    Rng rng(17);
    for (int trial = 0; trial < 50; trial++) {
        StateVector s = random_state(5, rng);
        const std::vector<int> pos{2, 5, 3};
        double total = 0;
        for (const auto &b : measurement_branches(s, pos)) {
            total += b.probability;
        }
        EXPECT_NEAR(total, 1.0, 1e-9);
    }
}

TEST(state_vector, measure_is_deterministic_given_rng) {
    Rng rng(23);
    const StateVector s = random_state(6, rng);
    for (int t = 0; t < 20; t++) {
        StateVector a = s;
        StateVector b = s;
        Rng ra(static_cast<std::uint64_t>(t));
        Rng rb(static_cast<std::uint64_t>(t));
        EXPECT_EQ(measure_qubits(a, {1, 4, 6}, ra).value, measure_qubits(b, {1, 4, 6}, rb).value);
        for (std::uint64_t i = 0; i < a.size(); i++) {
            EXPECT_EQ(a[i], b[i]);
        }
    }
}

TEST(state_vector, overlap_examples) {
    const StateVector zero = StateVector::basis_state(1, 0);
    const StateVector one = StateVector::basis_state(1, 1);
    const StateVector plus = StateVector::from_amplitudes({kInvSqrt2, kInvSqrt2});
    EXPECT_NEAR(std::abs(overlap(zero, zero) - Complex(1)), 0, kTol);
    EXPECT_NEAR(std::abs(overlap(zero, one)), 0, kTol);
    EXPECT_NEAR(std::abs(overlap(zero, plus) - Complex(kInvSqrt2)), 0, kTol);
    EXPECT_THROW(overlap(zero, init_register(2)), UsageError);
}

TEST(state_vector, overlap_bounded_property) {
    Rng rng(29);
    for (int t = 0; t < 100; t++) {
        EXPECT_LE(std::abs(overlap(random_state(3, rng), random_state(3, rng))), 1 + 1e-9);
    }
}

TEST(state_vector, global_phase_comparison) {
    Rng rng(31);
    StateVector a = random_state(3, rng);
    std::vector<Complex> rotated(a.amplitudes().begin(), a.amplitudes().end());
    for (auto &x : rotated) {
        x *= std::polar(1.0, 1.234);
    }
    const StateVector b = StateVector::from_amplitudes(rotated);
    EXPECT_TRUE(equal_up_to_global_phase(a, b, 1e-12));
    EXPECT_NEAR(fidelity(a, b), 1.0, 1e-12);
    EXPECT_FALSE(equal_up_to_global_phase(a, random_state(3, rng), 1e-6));
}

TEST(state_vector, project_onto_span_examples) {
    const std::vector<StateVector> ghz_basis{StateVector::basis_state(3, 0), StateVector::basis_state(3, 7)};
    const Projection p0 = project_onto_span(init_register(3), ghz_basis);
    EXPECT_NEAR(p0.weight, 1.0, kTol);

    StateVector half = StateVector::from_amplitudes({kInvSqrt2, kInvSqrt2, 0, 0, 0, 0, 0, 0});
    const std::vector<StateVector> zero_only{StateVector::basis_state(3, 0)};
    const Projection p1 = project_onto_span(half, zero_only);
    EXPECT_NEAR(p1.weight, 0.5, kTol);
    EXPECT_NEAR(std::abs(p1.projected[0]), 1.0, kTol);

    EXPECT_THROW(project_onto_span(StateVector::basis_state(3, 1), ghz_basis), SubspaceError);
    EXPECT_NEAR(span_weight(StateVector::basis_state(3, 1), ghz_basis), 0.0, kTol);
}

TEST(state_vector, project_onto_span_rejects_non_orthonormal_basis) {
    const std::vector<StateVector> basis{StateVector::basis_state(2, 0), StateVector::basis_state(2, 0)};
    EXPECT_THROW(project_onto_span(init_register(2), basis), UsageError);
}

TEST(state_vector, projection_idempotent_property) {
    Rng rng(37);
    const std::vector<StateVector> basis{
        StateVector::basis_state(3, 1),
        StateVector::from_amplitudes({0, 0, kInvSqrt2, 0, 0, kInvSqrt2, 0, 0}),
    };
    for (int t = 0; t < 50; t++) {
        const Projection p = project_onto_span(random_state(3, rng), basis);
        EXPECT_NEAR(project_onto_span(p.projected, basis).weight, 1.0, 1e-9);
    }
}

TEST(state_vector, append_and_drop_qubits) {
    Rng rng(41);
    const StateVector s = random_state(3, rng);
    const StateVector wide = append_zero_qubits(s, 2);
    ASSERT_EQ(wide.num_qubits(), 5);
    const StateVector back = drop_trailing_qubits(wide, 2, 0);
    for (std::uint64_t i = 0; i < s.size(); i++) {
        EXPECT_EQ(back[i], s[i]);
    }
    EXPECT_THROW(drop_trailing_qubits(wide, 2, 1), UsageError);
}

}  // namespace
}  // namespace impq
