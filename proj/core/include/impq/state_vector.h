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

#ifndef IMPQ_STATE_VECTOR_H
#define IMPQ_STATE_VECTOR_H

#include <cstdint>
#include <initializer_list>
#include <span>
#include <variant>
#include <vector>

#include "impq/matrix.h"
#include "impq/rng.h"

namespace impq {

/// Largest register the dense engine will allocate (2^24 amplitudes, 256 MiB).
inline constexpr int kMaxQubits = 24;

/// Tolerance on |<psi|psi> - 1| that every normalizing operation promises.
inline constexpr double kNormTolerance = 1e-9;

/// Tolerance on ||U^dagger U - I||_max checked when a gate is constructed.
inline constexpr double kUnitarityTolerance = 1e-12;

/// A 1- or 2-qubit unitary. Construction fails unless the matrix is unitary
/// to within kUnitarityTolerance.
///
/// For a 2-qubit gate applied to targets (t1, t2), row/column index 2*b1 + b2
/// addresses the basis state where t1 holds b1 and t2 holds b2. For a
/// controlled gate t1 is the control.
class UnitaryGate {
   public:
    explicit UnitaryGate(const Matrix2 &m);
    explicit UnitaryGate(const Matrix4 &m);

    int arity() const { return std::holds_alternative<Matrix2>(matrix_) ? 1 : 2; }
    const Matrix2 &matrix2() const;
    const Matrix4 &matrix4() const;
    double unitarity_defect() const;

    /// Conjugate transpose.
    UnitaryGate adjoint() const;

   private:
    std::variant<Matrix2, Matrix4> matrix_;
};

/// Dense pure state over 2^L computational basis states.
///
/// Qubits are numbered 1..L from the top wire down. Qubit 1 is the most
/// significant bit of the basis index, so the label |q1 q2 ... qL> read as a
/// binary number is the index of its amplitude.
class StateVector {
   public:
    /// Copies `amplitudes` (length must be a power of two) and checks that the
    /// result is normalized within kNormTolerance.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    /// Computational basis state |index> on `num_qubits` qubits.
    static StateVector basis_state(int num_qubits, std::uint64_t index);

    int num_qubits() const { return num_qubits_; }
    std::size_t size() const { return amplitudes_.size(); }

    std::span<const Complex> amplitudes() const { return amplitudes_; }
    std::span<Complex> mutable_amplitudes() { return amplitudes_; }

    const Complex &operator[](std::uint64_t index) const { return amplitudes_[index]; }

    double norm_squared() const;

    /// Bit of `index` that holds the value of `qubit` (1-based) on this register.
    std::uint64_t qubit_mask(int qubit) const { return std::uint64_t{1} << (num_qubits_ - qubit); }

   private:
    StateVector(int num_qubits, std::vector<Complex> amplitudes);

    int num_qubits_;
    std::vector<Complex> amplitudes_;
};

/// |00...0> on `num_qubits` qubits. Throws ResourceError outside [1, kMaxQubits].
StateVector init_register(int num_qubits);

/// Applies `gate` to the listed 1-based qubit positions in place. The number of
/// targets must equal the gate's arity. Throws NumericalError if the norm
/// drifts by more than kNormTolerance; states are never silently renormalized.
void apply_gate(StateVector &state, const UnitaryGate &gate, std::span<const int> targets);
void apply_gate(StateVector &state, const UnitaryGate &gate, std::initializer_list<int> targets);

/// Outcome bits of a projective measurement. Bit k of `value` (counting from the
/// most significant of `num_bits`) is the result for the k-th listed qubit.
struct MeasurementOutcome {
    std::uint64_t value = 0;
    int num_bits = 0;

    int bit(int k) const { return static_cast<int>((value >> (num_bits - 1 - k)) & 1); }
};

/// Samples a Born-rule outcome for `positions`, collapses `state` onto it and
/// renormalizes. Zero-probability outcomes are never selected.
MeasurementOutcome measure_qubits(StateVector &state, std::span<const int> positions, Rng &rng);
MeasurementOutcome measure_qubits(StateVector &state, std::initializer_list<int> positions, Rng &rng);

/// One outcome of a projective measurement with its probability. `collapsed`
/// is only populated when probability exceeds 1e-12.
struct MeasurementBranch {
    MeasurementOutcome outcome;
    double probability = 0;
    std::vector<Complex> collapsed;
};

/// Every outcome of measuring `positions`, in increasing outcome order.
std::vector<MeasurementBranch> measurement_branches(const StateVector &state, std::span<const int> positions);

/// <a|b>
Complex overlap(const StateVector &a, const StateVector &b);

/// |<a|b>|^2
double fidelity(const StateVector &a, const StateVector &b);

/// True when b = e^{i phi} a within `tolerance` elementwise for some phase phi.
bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tolerance);

struct Projection {
    double weight = 0;
    StateVector projected;
};

/// Projects onto span(basis) and renormalizes. `basis` must be orthonormal
/// within 1e-9. Throws SubspaceError when the weight is below 1e-12.
Projection project_onto_span(const StateVector &state, std::span<const StateVector> basis);

/// sum_c |<c|state>|^2 over the orthonormal `basis`; never throws on zero weight.
double span_weight(const StateVector &state, std::span<const StateVector> basis);

/// |state> (x) |0...0> with `count` fresh qubits appended below the last wire.
StateVector append_zero_qubits(const StateVector &state, int count);

/// Drops the bottom `count` qubits of a state that is a product with the
/// basis state |trailing_value> on those qubits.
StateVector drop_trailing_qubits(const StateVector &state, int count, std::uint64_t trailing_value);

}  // namespace impq

#endif
