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

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "impq/error.h"

namespace impq {

namespace {

void check_targets(int num_qubits, std::span<const int> targets) {
    for (std::size_t k = 0; k < targets.size(); k++) {
        int t = targets[k];
        if (t < 1 || t > num_qubits) {
            throw UsageError("qubit position " + std::to_string(t) + " is outside 1.." + std::to_string(num_qubits));
        }
        for (std::size_t j = 0; j < k; j++) {
            if (targets[j] == t) {
                throw UsageError("qubit position " + std::to_string(t) + " listed twice");
            }
        }
    }
}

void check_norm(const StateVector &state, const char *what) {
    double n = state.norm_squared();
    if (!(std::abs(n - 1.0) <= kNormTolerance)) {
        throw NumericalError(std::string(what) + ": norm drifted to " + std::to_string(n));
    }
}

/// Gathers the bits of `index` selected by `masks` into an outcome word, first mask most significant.
std::uint64_t gather(std::uint64_t index, std::span<const std::uint64_t> masks) {
    std::uint64_t v = 0;
    for (auto m : masks) {
        v = (v << 1) | ((index & m) != 0);
    }
    return v;
}

std::vector<std::uint64_t> masks_for(const StateVector &state, std::span<const int> positions) {
    std::vector<std::uint64_t> masks;
    masks.reserve(positions.size());
    for (int p : positions) {
        masks.push_back(state.qubit_mask(p));
    }
    return masks;
}

}  // namespace

UnitaryGate::UnitaryGate(const Matrix2 &m) : matrix_(m) {
    if (!(unitarity_defect() <= kUnitarityTolerance)) {
        throw UsageError("2x2 gate matrix is not unitary");
    }
}

UnitaryGate::UnitaryGate(const Matrix4 &m) : matrix_(m) {
    if (!(unitarity_defect() <= kUnitarityTolerance)) {
        throw UsageError("4x4 gate matrix is not unitary");
    }
}

const Matrix2 &UnitaryGate::matrix2() const {
    if (auto *m = std::get_if<Matrix2>(&matrix_)) {
        return *m;
    }
    throw UsageError("gate has arity 2, not 1");
}

const Matrix4 &UnitaryGate::matrix4() const {
    if (auto *m = std::get_if<Matrix4>(&matrix_)) {
        return *m;
    }
    throw UsageError("gate has arity 1, not 2");
}

double UnitaryGate::unitarity_defect() const {
    return std::visit([](const auto &m) { return impq::unitarity_defect(m); }, matrix_);
}

UnitaryGate UnitaryGate::adjoint() const {
    return std::visit([](const auto &m) { return UnitaryGate(m.adjoint()); }, matrix_);
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    std::size_t n = amplitudes.size();
    if (n < 2 || !std::has_single_bit(n)) {
        throw UsageError("amplitude count must be a power of two >= 2");
    }
    int num_qubits = std::countr_zero(n);
    if (num_qubits > kMaxQubits) {
        throw ResourceError("register of " + std::to_string(num_qubits) + " qubits exceeds the dense limit");
    }
    StateVector s(num_qubits, std::move(amplitudes));
    double norm = s.norm_squared();
    if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
        throw UsageError("amplitudes are not normalized (norm^2 = " + std::to_string(norm) + ")");
    }
    return s;
}

StateVector StateVector::basis_state(int num_qubits, std::uint64_t index) {
    StateVector s = init_register(num_qubits);
    if (index >= s.size()) {
        throw UsageError("basis index out of range");
    }
    s.amplitudes_[0] = 0;
    s.amplitudes_[index] = 1;
    return s;
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

StateVector init_register(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw ResourceError("register size " + std::to_string(num_qubits) + " is outside 1.." +
                            std::to_string(kMaxQubits));
    }
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    amps[0] = 1;
    return StateVector::from_amplitudes(std::move(amps));
}

void apply_gate(StateVector &state, const UnitaryGate &gate, std::span<const int> targets) {
    if (static_cast<int>(targets.size()) != gate.arity()) {
        throw UsageError("gate of arity " + std::to_string(gate.arity()) + " given " +
                         std::to_string(targets.size()) + " targets");
    }
    check_targets(state.num_qubits(), targets);
    auto amps = state.mutable_amplitudes();
    const std::uint64_t n = amps.size();

    if (gate.arity() == 1) {
        const Matrix2 &m = gate.matrix2();
        const std::uint64_t bit = state.qubit_mask(targets[0]);
        for (std::uint64_t i0 = 0; i0 < n; i0++) {
            if (i0 & bit) {
                continue;
            }
            std::uint64_t i1 = i0 | bit;
            Complex a0 = amps[i0];
            Complex a1 = amps[i1];
            amps[i0] = m(0, 0) * a0 + m(0, 1) * a1;
            amps[i1] = m(1, 0) * a0 + m(1, 1) * a1;
        }
    } else {
        const Matrix4 &m = gate.matrix4();
        const std::uint64_t hi = state.qubit_mask(targets[0]);
        const std::uint64_t lo = state.qubit_mask(targets[1]);
        for (std::uint64_t base = 0; base < n; base++) {
            if (base & (hi | lo)) {
                continue;
            }
            const std::uint64_t idx[4] = {base, base | lo, base | hi, base | hi | lo};
            Complex in[4];
            for (int k = 0; k < 4; k++) {
                in[k] = amps[idx[k]];
            }
            for (int r = 0; r < 4; r++) {
                amps[idx[r]] = m(r, 0) * in[0] + m(r, 1) * in[1] + m(r, 2) * in[2] + m(r, 3) * in[3];
            }
        }
    }
    check_norm(state, "apply_gate");
}

void apply_gate(StateVector &state, const UnitaryGate &gate, std::initializer_list<int> targets) {
    apply_gate(state, gate, std::span<const int>(targets.begin(), targets.size()));
}

MeasurementOutcome measure_qubits(StateVector &state, std::span<const int> positions, Rng &rng) {
    check_targets(state.num_qubits(), positions);
    if (positions.empty()) {
        throw UsageError("no qubits to measure");
    }
    const auto masks = masks_for(state, positions);
    const int k = static_cast<int>(positions.size());
    auto amps = state.mutable_amplitudes();

    std::vector<double> probs(std::size_t{1} << k, 0.0);
    for (std::uint64_t i = 0; i < amps.size(); i++) {
        probs[gather(i, masks)] += std::norm(amps[i]);
    }

    double total = 0;
    for (double p : probs) {
        total += p;
    }
    double target = rng.uniform() * total;
    std::uint64_t chosen = probs.size();
    double acc = 0;
    for (std::uint64_t v = 0; v < probs.size(); v++) {
        if (probs[v] <= 0) {
            continue;
        }
        chosen = v;
        acc += probs[v];
        if (target < acc) {
            break;
        }
    }
    if (chosen == probs.size()) {
        throw NumericalError("measure_qubits: state has no weight");
    }

    const double weight = probs[chosen];
    if (weight < 1e-12) {
        throw NumericalError("measure_qubits: collapsed norm below 1e-12");
    }
    const double scale = 1.0 / std::sqrt(weight);
    for (std::uint64_t i = 0; i < amps.size(); i++) {
        if (gather(i, masks) == chosen) {
            amps[i] *= scale;
        } else {
            amps[i] = 0;
        }
    }
    return {chosen, k};
}

MeasurementOutcome measure_qubits(StateVector &state, std::initializer_list<int> positions, Rng &rng) {
    return measure_qubits(state, std::span<const int>(positions.begin(), positions.size()), rng);
}

std::vector<MeasurementBranch> measurement_branches(const StateVector &state, std::span<const int> positions) {
    check_targets(state.num_qubits(), positions);
    const auto masks = masks_for(state, positions);
    const int k = static_cast<int>(positions.size());
    auto amps = state.amplitudes();

    std::vector<MeasurementBranch> branches(std::size_t{1} << k);
    for (std::uint64_t v = 0; v < branches.size(); v++) {
        branches[v].outcome = {v, k};
    }
    for (std::uint64_t i = 0; i < amps.size(); i++) {
        branches[gather(i, masks)].probability += std::norm(amps[i]);
    }
    for (auto &b : branches) {
        if (b.probability <= 1e-12) {
            continue;
        }
        const double scale = 1.0 / std::sqrt(b.probability);
        b.collapsed.assign(amps.size(), Complex{0});
        for (std::uint64_t i = 0; i < amps.size(); i++) {
            if (gather(i, masks) == b.outcome.value) {
                b.collapsed[i] = amps[i] * scale;
            }
        }
    }
    return branches;
}

Complex overlap(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw UsageError("overlap of states with different qubit counts");
    }
    Complex acc = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(overlap(a, b));
}

bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tolerance) {
    if (a.num_qubits() != b.num_qubits()) {
        return false;
    }
    Complex ov = overlap(a, b);
    Complex phase = std::abs(ov) > 0 ? ov / std::abs(ov) : Complex{1};
    for (std::size_t i = 0; i < a.size(); i++) {
        if (std::abs(a[i] * phase - b[i]) > tolerance) {
            return false;
        }
    }
    return true;
}

double span_weight(const StateVector &state, std::span<const StateVector> basis) {
    double weight = 0;
    for (const auto &c : basis) {
        weight += std::norm(overlap(c, state));
    }
    return weight;
}

Projection project_onto_span(const StateVector &state, std::span<const StateVector> basis) {
    for (std::size_t i = 0; i < basis.size(); i++) {
        for (std::size_t j = 0; j <= i; j++) {
            Complex g = overlap(basis[i], basis[j]);
            Complex expected = i == j ? Complex{1} : Complex{0};
            if (std::abs(g - expected) > 1e-9) {
                throw UsageError("projection basis is not orthonormal");
            }
        }
    }
    std::vector<Complex> out(state.size(), Complex{0});
    for (const auto &c : basis) {
        Complex coeff = overlap(c, state);
        for (std::size_t i = 0; i < out.size(); i++) {
            out[i] += coeff * c[i];
        }
    }
    double weight = 0;
    for (const auto &a : out) {
        weight += std::norm(a);
    }
    if (weight < 1e-12) {
        throw SubspaceError("state has no component in the subspace (weight " + std::to_string(weight) + ")");
    }
    const double scale = 1.0 / std::sqrt(weight);
    for (auto &a : out) {
        a *= scale;
    }
    return {weight, StateVector::from_amplitudes(std::move(out))};
}

StateVector append_zero_qubits(const StateVector &state, int count) {
    const int total = state.num_qubits() + count;
    if (count < 0 || total > kMaxQubits) {
        throw ResourceError("cannot grow register to " + std::to_string(total) + " qubits");
    }
    std::vector<Complex> out(std::size_t{1} << total, Complex{0});
    for (std::uint64_t x = 0; x < state.size(); x++) {
        out[x << count] = state[x];
    }
    return StateVector::from_amplitudes(std::move(out));
}

StateVector drop_trailing_qubits(const StateVector &state, int count, std::uint64_t trailing_value) {
    if (count < 1 || count >= state.num_qubits() || trailing_value >= (std::uint64_t{1} << count)) {
        throw UsageError("bad trailing-qubit slice");
    }
    std::vector<Complex> out(state.size() >> count);
    for (std::uint64_t x = 0; x < out.size(); x++) {
        out[x] = state[(x << count) | trailing_value];
    }
    // from_amplitudes rejects the slice if the state was not a product with |trailing_value>.
    return StateVector::from_amplitudes(std::move(out));
}

}  // namespace impq
