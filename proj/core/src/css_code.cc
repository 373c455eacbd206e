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

#include "impq/css_code.h"

#include <cmath>

#include "impq/error.h"
#include "impq/parallel.h"

namespace impq::css {

namespace {

constexpr std::array<int, 3> kEncoderHadamards{1, 2, 4};

struct Fanout {
    int control;
    std::array<int, 3> targets;
};
constexpr std::array<Fanout, 3> kEncoderFanouts{{
    {1, {3, 5, 7}},
    {2, {3, 6, 7}},
    {4, {5, 6, 7}},
}};

constexpr std::array<int, 3> kAncillaPositions{8, 9, 10};

StateVector codeword_state(bool complement) {
    std::vector<Complex> amps(std::size_t{1} << kDataQubits, Complex{0});
    const double a = 1.0 / std::sqrt(8.0);
    for (auto s : kLogicalZeroStrings) {
        std::uint8_t idx = complement ? static_cast<std::uint8_t>(~s & 0x7F) : s;
        amps[idx] = a;
    }
    return StateVector::from_amplitudes(std::move(amps));
}

void require_data_register(const StateVector &state) {
    if (state.num_qubits() != kDataQubits) {
        throw UsageError("CSS operations need a 7-qubit data register");
    }
}

void hadamard_layer(StateVector &state, NoiseSource &noise) {
    for (int q = 1; q <= kDataQubits; q++) {
        apply_gate(state, noise.gate(GateKind::H), {q});
    }
}

}  // namespace

const CodewordBasis &codeword_basis() {
    static const CodewordBasis basis{codeword_state(false), codeword_state(true)};
    return basis;
}

StateVector logical_state(Complex a, Complex b) {
    const auto &cb = codeword_basis();
    std::vector<Complex> amps(cb.logical_zero.size());
    for (std::size_t i = 0; i < amps.size(); i++) {
        amps[i] = a * cb.logical_zero[i] + b * cb.logical_one[i];
    }
    return StateVector::from_amplitudes(std::move(amps));
}

StateVector prepare_logical_zero(NoiseSource &noise) {
    StateVector state = init_register(kDataQubits);
    for (int q : kEncoderHadamards) {
        apply_gate(state, noise.gate(GateKind::H), {q});
    }
    for (const auto &f : kEncoderFanouts) {
        for (int t : f.targets) {
            apply_gate(state, noise.cnot(), {f.control, t});
        }
    }
    return state;
}

Syndrome extract_syndrome(StateVector &state, Sector sector, NoiseSource &noise, Rng &rng) {
    require_data_register(state);
    if (sector == Sector::kPhase) {
        hadamard_layer(state, noise);
    }
    StateVector work = append_zero_qubits(state, kAncillaQubits);
    for (std::size_t k = 0; k < kParityChecks.size(); k++) {
        for (int q : kParityChecks[k]) {
            apply_gate(work, noise.cnot(), {q, kAncillaPositions[k]});
        }
    }
    MeasurementOutcome m = measure_qubits(work, kAncillaPositions, rng);
    state = drop_trailing_qubits(work, kAncillaQubits, m.value);
    if (sector == Sector::kPhase) {
        hadamard_layer(state, noise);
    }
    return Syndrome{static_cast<int>(m.value)};
}

void apply_correction(StateVector &state, Syndrome s, Sector sector, NoiseSource &noise) {
    require_data_register(state);
    if (s.value < 0 || s.value > kDataQubits) {
        throw UsageError("syndrome out of range");
    }
    if (!s.detected()) {
        return;
    }
    GateKind kind = sector == Sector::kBit ? GateKind::X : GateKind::Z;
    apply_gate(state, noise.gate(kind), {s.value});
}

CycleSyndromes ec_cycle(StateVector &state, NoiseSource &noise, Rng &rng) {
    CycleSyndromes out;
    out.bit = extract_syndrome(state, Sector::kBit, noise, rng);
    apply_correction(state, out.bit, Sector::kBit, noise);
    out.phase = extract_syndrome(state, Sector::kPhase, noise, rng);
    apply_correction(state, out.phase, Sector::kPhase, noise);
    return out;
}

void logical_not(StateVector &state, NoiseSource &noise) {
    require_data_register(state);
    for (int q = 1; q <= kDataQubits; q++) {
        apply_gate(state, noise.gate(GateKind::X), {q});
    }
}

InCodeComponent code_projector_demo(const StateVector &state) {
    require_data_register(state);
    const auto &cb = codeword_basis();
    const std::array<StateVector, 2> basis{cb.logical_zero, cb.logical_one};
    Projection p = project_onto_span(state, basis);
    return {p.weight, std::move(p.projected)};
}

double in_code_weight(const StateVector &state) {
    require_data_register(state);
    const auto &cb = codeword_basis();
    return fidelity(cb.logical_zero, state) + fidelity(cb.logical_one, state);
}

double error_probability(const StateVector &ideal, const StateVector &actual) {
    const double e = 1.0 - fidelity(ideal, actual);
    return e < kErrorProbabilityResolution ? 0.0 : e;
}

std::vector<ECCycleRecord> run_repeated_not_trial(int cycles, const NoiseSpec &noise, std::uint64_t trial) {
    if (cycles < 1) {
        throw UsageError("cycles must be >= 1");
    }
    NoiseSource source(noise, trial);
    Rng rng(stream_seed(noise.master_seed, StreamTag::kMeasurement, trial));
    const auto &cb = codeword_basis();

    StateVector state = prepare_logical_zero(source);
    std::vector<ECCycleRecord> records;
    records.reserve(static_cast<std::size_t>(cycles));
    for (int cycle = 1; cycle <= cycles; cycle++) {
        logical_not(state, source);
        CycleSyndromes s = ec_cycle(state, source, rng);
        const StateVector &ideal = cycle % 2 == 0 ? cb.logical_zero : cb.logical_one;
        records.push_back({cycle, s.bit, s.phase, error_probability(ideal, state)});
    }
    return records;
}

std::vector<std::vector<ECCycleRecord>> run_repeated_not_experiment(int cycles, const NoiseSpec &noise, int trials,
                                                                    int jobs) {
    if (trials < 1) {
        throw UsageError("trials must be >= 1");
    }
    return map_trials(static_cast<std::size_t>(trials), jobs,
                      [&](std::size_t t) { return run_repeated_not_trial(cycles, noise, t); });
}

}  // namespace impq::css
