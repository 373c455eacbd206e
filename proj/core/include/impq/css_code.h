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

#ifndef IMPQ_CSS_CODE_H
#define IMPQ_CSS_CODE_H

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "impq/noise.h"
#include "impq/rng.h"
#include "impq/state_vector.h"

namespace impq::css {

inline constexpr int kDataQubits = 7;
inline constexpr int kAncillaQubits = 3;

/// Parity-check qubit sets, most significant syndrome bit first. A flip on
/// qubit q toggles exactly the checks whose bit is set in q, so the three
/// ancilla outcomes read as a binary number name the flipped wire.
inline constexpr std::array<std::array<int, 4>, 3> kParityChecks{{
    {4, 5, 6, 7},
    {2, 3, 6, 7},
    {1, 3, 5, 7},
}};

/// The eight 7-bit strings in the support of |0_L>, qubit 1 first.
inline constexpr std::array<std::uint8_t, 8> kLogicalZeroStrings{
    0b0000000, 0b0001111, 0b0110011, 0b0111100, 0b1010101, 0b1011010, 0b1100110, 0b1101001,
};

struct CodewordBasis {
    StateVector logical_zero;
    StateVector logical_one;
};

/// |0_L> = (1/sqrt 8) sum over kLogicalZeroStrings; |1_L> is its bitwise complement.
const CodewordBasis &codeword_basis();

/// a|0_L> + b|1_L>; (a, b) must be normalized.
StateVector logical_state(Complex a, Complex b);

/// Measured ancilla word: 0 means no error, 1..7 name a data wire.
struct Syndrome {
    int value = 0;

    bool detected() const { return value != 0; }
    bool operator==(const Syndrome &) const = default;
};

enum class Sector { kBit, kPhase };

/// Runs the encoder (H on 1, 2, 4; CNOT fan-outs 1->{3,5,7}, 2->{3,6,7},
/// 4->{5,6,7}) on |0000000> with gates drawn from `noise`. The ideal output is
/// |0_L> up to the global phase contributed by the three H(0) = iH gates.
StateVector prepare_logical_zero(NoiseSource &noise);

/// Appends three ancillas, CNOTs each data qubit in kParityChecks[k] onto
/// ancilla k, measures the ancillas and discards them. In the phase sector
/// every data qubit is conjugated by H before and after. `state` is replaced
/// by the post-measurement data state.
Syndrome extract_syndrome(StateVector &state, Sector sector, NoiseSource &noise, Rng &rng);

/// Applies X (bit sector) or Z (phase sector) on wire s.value; no-op for s = 0.
void apply_correction(StateVector &state, Syndrome s, Sector sector, NoiseSource &noise);

struct CycleSyndromes {
    Syndrome bit;
    Syndrome phase;
};

/// Bit-sector extraction and correction, then the phase sector.
CycleSyndromes ec_cycle(StateVector &state, NoiseSource &noise, Rng &rng);

/// Transversal X on the seven data qubits.
void logical_not(StateVector &state, NoiseSource &noise);

struct InCodeComponent {
    double weight = 0;
    StateVector state;
};

/// Projection of `state` onto span{|0_L>, |1_L>}. This component is invisible
/// to syndrome extraction. Throws SubspaceError when it is empty.
InCodeComponent code_projector_demo(const StateVector &state);

/// |<0_L|s>|^2 + |<1_L|s>|^2, zero allowed.
double in_code_weight(const StateVector &state);

/// Smallest error probability distinguishable from rounding in 1 - |<a|b>|^2.
inline constexpr double kErrorProbabilityResolution = 4 * std::numeric_limits<double>::epsilon();

/// 1 - |<ideal|actual>|^2, or 0 below kErrorProbabilityResolution.
double error_probability(const StateVector &ideal, const StateVector &actual);

struct ECCycleRecord {
    int cycle = 0;
    Syndrome bit_syndrome;
    Syndrome phase_syndrome;
    double error_prob = 0;
};

/// One trial of the repeated logical-NOT experiment: noisy |0_L> preparation,
/// then `cycles` rounds of {logical_not, ec_cycle, record}. The reference
/// after cycle k is |1_L> for odd k and |0_L> for even k.
std::vector<ECCycleRecord> run_repeated_not_trial(int cycles, const NoiseSpec &noise, std::uint64_t trial);

/// All trials, returned in trial order regardless of `jobs`.
std::vector<std::vector<ECCycleRecord>> run_repeated_not_experiment(int cycles, const NoiseSpec &noise, int trials,
                                                                    int jobs = 1);

}  // namespace impq::css

#endif
