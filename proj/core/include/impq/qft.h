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

#ifndef IMPQ_QFT_H
#define IMPQ_QFT_H

#include <cstdint>
#include <vector>

#include "impq/rng.h"
#include "impq/state_vector.h"

namespace impq {

/// f(a) = 1 when a mod r == offset, on an L-qubit register.
struct PeriodicStateSpec {
    int num_qubits = 0;
    std::uint64_t period = 1;
    std::uint64_t offset = 0;
};

/// Per-amplitude input noise: an independent complex Gaussian with variance
/// sigma^2 on each of the real and imaginary parts.
struct NoisyInputSpec {
    double sigma = 0;
};

/// Uniform superposition over {a : a mod r == offset}, normalized by the true
/// support size (which can differ from ceil(2^L / r) by one depending on the offset).
StateVector prepare_periodic(const PeriodicStateSpec &spec);

/// Number of basis states in the support of prepare_periodic(spec).
std::uint64_t periodic_support_size(const PeriodicStateSpec &spec);

/// Exact transform f~(c) = 2^{-L/2} sum_a exp(+2 pi i a c / 2^L) f(a),
/// computed with an in-place radix-2 FFT.
void qft(StateVector &state);
void inverse_qft(StateVector &state);

/// Adds the noise described by `spec` to every amplitude and renormalizes.
void inject_noise(StateVector &state, const NoisyInputSpec &spec, Rng &rng);

/// The r basis states nearest to k 2^L / r, k = 0..r-1 (exact multiples when r | 2^L).
std::vector<std::uint64_t> peak_window(std::uint64_t period, int num_qubits);

/// Total probability on peak_window(period, num_qubits).
double success_probability(const StateVector &state_after_qft, std::uint64_t period, int num_qubits);

/// r |f~|^2 / (r |f~|^2 + (2^L - r) |e~|^2): the chance of landing on a peak when
/// every peak carries power `signal_power` and every other bin carries
/// `noise_power_per_bin`.
double predicted_success(std::uint64_t period, int num_qubits, double signal_power, double noise_power_per_bin);

/// 2^L / r, the scale the peak-to-noise power ratio must greatly exceed.
double snr_threshold(std::uint64_t period, int num_qubits);

/// Expected per-bin noise power E|e~(c)|^2 = 2 sigma^2 produced by inject_noise.
inline double noise_power_per_bin(const NoisyInputSpec &spec) { return 2.0 * spec.sigma * spec.sigma; }

/// Mean noiseless peak power success_probability(qft(periodic)) / r.
double periodic_signal_power(const PeriodicStateSpec &spec);

}  // namespace impq

#endif
