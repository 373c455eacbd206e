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

#include "impq/qft.h"

#include <cmath>
#include <numbers>
#include <string>

#include "impq/error.h"

namespace impq {

namespace {

void validate(const PeriodicStateSpec &spec) {
    if (spec.num_qubits < 1 || spec.num_qubits > kMaxQubits) {
        throw ResourceError("periodic state register size out of range");
    }
    const std::uint64_t dim = std::uint64_t{1} << spec.num_qubits;
    if (spec.period < 1 || spec.period >= dim) {
        throw UsageError("period must satisfy 1 <= r < 2^L");
    }
    if (spec.offset >= spec.period) {
        throw UsageError("offset must be smaller than the period");
    }
}

// Keeps 2 k 2^L + r inside 64 bits in peak_window.
constexpr int kMaxWindowQubits = 30;

void check_period(std::uint64_t period, int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxWindowQubits) {
        throw UsageError("qubit count out of range");
    }
    if (period < 1 || period >= (std::uint64_t{1} << num_qubits)) {
        throw UsageError("period must satisfy 1 <= r < 2^L");
    }
}

void fft(std::span<Complex> a, double sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; i++) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(a[i], a[j]);
        }
    }
    // Twiddles come straight from std::polar so rounding does not accumulate with L.
    std::vector<Complex> twiddle(n / 2);
    for (std::size_t k = 0; k < n / 2; k++) {
        twiddle[k] = std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t step = n / len;
        for (std::size_t start = 0; start < n; start += len) {
            for (std::size_t k = 0; k < len / 2; k++) {
                Complex u = a[start + k];
                Complex v = a[start + k + len / 2] * twiddle[k * step];
                a[start + k] = u + v;
                a[start + k + len / 2] = u - v;
            }
        }
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (auto &x : a) {
        x *= scale;
    }
}

}  // namespace

std::uint64_t periodic_support_size(const PeriodicStateSpec &spec) {
    validate(spec);
    const std::uint64_t dim = std::uint64_t{1} << spec.num_qubits;
    return (dim - spec.offset + spec.period - 1) / spec.period;
}

StateVector prepare_periodic(const PeriodicStateSpec &spec) {
    const std::uint64_t support = periodic_support_size(spec);
    const std::uint64_t dim = std::uint64_t{1} << spec.num_qubits;
    std::vector<Complex> amps(dim, Complex{0});
    const double a = 1.0 / std::sqrt(static_cast<double>(support));
    for (std::uint64_t x = spec.offset; x < dim; x += spec.period) {
        amps[x] = a;
    }
    return StateVector::from_amplitudes(std::move(amps));
}

void qft(StateVector &state) {
    fft(state.mutable_amplitudes(), +1.0);
}

void inverse_qft(StateVector &state) {
    fft(state.mutable_amplitudes(), -1.0);
}

void inject_noise(StateVector &state, const NoisyInputSpec &spec, Rng &rng) {
    if (!(spec.sigma >= 0)) {
        throw UsageError("sigma must be >= 0");
    }
    if (spec.sigma == 0) {
        return;
    }
    auto amps = state.mutable_amplitudes();
    double norm = 0;
    for (auto &a : amps) {
        const double re = rng.normal();
        const double im = rng.normal();
        a += Complex{spec.sigma * re, spec.sigma * im};
        norm += std::norm(a);
    }
    if (norm < 1e-300) {
        throw NumericalError("inject_noise produced a zero vector");
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (auto &a : amps) {
        a *= scale;
    }
}

std::vector<std::uint64_t> peak_window(std::uint64_t period, int num_qubits) {
    check_period(period, num_qubits);
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    std::vector<std::uint64_t> peaks;
    peaks.reserve(period);
    for (std::uint64_t k = 0; k < period; k++) {
        if (dim % period == 0) {
            peaks.push_back(k * (dim / period));
        } else {
            // Nearest integer to k 2^L / r with ties rounded up: floor((2 k 2^L + r) / 2r).
            const std::uint64_t num = 2 * k * dim + period;
            peaks.push_back(num / (2 * period) % dim);
        }
    }
    return peaks;
}

double success_probability(const StateVector &state_after_qft, std::uint64_t period, int num_qubits) {
    if (state_after_qft.num_qubits() != num_qubits) {
        throw UsageError("register size does not match num_qubits");
    }
    double total = 0;
    for (auto c : peak_window(period, num_qubits)) {
        total += std::norm(state_after_qft[c]);
    }
    return total;
}

double predicted_success(std::uint64_t period, int num_qubits, double signal_power, double noise_power_per_bin) {
    check_period(period, num_qubits);
    if (!(signal_power >= 0) || !(noise_power_per_bin >= 0)) {
        throw UsageError("powers must be nonnegative");
    }
    const double r = static_cast<double>(period);
    const double dim = std::ldexp(1.0, num_qubits);
    const double signal = r * signal_power;
    const double denom = signal + (dim - r) * noise_power_per_bin;
    if (denom == 0) {
        throw UsageError("predicted_success: signal and noise power are both zero");
    }
    return signal / denom;
}

double snr_threshold(std::uint64_t period, int num_qubits) {
    if (period < 1) {
        throw UsageError("period must be >= 1");
    }
    return std::ldexp(1.0, num_qubits) / static_cast<double>(period);
}

double periodic_signal_power(const PeriodicStateSpec &spec) {
    StateVector s = prepare_periodic(spec);
    qft(s);
    return success_probability(s, spec.period, spec.num_qubits) / static_cast<double>(spec.period);
}

}  // namespace impq
