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

#ifndef IMPQ_NOISE_H
#define IMPQ_NOISE_H

#include <cstdint>

#include "impq/gates.h"
#include "impq/state_vector.h"

namespace impq {

enum class NoiseMode {
    /// Fresh i.i.d. uniform error on every gate application.
    kFreshPerApplication,
    /// One error per (trial, gate kind, matrix slot), reused by every application.
    kFixedPerGateKind,
    kOff,
};

/// Distribution of gate rotation errors: uniform on [-eps_max, +eps_max].
struct NoiseSpec {
    double eps_max = 0;
    std::uint64_t master_seed = 0;
    NoiseMode mode = NoiseMode::kFreshPerApplication;

    static NoiseSpec off() { return {0, 0, NoiseMode::kOff}; }
    static NoiseSpec uniform(double eps_max, std::uint64_t seed) {
        return {eps_max, seed, NoiseMode::kFreshPerApplication};
    }
};

/// Identifies one rotation-error draw. `slot` separates the two angles of a
/// CNOT (0 = control-0 block, 1 = control-1 block).
struct EpsilonContext {
    std::uint64_t trial = 0;
    std::uint64_t ordinal = 0;
    GateKind kind = GateKind::I;
    int slot = 0;
};

/// Stateless rotation-error draw: a pure function of (spec, context).
double sample_epsilon(const NoiseSpec &noise, const EpsilonContext &context);

/// Hands out faulty gates for one trial, numbering draws in application order.
class NoiseSource {
   public:
    NoiseSource(NoiseSpec spec, std::uint64_t trial) : spec_(spec), trial_(trial) {}

    double next_epsilon(GateKind kind, int slot = 0);

    UnitaryGate gate(GateKind kind);
    UnitaryGate cnot();

    const NoiseSpec &spec() const { return spec_; }
    std::uint64_t trial() const { return trial_; }
    std::uint64_t draws() const { return ordinal_; }

   private:
    NoiseSpec spec_;
    std::uint64_t trial_;
    std::uint64_t ordinal_ = 0;
};

}  // namespace impq

#endif
