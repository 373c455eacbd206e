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

#include "impq/noise.h"

#include "impq/error.h"
#include "impq/rng.h"

namespace impq {

double sample_epsilon(const NoiseSpec &noise, const EpsilonContext &context) {
    if (noise.mode == NoiseMode::kOff || noise.eps_max == 0) {
        return 0.0;
    }
    if (!(noise.eps_max > 0)) {
        throw UsageError("eps_max must be >= 0");
    }
    const std::uint64_t trial_key = stream_seed(noise.master_seed, StreamTag::kGateNoise, context.trial);
    std::uint64_t draw_index;
    if (noise.mode == NoiseMode::kFixedPerGateKind) {
        draw_index = (std::uint64_t{1} << 63) | (static_cast<std::uint64_t>(context.kind) << 8) |
                     static_cast<std::uint64_t>(context.slot);
    } else {
        draw_index = context.ordinal;
    }
    const double u = unit_interval(mix_seed(trial_key, draw_index));
    return noise.eps_max * (2.0 * u - 1.0);
}

double NoiseSource::next_epsilon(GateKind kind, int slot) {
    EpsilonContext ctx{trial_, ordinal_++, kind, slot};
    return sample_epsilon(spec_, ctx);
}

UnitaryGate NoiseSource::gate(GateKind kind) {
    return make_faulty_1q(kind, next_epsilon(kind));
}

UnitaryGate NoiseSource::cnot() {
    double eps0 = next_epsilon(GateKind::CNOT, 0);
    double eps1 = next_epsilon(GateKind::CNOT, 1);
    return make_faulty_cnot(eps0, eps1);
}

}  // namespace impq
