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

#ifndef IMPQ_SHOR_H
#define IMPQ_SHOR_H

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "impq/qft.h"
#include "impq/rng.h"

namespace impq::shor {

/// Largest modulus accepted anywhere in this module.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 20;
/// Largest modulus accepted by the two-register order-finding path.
inline constexpr std::uint64_t kMaxTwoRegisterModulus = 64;

/// Modulus must lie in 1..2^32.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

struct FactoringInstance {
    std::uint64_t modulus = 0;
    std::uint64_t base = 0;
};

/// `verified` means base^period == 1 (mod N) and no smaller positive exponent works.
struct PeriodResult {
    std::uint64_t period = 0;
    bool verified = false;
};

/// Multiplicative order by direct iteration of x -> a x mod N starting at a.
/// Throws UsageError when gcd(a, N) > 1 (the base already shares a factor).
PeriodResult classical_period(std::uint64_t base, std::uint64_t modulus);

/// True when `candidate` is exactly the multiplicative order of base mod N:
/// a^d == 1 and a^(d/p) != 1 for every prime p dividing d.
bool is_order(std::uint64_t base, std::uint64_t candidate, std::uint64_t modulus);

/// log N / log a. The order of a is never smaller than this.
double period_lower_bound(std::uint64_t base, std::uint64_t modulus);

enum class FactorStatus {
    kFound,
    kOddPeriod,
    /// a^(r/2) == -1 (mod N): s + 1 == 0 so gcd(N, s + 1) = N.
    kSquareRootOfMinusOne,
};

std::string_view factor_status_name(FactorStatus status);

struct FactorAttempt {
    FactorStatus status = FactorStatus::kOddPeriod;
    std::uint64_t p = 0;
    std::uint64_t q = 0;
};

/// (gcd(N, a^(r/2) - 1), gcd(N, a^(r/2) + 1)) for even r with a^(r/2) != -1.
FactorAttempt factors_from_period(std::uint64_t base, std::uint64_t period, std::uint64_t modulus);

/// Denominators q < N (q >= 2) of the continued-fraction convergents of
/// c / 2^L, each times 1..max_multiple, sorted and deduplicated.
/// c = 0 yields no candidates.
std::vector<std::uint64_t> continued_fraction_period(std::uint64_t measured, int num_qubits, std::uint64_t modulus,
                                                     int max_multiple = 1);

enum class OracleMode {
    /// Sample the second-register outcome, i.e. a uniform offset l in [0, r),
    /// and start from the periodic first-register state it leaves behind.
    kSampledOffset,
    /// Simulate |x>|0> -> |x>|a^x mod N> on both registers and measure the second.
    kTwoRegister,
};

/// One run of the order-finding circuit: periodic first register, input noise,
/// exact QFT, measurement. Returns the measured c in [0, 2^L).
std::uint64_t quantum_order_finding(const FactoringInstance &instance, int num_qubits, const NoisyInputSpec &noise,
                                    Rng &rng, OracleMode mode = OracleMode::kSampledOffset);

/// Smallest L with 2^L >= N^2.
int recommended_qubits(std::uint64_t modulus);

struct ShorOptions {
    int max_trials = 50;
    bool stop_on_success = true;
    int max_multiple = 1;
    OracleMode oracle = OracleMode::kSampledOffset;
};

struct ShorTrial {
    std::uint64_t trial = 0;
    std::uint64_t base = 0;
    bool shortcut = false;
    std::uint64_t measured = 0;
    /// Accepted period, 0 if no candidate passed is_order.
    std::uint64_t period = 0;
    bool verified = false;
    std::optional<FactorAttempt> attempt;

    bool succeeded() const { return attempt && attempt->status == FactorStatus::kFound; }
};

struct ShorReport {
    std::uint64_t modulus = 0;
    int num_qubits = 0;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> factors;
    /// Trials executed until the first success (or all of them on failure).
    int trials_used = 0;
    /// Successful trials / executed trials.
    double success_rate = 0;
    std::vector<ShorTrial> trials;
};

/// One seeded trial with base chosen uniformly from the units of Z_N (other
/// than 1). Deterministic in (seed, trial).
ShorTrial run_shor_trial(std::uint64_t modulus, int num_qubits, const NoisyInputSpec &noise, std::uint64_t seed,
                         std::uint64_t trial, const ShorOptions &options);

/// Same pipeline with a caller-chosen base; gcd(a, N) > 1 returns the factor
/// without running the quantum step.
ShorTrial run_shor_with_base(std::uint64_t modulus, std::uint64_t base, int num_qubits, const NoisyInputSpec &noise,
                             Rng &rng, const ShorOptions &options);

/// Trials 0, 1, ... until success (if options.stop_on_success) or max_trials.
ShorReport run_shor(std::uint64_t modulus, int num_qubits, const NoisyInputSpec &noise, std::uint64_t seed,
                    const ShorOptions &options, int jobs = 1);

}  // namespace impq::shor

#endif
