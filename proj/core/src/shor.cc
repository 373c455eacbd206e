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

#include "impq/shor.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "impq/error.h"
#include "impq/gates.h"
#include "impq/parallel.h"

namespace impq::shor {

namespace {

void check_modulus(std::uint64_t modulus) {
    if (modulus < 3 || modulus > kMaxModulus) {
        throw ResourceError("modulus " + std::to_string(modulus) + " is outside the desk-scale range 3.." +
                            std::to_string(kMaxModulus));
    }
}

// Operands stay below 2^32 because moduli do.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a * b % m; }

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p * p <= n; p++) {
        if (n % p == 0) {
            primes.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        primes.push_back(n);
    }
    return primes;
}

std::vector<std::uint64_t> units_above_one(std::uint64_t modulus) {
    std::vector<std::uint64_t> units;
    for (std::uint64_t a = 2; a < modulus; a++) {
        if (std::gcd(a, modulus) == 1) {
            units.push_back(a);
        }
    }
    return units;
}

int bit_width_of(std::uint64_t n) { return static_cast<int>(std::bit_width(n)); }

/// |x>|y> -> |x>|y xor (a^x mod N)> on an (L + m)-qubit register, first register on top.
void apply_modexp_oracle(StateVector &state, int num_qubits, int second_qubits, std::uint64_t base,
                         std::uint64_t modulus) {
    auto amps = state.mutable_amplitudes();
    std::vector<Complex> out(amps.size(), Complex{0});
    const std::uint64_t second_dim = std::uint64_t{1} << second_qubits;
    const std::uint64_t first_dim = std::uint64_t{1} << num_qubits;
    std::uint64_t fx = 1;
    for (std::uint64_t x = 0; x < first_dim; x++) {
        for (std::uint64_t y = 0; y < second_dim; y++) {
            out[(x << second_qubits) | (y ^ fx)] = amps[(x << second_qubits) | y];
        }
        fx = mul_mod(fx, base, modulus);
    }
    std::copy(out.begin(), out.end(), amps.begin());
}

StateVector two_register_first_state(const FactoringInstance &inst, int num_qubits, Rng &rng) {
    const int second_qubits = bit_width_of(inst.modulus - 1);
    if (inst.modulus > kMaxTwoRegisterModulus || num_qubits + second_qubits > kMaxQubits) {
        throw ResourceError("two-register order finding is limited to N <= 64 and 24 qubits in total");
    }
    StateVector state = init_register(num_qubits + second_qubits);
    const UnitaryGate h = make_faulty_1q(GateKind::H, 0.0);
    for (int q = 1; q <= num_qubits; q++) {
        apply_gate(state, h, {q});
    }
    apply_modexp_oracle(state, num_qubits, second_qubits, inst.base, inst.modulus);
    std::vector<int> second(static_cast<std::size_t>(second_qubits));
    std::iota(second.begin(), second.end(), num_qubits + 1);
    MeasurementOutcome y = measure_qubits(state, second, rng);
    return drop_trailing_qubits(state, second_qubits, y.value);
}

}  // namespace

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
    if (modulus == 0 || modulus > (std::uint64_t{1} << 32)) {
        throw UsageError("modulus must lie in 1..2^32");
    }
    std::uint64_t result = 1 % modulus;
    base %= modulus;
    while (exponent > 0) {
        if (exponent & 1) {
            result = mul_mod(result, base, modulus);
        }
        base = mul_mod(base, base, modulus);
        exponent >>= 1;
    }
    return result;
}

PeriodResult classical_period(std::uint64_t base, std::uint64_t modulus) {
    check_modulus(modulus);
    if (base < 2 || base >= modulus) {
        throw UsageError("base must satisfy 1 < a < N");
    }
    if (std::gcd(base, modulus) != 1) {
        throw UsageError("gcd(a, N) > 1: the base already shares a factor with N");
    }
    std::uint64_t x = base;
    std::uint64_t r = 1;
    while (x != 1) {
        x = mul_mod(x, base, modulus);
        r++;
    }
    return {r, true};
}

bool is_order(std::uint64_t base, std::uint64_t candidate, std::uint64_t modulus) {
    if (candidate == 0 || mod_pow(base, candidate, modulus) != 1) {
        return false;
    }
    for (std::uint64_t p : prime_factors(candidate)) {
        if (mod_pow(base, candidate / p, modulus) == 1) {
            return false;
        }
    }
    return true;
}

double period_lower_bound(std::uint64_t base, std::uint64_t modulus) {
    if (base < 2) {
        throw UsageError("period_lower_bound needs a > 1");
    }
    return std::log(static_cast<double>(modulus)) / std::log(static_cast<double>(base));
}

std::string_view factor_status_name(FactorStatus status) {
    switch (status) {
        case FactorStatus::kFound:
            return "found";
        case FactorStatus::kOddPeriod:
            return "odd period";
        case FactorStatus::kSquareRootOfMinusOne:
            return "s + 1 == 0 (mod N)";
    }
    return "?";
}

FactorAttempt factors_from_period(std::uint64_t base, std::uint64_t period, std::uint64_t modulus) {
    if (period == 0 || mod_pow(base, period, modulus) != 1) {
        throw UsageError("period does not satisfy a^r == 1 (mod N)");
    }
    if (period % 2 != 0) {
        return {FactorStatus::kOddPeriod};
    }
    const std::uint64_t s = mod_pow(base, period / 2, modulus);
    if (s == modulus - 1) {
        return {FactorStatus::kSquareRootOfMinusOne};
    }
    // s != 1 as well, otherwise r / 2 would be a smaller period; the caller
    // guarantees r is the order.
    const std::uint64_t p = std::gcd(modulus, s - 1);
    const std::uint64_t q = std::gcd(modulus, s + 1);
    if (p <= 1 || q <= 1 || p >= modulus || q >= modulus) {
        throw NumericalError("gcd step produced a trivial factor; period was not the order");
    }
    return {FactorStatus::kFound, p, q};
}

std::vector<std::uint64_t> continued_fraction_period(std::uint64_t measured, int num_qubits, std::uint64_t modulus,
                                                     int max_multiple) {
    if (num_qubits < 1 || num_qubits > 62) {
        throw UsageError("qubit count out of range");
    }
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    if (measured >= dim) {
        throw UsageError("measured value must be below 2^L");
    }
    if (max_multiple < 1) {
        throw UsageError("max_multiple must be >= 1");
    }
    std::vector<std::uint64_t> out;
    if (measured == 0) {
        return out;
    }
    // Convergents h/k of measured/dim via the standard recurrence.
    std::uint64_t num = measured;
    std::uint64_t den = dim;
    std::uint64_t k_prev = 1;
    std::uint64_t k_cur = 0;
    while (den != 0) {
        const std::uint64_t a = num / den;
        const std::uint64_t k_next = a * k_cur + k_prev;
        if (k_next >= modulus) {
            break;
        }
        k_prev = k_cur;
        k_cur = k_next;
        if (k_cur >= 2) {
            for (int m = 1; m <= max_multiple; m++) {
                out.push_back(k_cur * static_cast<std::uint64_t>(m));
            }
        }
        const std::uint64_t rem = num - a * den;
        num = den;
        den = rem;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::uint64_t quantum_order_finding(const FactoringInstance &instance, int num_qubits, const NoisyInputSpec &noise,
                                    Rng &rng, OracleMode mode) {
    check_modulus(instance.modulus);
    if (num_qubits < 2 || num_qubits > kMaxQubits) {
        throw ResourceError("first register size out of range");
    }
    // Fixed draw pattern on `rng` whatever sigma is, so runs at different noise levels stay matched.
    Rng noise_rng(rng.engine()());
    StateVector first = [&] {
        if (mode == OracleMode::kTwoRegister) {
            return two_register_first_state(instance, num_qubits, rng);
        }
        const std::uint64_t r = classical_period(instance.base, instance.modulus).period;
        if (r >= (std::uint64_t{1} << num_qubits)) {
            throw UsageError("first register too small for the period");
        }
        const std::uint64_t offset = rng.uniform_int(0, r - 1);
        return prepare_periodic({num_qubits, r, offset});
    }();
    inject_noise(first, noise, noise_rng);
    qft(first);
    std::vector<int> all(static_cast<std::size_t>(num_qubits));
    std::iota(all.begin(), all.end(), 1);
    return measure_qubits(first, all, rng).value;
}

int recommended_qubits(std::uint64_t modulus) {
    int L = 1;
    while ((std::uint64_t{1} << L) < modulus * modulus) {
        L++;
    }
    return L;
}

ShorTrial run_shor_with_base(std::uint64_t modulus, std::uint64_t base, int num_qubits, const NoisyInputSpec &noise,
                             Rng &rng, const ShorOptions &options) {
    check_modulus(modulus);
    ShorTrial t;
    t.base = base;
    const std::uint64_t g = std::gcd(base, modulus);
    if (g != 1) {
        t.shortcut = true;
        t.attempt = FactorAttempt{FactorStatus::kFound, g, modulus / g};
        return t;
    }
    t.measured = quantum_order_finding({modulus, base}, num_qubits, noise, rng, options.oracle);
    for (std::uint64_t d : continued_fraction_period(t.measured, num_qubits, modulus, options.max_multiple)) {
        if (is_order(base, d, modulus)) {
            t.period = d;
            t.verified = true;
            break;
        }
    }
    if (t.verified) {
        t.attempt = factors_from_period(base, t.period, modulus);
    }
    return t;
}

ShorTrial run_shor_trial(std::uint64_t modulus, int num_qubits, const NoisyInputSpec &noise, std::uint64_t seed,
                         std::uint64_t trial, const ShorOptions &options) {
    check_modulus(modulus);
    const auto units = units_above_one(modulus);
    if (units.empty()) {
        throw UsageError("modulus has no units other than 1");
    }
    Rng choice(stream_seed(seed, StreamTag::kBaseChoice, trial));
    const std::uint64_t base = units[choice.uniform_int(0, units.size() - 1)];
    Rng rng(stream_seed(seed, StreamTag::kMeasurement, trial));
    ShorTrial t = run_shor_with_base(modulus, base, num_qubits, noise, rng, options);
    t.trial = trial;
    return t;
}

ShorReport run_shor(std::uint64_t modulus, int num_qubits, const NoisyInputSpec &noise, std::uint64_t seed,
                    const ShorOptions &options, int jobs) {
    check_modulus(modulus);
    if (modulus % 2 == 0) {
        throw UsageError("modulus must be odd");
    }
    if (options.max_trials < 1) {
        throw UsageError("max_trials must be >= 1");
    }
    ShorReport report;
    report.modulus = modulus;
    report.num_qubits = num_qubits;

    const std::size_t total = static_cast<std::size_t>(options.max_trials);
    const std::size_t batch = options.stop_on_success ? static_cast<std::size_t>(resolve_jobs(jobs)) : total;
    std::size_t done = 0;
    while (done < total && !report.factors) {
        const std::size_t n = std::min(batch, total - done);
        auto results = map_trials(n, jobs, [&](std::size_t i) {
            return run_shor_trial(modulus, num_qubits, noise, seed, done + i, options);
        });
        for (auto &t : results) {
            report.trials.push_back(std::move(t));
            const ShorTrial &last = report.trials.back();
            if (last.succeeded() && !report.factors) {
                auto [p, q] = std::minmax(last.attempt->p, last.attempt->q);
                report.factors = std::make_pair(p, q);
                report.trials_used = static_cast<int>(report.trials.size());
                if (options.stop_on_success) {
                    break;
                }
            }
        }
        done += n;
    }
    if (!report.factors) {
        report.trials_used = static_cast<int>(report.trials.size());
    }
    int wins = 0;
    for (const auto &t : report.trials) {
        wins += t.succeeded();
    }
    report.success_rate = static_cast<double>(wins) / static_cast<double>(report.trials.size());
    return report;
}

}  // namespace impq::shor
