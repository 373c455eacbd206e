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
#include <map>
#include <numeric>
#include <set>

#include "gtest/gtest.h"
#include "impq/error.h"

namespace impq::shor {
namespace {

std::uint64_t naive_order(std::uint64_t a, std::uint64_t n) {
    std::uint64_t x = 1;
    for (std::uint64_t r = 1; r <= n; r++) {
        x = x * a % n;
        if (x == 1) {
            return r;
        }
    }
    return 0;
}

TEST(shor, mod_pow_matches_repeated_multiplication) {
    for (std::uint64_t n : {2u, 15u, 21u, 97u, 1000u}) {
        for (std::uint64_t a = 0; a < n; a += 3) {
            std::uint64_t x = 1 % n;
            for (std::uint64_t e = 0; e < 40; e++) {
                EXPECT_EQ(mod_pow(a, e, n), x);
                x = x * a % n;
            }
        }
    }
    EXPECT_EQ(mod_pow(3, 1000000, 1), 0u);
    EXPECT_THROW(mod_pow(3, 2, 0), UsageError);
}

TEST(shor, classical_period_matches_naive_oracle) {
    for (std::uint64_t n = 3; n <= 300; n++) {
        for (std::uint64_t a = 2; a < n; a++) {
            if (std::gcd(a, n) != 1) {
                EXPECT_THROW(classical_period(a, n), UsageError);
                continue;
            }
            const PeriodResult r = classical_period(a, n);
            EXPECT_TRUE(r.verified);
            EXPECT_EQ(r.period, naive_order(a, n));
        }
    }
    EXPECT_EQ(classical_period(7, 15).period, 4u);
    EXPECT_EQ(classical_period(2, 21).period, 6u);
    EXPECT_THROW(classical_period(1, 15), UsageError);
    EXPECT_THROW(classical_period(2, kMaxModulus + 1), ResourceError);
}

TEST(shor, is_order_exhaustive) {
    for (std::uint64_t n = 3; n <= 120; n++) {
        for (std::uint64_t a = 2; a < n; a++) {
            if (std::gcd(a, n) != 1) {
                continue;
            }
            const std::uint64_t r = naive_order(a, n);
            for (std::uint64_t d = 0; d <= 2 * n; d++) {
                EXPECT_EQ(is_order(a, d, n), d == r) << a << " " << d << " " << n;
            }
        }
    }
}

TEST(shor, period_lower_bound_holds) {
    for (std::uint64_t n = 3; n <= 400; n++) {
        for (std::uint64_t a = 2; a < n; a++) {
            if (std::gcd(a, n) == 1) {
                EXPECT_LE(period_lower_bound(a, n), static_cast<double>(classical_period(a, n).period) + 1e-12);
            }
        }
    }
}

TEST(shor, factors_from_period_exhaustive) {
    for (std::uint64_t n : {15u, 21u, 33u, 35u}) {
        for (std::uint64_t a = 2; a < n; a++) {
            if (std::gcd(a, n) != 1) {
                continue;
            }
            const std::uint64_t r = naive_order(a, n);
            const FactorAttempt f = factors_from_period(a, r, n);
            if (r % 2 == 1) {
                EXPECT_EQ(f.status, FactorStatus::kOddPeriod);
            } else if (mod_pow(a, r / 2, n) == n - 1) {
                EXPECT_EQ(f.status, FactorStatus::kSquareRootOfMinusOne);
            } else {
                ASSERT_EQ(f.status, FactorStatus::kFound);
                EXPECT_EQ(f.p * f.q, n);
                EXPECT_GT(f.p, 1u);
                EXPECT_GT(f.q, 1u);
            }
        }
    }
}

TEST(shor, fourteen_mod_fifteen_is_minus_one_case) {
    EXPECT_EQ(factors_from_period(14, 2, 15).status, FactorStatus::kSquareRootOfMinusOne);
    EXPECT_EQ(factor_status_name(FactorStatus::kSquareRootOfMinusOne), "s + 1 == 0 (mod N)");
    EXPECT_THROW(factors_from_period(14, 3, 15), UsageError);
}

TEST(shor, continued_fraction_candidates) {
    // 64 / 256 = 1 / 4.
    EXPECT_EQ(continued_fraction_period(64, 8, 15), (std::vector<std::uint64_t>{4}));
    EXPECT_TRUE(continued_fraction_period(0, 8, 15).empty());
    // 128 / 256 = 1 / 2.
    EXPECT_EQ(continued_fraction_period(128, 8, 15), (std::vector<std::uint64_t>{2}));
    EXPECT_EQ(continued_fraction_period(128, 8, 15, 3), (std::vector<std::uint64_t>{2, 4, 6}));
    // 427 / 512 = [0; 1, 5, 42, 2]: denominators 1, 1, 6, 253, 512.
    EXPECT_EQ(continued_fraction_period(427, 9, 21), (std::vector<std::uint64_t>{6}));
    EXPECT_THROW(continued_fraction_period(512, 9, 21), UsageError);
}

TEST(shor, continued_fractions_recover_every_exact_peak) {
    // For each base of N = 21 and every peak k 2^L / r with gcd(k, r) = 1, the
    // order appears among the candidates.
    const std::uint64_t n = 21;
    const int L = recommended_qubits(n);
    for (std::uint64_t a = 2; a < n; a++) {
        if (std::gcd(a, n) != 1) {
            continue;
        }
        const std::uint64_t r = naive_order(a, n);
        for (std::uint64_t k = 1; k < r; k++) {
            if (std::gcd(k, r) != 1) {
                continue;
            }
            const std::uint64_t c = (2 * k * (std::uint64_t{1} << L) + r) / (2 * r);
            const auto cands = continued_fraction_period(c, L, n);
            EXPECT_NE(std::find(cands.begin(), cands.end(), r), cands.end()) << a << " " << k;
        }
    }
}

TEST(shor, recommended_qubits) {
    EXPECT_EQ(recommended_qubits(15), 8);
    EXPECT_EQ(recommended_qubits(21), 9);
    EXPECT_EQ(recommended_qubits(16), 8);
}

TEST(shor, end_to_end_fifteen_and_twenty_one) {
    ShorOptions options;
    for (auto [n, p, q] : {std::tuple{15u, 3u, 5u}, std::tuple{21u, 3u, 7u}}) {
        const ShorReport report = run_shor(n, recommended_qubits(n), {0.0}, 1, options);
        ASSERT_TRUE(report.factors.has_value());
        EXPECT_EQ(report.factors->first, p);
        EXPECT_EQ(report.factors->second, q);
        EXPECT_LE(report.trials_used, 50);
        EXPECT_EQ(static_cast<std::size_t>(report.trials_used), report.trials.size());
    }
}

TEST(shor, accepted_periods_equal_classical_oracle) {
    ShorOptions options;
    options.max_trials = 200;
    options.stop_on_success = false;
    for (std::uint64_t n : {15u, 21u, 33u, 35u}) {
        const ShorReport report = run_shor(n, recommended_qubits(n), {0.0}, 5, options);
        int verified = 0;
        for (const auto &t : report.trials) {
            if (t.verified) {
                verified++;
                EXPECT_EQ(t.period, classical_period(t.base, n).period);
            }
        }
        EXPECT_GT(verified, 0);
    }
}

TEST(shor, two_register_oracle_agrees_with_sampled_offset) {
    // Both paths leave a uniform periodic first register; for r | 2^L every
    // outcome is an exact peak and each peak has probability 1/r.
    const FactoringInstance inst{15, 7};
    const int L = 8;
    std::map<std::uint64_t, int> two_reg;
    std::map<std::uint64_t, int> sampled;
    const int n = 4000;
    for (int t = 0; t < n; t++) {
        Rng a(static_cast<std::uint64_t>(t));
        Rng b(static_cast<std::uint64_t>(t) + 1000000);
        two_reg[quantum_order_finding(inst, L, {0.0}, a, OracleMode::kTwoRegister)]++;
        sampled[quantum_order_finding(inst, L, {0.0}, b, OracleMode::kSampledOffset)]++;
    }
    for (const auto *hist : {&two_reg, &sampled}) {
        ASSERT_EQ(hist->size(), 4u);
        for (const auto &[c, count] : *hist) {
            EXPECT_EQ(c % 64, 0u);
            EXPECT_NEAR(count / static_cast<double>(n), 0.25, 0.03);
        }
    }
    Rng r(0);
    EXPECT_THROW(quantum_order_finding({65, 2}, 13, {0.0}, r, OracleMode::kTwoRegister), ResourceError);
}

TEST(shor, gcd_shortcut) {
    Rng rng(0);
    const ShorTrial t = run_shor_with_base(15, 5, 8, {0.0}, rng, ShorOptions{});
    EXPECT_TRUE(t.shortcut);
    ASSERT_TRUE(t.succeeded());
    EXPECT_EQ(t.attempt->p * t.attempt->q, 15u);
}

TEST(shor, trial_bases_are_units) {
    ShorOptions options;
    options.max_trials = 100;
    options.stop_on_success = false;
    const ShorReport report = run_shor(21, 9, {0.0}, 3, options);
    std::set<std::uint64_t> bases;
    for (const auto &t : report.trials) {
        EXPECT_EQ(std::gcd(t.base, 21u), 1u);
        EXPECT_FALSE(t.shortcut);
        bases.insert(t.base);
    }
    EXPECT_GT(bases.size(), 5u);
}

TEST(shor, deterministic_across_jobs) {
    ShorOptions options;
    options.max_trials = 40;
    options.stop_on_success = false;
    const ShorReport one = run_shor(35, 11, {0.02}, 9, options, 1);
    const ShorReport many = run_shor(35, 11, {0.02}, 9, options, 4);
    ASSERT_EQ(one.trials.size(), many.trials.size());
    for (std::size_t i = 0; i < one.trials.size(); i++) {
        EXPECT_EQ(one.trials[i].base, many.trials[i].base);
        EXPECT_EQ(one.trials[i].measured, many.trials[i].measured);
        EXPECT_EQ(one.trials[i].period, many.trials[i].period);
    }
    EXPECT_EQ(one.success_rate, many.success_rate);

    options.stop_on_success = true;
    const ShorReport s1 = run_shor(15, 8, {0.0}, 2, options, 1);
    const ShorReport s4 = run_shor(15, 8, {0.0}, 2, options, 4);
    EXPECT_EQ(s1.trials_used, s4.trials_used);
    EXPECT_EQ(s1.trials.size(), s4.trials.size());
}

TEST(shor, input_noise_lowers_success) {
    ShorOptions options;
    options.max_trials = 1500;
    options.stop_on_success = false;
    const double clean = run_shor(15, 8, {0.0}, 4, options).success_rate;
    const double noisy = run_shor(15, 8, {1.0}, 4, options).success_rate;
    EXPECT_LT(noisy, clean);
}

TEST(shor, rejects_bad_moduli) {
    ShorOptions options;
    EXPECT_THROW(run_shor(16, 8, {0.0}, 0, options), UsageError);
    EXPECT_THROW(run_shor(kMaxModulus + 1, 20, {0.0}, 0, options), ResourceError);
    options.max_trials = 0;
    EXPECT_THROW(run_shor(15, 8, {0.0}, 0, options), UsageError);
}

}  // namespace
}  // namespace impq::shor
