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

#ifndef IMPQ_EXPERIMENTS_H
#define IMPQ_EXPERIMENTS_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "impq/css_code.h"
#include "impq/noise.h"
#include "impq/shor.h"
#include "impq/sk_model.h"
#include "impq/stats.h"

namespace impq::cli {

enum class ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
    kIoError = 3,
};

/// Decimal rendering with 17 significant digits; "inf"/"nan" for non-finite values.
std::string format_real(double x);

// ---------------------------------------------------------------- verify

inline constexpr double kVerifyTolerance = 1e-12;

struct VerifyConfig {
    int samples = 1000;
    std::uint64_t seed = 0;
    /// Negative control: perturb the right CNOT factor before checking it.
    bool corrupt_right_factor = false;
};

struct VerifyFailure {
    std::string identity;
    double eps0 = 0;
    double eps1 = 0;
    double defect = 0;
};

struct VerifyReport {
    int samples = 0;
    double max_unitarity_defect = 0;
    double max_decomposition_defect = 0;
    double max_ry_defect = 0;
    /// First sample that exceeded kVerifyTolerance, per identity.
    std::vector<VerifyFailure> failures;

    bool passed() const { return failures.empty(); }
};

/// Draws (eps0, eps1) uniformly from [-pi, pi]^2 per sample.
VerifyReport run_verify(const VerifyConfig &config);
void write_verify_report(std::ostream &out, const VerifyReport &report);

// ---------------------------------------------------------------- css-repeat

struct CssRepeatConfig {
    int cycles = 700;
    double eps_max = 1e-5;
    int trials = 20;
    std::uint64_t seed = 0;
    NoiseMode mode = NoiseMode::kFreshPerApplication;
    int jobs = 1;
};

struct CssRepeatResult {
    std::vector<std::vector<css::ECCycleRecord>> trials;
    std::vector<double> cycle;
    std::vector<double> mean_error_prob;
    std::vector<double> stddev;
    LinearFit fit;
};

CssRepeatResult run_css_repeat(const CssRepeatConfig &config);
/// trial,cycle,bit_syndrome,phase_syndrome,error_prob
void write_css_trials_csv(std::ostream &out, const CssRepeatResult &result);
/// cycle,mean_error_prob,stddev
void write_css_aggregate_csv(std::ostream &out, const CssRepeatResult &result);
void write_css_summary(std::ostream &out, const CssRepeatResult &result);

// ---------------------------------------------------------------- qft-noise

struct QftNoiseConfig {
    int qubits = 10;
    std::uint64_t period = 4;
    std::uint64_t offset = 0;
    std::vector<double> sigmas{0.0};
    int trials = 1000;
    std::uint64_t seed = 0;
    int jobs = 1;
};

struct QftNoiseRow {
    double sigma = 0;
    /// Fraction of trials whose measured outcome landed in the peak window.
    double empirical_success = 0;
    /// Mean Born probability of the peak window over the same trials.
    double mean_window_probability = 0;
    double model_success = 0;
    double snr = 0;
    double snr_threshold = 0;
};

/// Trial t uses the same input-noise and measurement streams for every sigma.
std::vector<QftNoiseRow> run_qft_noise(const QftNoiseConfig &config);
/// sigma,empirical_success,model_success,snr,snr_threshold
void write_qft_noise_csv(std::ostream &out, const std::vector<QftNoiseRow> &rows);

/// Sigma at which predicted_success equals `target` for a noiseless peak power
/// of 1/r per peak. target = 1 gives 0.
double sigma_for_model_success(std::uint64_t period, int num_qubits, double target);

// ---------------------------------------------------------------- shor

struct ShorConfig {
    std::uint64_t modulus = 15;
    /// 0 selects shor::recommended_qubits(modulus).
    int qubits = 0;
    double sigma = 0;
    int trials = 50;
    std::uint64_t seed = 0;
    int jobs = 1;
};

/// Runs every trial; the report's factors come from the first success.
shor::ShorReport run_shor_experiment(const ShorConfig &config);
/// trial,base,measured,period,verified,outcome
void write_shor_csv(std::ostream &out, const shor::ShorReport &report);
void write_shor_summary(std::ostream &out, const shor::ShorReport &report);

// ---------------------------------------------------------------- sk-floor

struct SkFloorConfig {
    double f0 = 1e-4;
    double c = 3.97;
    /// "paper", "walk" or "both".
    std::string mode = "paper";
};

struct SkFloorEntry {
    sk::SKParams params;
    sk::SKOptimum optimum;
    /// log^c(1/p_star); 0 when degenerate.
    double sequence_length = 0;
};

inline constexpr int kSkTablePoints = 20;

/// Precisions p = 10^-1 ... 10^-20 used for the table.
std::vector<double> sk_table_precisions();

std::vector<SkFloorEntry> run_sk_floor(const SkFloorConfig &config);
/// mode,p,fidelity_error,total_error
void write_sk_table_csv(std::ostream &out, const std::vector<SkFloorEntry> &entries);
void write_sk_summary(std::ostream &out, const std::vector<SkFloorEntry> &entries);

}  // namespace impq::cli

#endif
