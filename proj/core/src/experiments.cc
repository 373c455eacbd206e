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

#include "impq/experiments.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "impq/error.h"
#include "impq/gates.h"
#include "impq/parallel.h"
#include "impq/qft.h"

namespace impq::cli {

std::string format_real(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    return fmt::format("{:.17g}", x);
}

// ---------------------------------------------------------------- verify

namespace {

void note_defect(VerifyReport &report, double &slot, std::string_view identity, double eps0, double eps1,
                 double defect) {
    slot = std::max(slot, defect);
    if (!(defect <= kVerifyTolerance)) {
        for (const auto &f : report.failures) {
            if (f.identity == identity) {
                return;
            }
        }
        report.failures.push_back({std::string(identity), eps0, eps1, defect});
    }
}

}  // namespace

VerifyReport run_verify(const VerifyConfig &config) {
    if (config.samples < 1) {
        throw UsageError("samples must be >= 1");
    }
    VerifyReport report;
    report.samples = config.samples;
    Rng rng(stream_seed(config.seed, StreamTag::kGateNoise, 0));
    constexpr double pi = std::numbers::pi;
    for (int i = 0; i < config.samples; i++) {
        const double eps0 = -pi + 2 * pi * rng.uniform();
        const double eps1 = -pi + 2 * pi * rng.uniform();
        for (GateKind kind : {GateKind::H, GateKind::X, GateKind::Z, GateKind::I}) {
            note_defect(report, report.max_unitarity_defect, "unitarity", eps0, eps1,
                        make_faulty_1q(kind, eps0).unitarity_defect());
        }
        note_defect(report, report.max_unitarity_defect, "unitarity", eps0, eps1,
                    impq::unitarity_defect(faulty_cnot_matrix(eps0, eps1)));

        CnotFactors factors = cnot_decomposition(eps0, eps1);
        if (config.corrupt_right_factor) {
            factors.right(3, 3) += 1e-6;
        }
        note_defect(report, report.max_decomposition_defect, "cnot_decomposition", eps0, eps1,
                    decomposition_defect(factors, eps0, eps1));

        CnotFactors pure = cnot_decomposition(0.0, eps1);
        if (config.corrupt_right_factor) {
            pure.right(3, 3) += 1e-6;
        }
        note_defect(report, report.max_ry_defect, "controlled_ry_equivalence", 0.0, eps1,
                    ry_conjugation_defect(pure.right, eps1));
    }
    return report;
}

void write_verify_report(std::ostream &out, const VerifyReport &report) {
    fmt::print(out, "samples: {}\n", report.samples);
    fmt::print(out, "max unitarity defect: {}\n", format_real(report.max_unitarity_defect));
    fmt::print(out, "max cnot_decomposition defect: {}\n", format_real(report.max_decomposition_defect));
    fmt::print(out, "max controlled_ry_equivalence defect: {}\n", format_real(report.max_ry_defect));
    for (const auto &f : report.failures) {
        fmt::print(out, "FAILED {}: defect {} at eps0={} eps1={}\n", f.identity, format_real(f.defect),
                   format_real(f.eps0), format_real(f.eps1));
    }
    fmt::print(out, "{}\n", report.passed() ? "all identities hold" : "verification failed");
}

// ---------------------------------------------------------------- css-repeat

CssRepeatResult run_css_repeat(const CssRepeatConfig &config) {
    if (config.cycles < 1) {
        throw UsageError("cycles must be >= 1");
    }
    if (config.trials < 1) {
        throw UsageError("trials must be >= 1");
    }
    if (!(config.eps_max >= 0) || !std::isfinite(config.eps_max)) {
        throw UsageError("eps-max must be finite and >= 0");
    }
    NoiseSpec noise{config.eps_max, config.seed, config.mode};
    CssRepeatResult result;
    result.trials = css::run_repeated_not_experiment(config.cycles, noise, config.trials, config.jobs);

    std::vector<double> column(static_cast<std::size_t>(config.trials));
    for (int c = 0; c < config.cycles; c++) {
        for (int t = 0; t < config.trials; t++) {
            column[static_cast<std::size_t>(t)] = result.trials[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)].error_prob;
        }
        result.cycle.push_back(c + 1);
        result.mean_error_prob.push_back(mean(column));
        result.stddev.push_back(sample_stddev(column));
    }
    result.fit = linear_fit(result.cycle, result.mean_error_prob);
    return result;
}

void write_css_trials_csv(std::ostream &out, const CssRepeatResult &result) {
    out << "trial,cycle,bit_syndrome,phase_syndrome,error_prob\n";
    for (std::size_t t = 0; t < result.trials.size(); t++) {
        for (const auto &r : result.trials[t]) {
            fmt::print(out, "{},{},{},{},{}\n", t, r.cycle, r.bit_syndrome.value, r.phase_syndrome.value,
                       format_real(r.error_prob));
        }
    }
}

void write_css_aggregate_csv(std::ostream &out, const CssRepeatResult &result) {
    out << "cycle,mean_error_prob,stddev\n";
    for (std::size_t i = 0; i < result.cycle.size(); i++) {
        fmt::print(out, "{},{},{}\n", static_cast<int>(result.cycle[i]), format_real(result.mean_error_prob[i]),
                   format_real(result.stddev[i]));
    }
}

void write_css_summary(std::ostream &out, const CssRepeatResult &result) {
    fmt::print(out, "slope: {}\n", format_real(result.fit.slope));
    fmt::print(out, "intercept: {}\n", format_real(result.fit.intercept));
    if (result.fit.r_squared_defined) {
        fmt::print(out, "r_squared: {}\n", format_real(result.fit.r_squared));
    } else {
        fmt::print(out, "r_squared: undefined (mean error probability is constant)\n");
    }
    if (!result.mean_error_prob.empty()) {
        fmt::print(out, "final_mean_error_prob: {}\n", format_real(result.mean_error_prob.back()));
    }
}

// ---------------------------------------------------------------- qft-noise

double sigma_for_model_success(std::uint64_t period, int num_qubits, double target) {
    if (!(target > 0 && target <= 1)) {
        throw UsageError("target success must lie in (0, 1]");
    }
    const double dim = std::ldexp(1.0, num_qubits);
    const double r = static_cast<double>(period);
    const double s = periodic_signal_power({num_qubits, period, 0});
    return std::sqrt(r * s * (1.0 / target - 1.0) / (2.0 * (dim - r)));
}

std::vector<QftNoiseRow> run_qft_noise(const QftNoiseConfig &config) {
    if (config.trials < 1) {
        throw UsageError("trials must be >= 1");
    }
    if (config.sigmas.empty()) {
        throw UsageError("at least one sigma is required");
    }
    const PeriodicStateSpec spec{config.qubits, config.period, config.offset};
    if (config.qubits < 1 || config.qubits > kMaxQubits) {
        throw ResourceError("qubits out of range");
    }
    if (config.period < 1 || config.period >= (std::uint64_t{1} << config.qubits)) {
        throw UsageError("period must satisfy 1 <= r < 2^qubits");
    }
    if (config.offset >= config.period) {
        throw UsageError("offset must satisfy 0 <= offset < period");
    }
    const StateVector clean = prepare_periodic(spec);
    const auto window = peak_window(config.period, config.qubits);
    const double signal = periodic_signal_power(spec);
    const double threshold = snr_threshold(config.period, config.qubits);
    std::vector<int> all(static_cast<std::size_t>(config.qubits));
    for (int q = 1; q <= config.qubits; q++) {
        all[static_cast<std::size_t>(q - 1)] = q;
    }

    std::vector<QftNoiseRow> rows;
    for (double sigma : config.sigmas) {
        if (!(sigma >= 0) || !std::isfinite(sigma)) {
            throw UsageError("sigma must be finite and >= 0");
        }
        const NoisyInputSpec noise{sigma};
        struct Outcome {
            bool hit;
            double window_probability;
        };
        auto outcomes = map_trials(static_cast<std::size_t>(config.trials), config.jobs, [&](std::size_t t) {
            StateVector state = clean;
            Rng noise_rng(stream_seed(config.seed, StreamTag::kInputNoise, t));
            Rng meas_rng(stream_seed(config.seed, StreamTag::kMeasurement, t));
            inject_noise(state, noise, noise_rng);
            qft(state);
            const double wp = success_probability(state, config.period, config.qubits);
            const std::uint64_t c = measure_qubits(state, all, meas_rng).value;
            const bool hit = std::find(window.begin(), window.end(), c) != window.end();
            return Outcome{hit, wp};
        });
        int hits = 0;
        std::vector<double> wps;
        wps.reserve(outcomes.size());
        for (const auto &o : outcomes) {
            hits += o.hit;
            wps.push_back(o.window_probability);
        }
        QftNoiseRow row;
        row.sigma = sigma;
        row.empirical_success = static_cast<double>(hits) / config.trials;
        row.mean_window_probability = mean(wps);
        row.model_success = predicted_success(config.period, config.qubits, signal, noise_power_per_bin(noise));
        row.snr = sigma == 0 ? std::numeric_limits<double>::infinity() : signal / noise_power_per_bin(noise);
        row.snr_threshold = threshold;
        rows.push_back(row);
    }
    return rows;
}

void write_qft_noise_csv(std::ostream &out, const std::vector<QftNoiseRow> &rows) {
    out << "sigma,empirical_success,model_success,snr,snr_threshold\n";
    for (const auto &r : rows) {
        fmt::print(out, "{},{},{},{},{}\n", format_real(r.sigma), format_real(r.empirical_success),
                   format_real(r.model_success), format_real(r.snr), format_real(r.snr_threshold));
    }
}

// ---------------------------------------------------------------- shor

shor::ShorReport run_shor_experiment(const ShorConfig &config) {
    if (config.trials < 1) {
        throw UsageError("trials must be >= 1");
    }
    if (!(config.sigma >= 0) || !std::isfinite(config.sigma)) {
        throw UsageError("sigma must be finite and >= 0");
    }
    const int qubits = config.qubits > 0 ? config.qubits : shor::recommended_qubits(config.modulus);
    shor::ShorOptions options;
    options.max_trials = config.trials;
    options.stop_on_success = false;
    return shor::run_shor(config.modulus, qubits, NoisyInputSpec{config.sigma}, config.seed, options, config.jobs);
}

namespace {

std::string trial_outcome(const shor::ShorTrial &t) {
    if (t.shortcut) {
        return "gcd_shortcut";
    }
    if (!t.verified) {
        return "no_period";
    }
    switch (t.attempt->status) {
        case shor::FactorStatus::kFound:
            return "found";
        case shor::FactorStatus::kOddPeriod:
            return "odd_period";
        case shor::FactorStatus::kSquareRootOfMinusOne:
            return "minus_one";
    }
    return "?";
}

}  // namespace

void write_shor_csv(std::ostream &out, const shor::ShorReport &report) {
    out << "trial,base,measured,period,verified,outcome\n";
    for (const auto &t : report.trials) {
        fmt::print(out, "{},{},{},{},{},{}\n", t.trial, t.base, t.measured, t.period, t.verified ? 1 : 0,
                   trial_outcome(t));
    }
}

void write_shor_summary(std::ostream &out, const shor::ShorReport &report) {
    fmt::print(out, "modulus: {}\n", report.modulus);
    fmt::print(out, "qubits: {}\n", report.num_qubits);
    if (report.factors) {
        fmt::print(out, "factors: {} {}\n", report.factors->first, report.factors->second);
    } else {
        fmt::print(out, "factors: none found\n");
    }
    fmt::print(out, "trials_used: {}\n", report.trials_used);
    fmt::print(out, "success_rate: {}\n", format_real(report.success_rate));
    fmt::print(out, "trial a c r verified\n");
    for (const auto &t : report.trials) {
        fmt::print(out, "{} {} {} {} {}\n", t.trial, t.base, t.measured, t.period, t.verified ? "yes" : "no");
    }
}

// ---------------------------------------------------------------- sk-floor

std::vector<double> sk_table_precisions() {
    std::vector<double> ps;
    for (int k = 1; k <= kSkTablePoints; k++) {
        ps.push_back(std::pow(10.0, -k));
    }
    return ps;
}

std::vector<SkFloorEntry> run_sk_floor(const SkFloorConfig &config) {
    std::vector<sk::FidelityExponent> modes;
    if (config.mode == "paper") {
        modes = {sk::FidelityExponent::kPaper};
    } else if (config.mode == "walk") {
        modes = {sk::FidelityExponent::kWalk};
    } else if (config.mode == "both") {
        modes = {sk::FidelityExponent::kPaper, sk::FidelityExponent::kWalk};
    } else {
        throw UsageError("mode must be paper, walk or both");
    }
    std::vector<SkFloorEntry> entries;
    for (auto m : modes) {
        SkFloorEntry e;
        e.params = sk::SKParams{config.f0, config.c, m, sk::LogBase::kNatural};
        e.optimum = sk::sk_optimal_precision(e.params);
        e.sequence_length = e.optimum.degenerate ? 0.0 : sk::sk_sequence_length(e.optimum.p_star, e.params);
        entries.push_back(e);
    }
    return entries;
}

void write_sk_table_csv(std::ostream &out, const std::vector<SkFloorEntry> &entries) {
    out << "mode,p,fidelity_error,total_error\n";
    for (const auto &e : entries) {
        for (double p : sk_table_precisions()) {
            fmt::print(out, "{},{},{},{}\n", sk::fidelity_exponent_name(e.params.exponent), format_real(p),
                       format_real(sk::sk_fidelity_error(p, e.params)), format_real(sk::sk_total_error(p, e.params)));
        }
    }
}

void write_sk_summary(std::ostream &out, const std::vector<SkFloorEntry> &entries) {
    for (const auto &e : entries) {
        const auto name = sk::fidelity_exponent_name(e.params.exponent);
        fmt::print(out, "[{}] f0={} c={} exponent={}\n", name, format_real(e.params.f0), format_real(e.params.c),
                   format_real(e.params.fidelity_power()));
        if (e.optimum.degenerate) {
            fmt::print(out, "[{}] degenerate: f0 = 0, infimum at p -> 0 with eps_min = 0\n", name);
            continue;
        }
        fmt::print(out, "[{}] p_star: {}\n", name, format_real(e.optimum.p_star));
        fmt::print(out, "[{}] eps_min: {}\n", name, format_real(e.optimum.eps_min));
        fmt::print(out, "[{}] N(p_star): {}\n", name, format_real(e.sequence_length));
    }
    fmt::print(out, "p fidelity_error total_error\n");
    for (const auto &e : entries) {
        fmt::print(out, "[{}]\n", sk::fidelity_exponent_name(e.params.exponent));
        for (double p : sk_table_precisions()) {
            fmt::print(out, "{} {} {}\n", format_real(p), format_real(sk::sk_fidelity_error(p, e.params)),
                       format_real(sk::sk_total_error(p, e.params)));
        }
    }
}

}  // namespace impq::cli
