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

#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "impq/error.h"
#include "impq/experiments.h"

namespace impq::cli {

namespace {

int to_int(ExitCode code) { return static_cast<int>(code); }

std::filesystem::path aggregate_path(const std::filesystem::path &out) {
    std::filesystem::path p = out;
    p.replace_filename(out.stem().string() + "_aggregate" + out.extension().string());
    return p;
}

void write_file(const std::filesystem::path &path, const std::function<void(std::ostream &)> &emit) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    emit(f);
    f.flush();
    if (!f) {
        throw IoError("failed writing " + path.string());
    }
}

int parse_jobs_env(const std::string &text) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != text.size() || text.empty()) {
        throw UsageError("IMPRECISEQ_JOBS must be an integer, got '" + text + "'");
    }
    return value;
}

}  // namespace

CliHooks hooks_from_environment() {
    CliHooks hooks;
    if (const char *env = std::getenv("IMPRECISEQ_JOBS"); env != nullptr) {
        hooks.jobs_env = env;
    }
    return hooks;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, const CliHooks &hooks) {
    CLI::App app{"Imprecise-gate quantum circuit experiments", "imprecise-q"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    int jobs = 0;
    std::string out_path;

    CLI::App *verify = app.add_subcommand("verify", "Check gate unitarity, the CNOT factorization and the R_y identity");
    int verify_samples = 1000;
    verify->add_option("--trials", verify_samples, "Random (eps0, eps1) samples")->capture_default_str();
    verify->add_option("--seed", seed, "Master seed")->capture_default_str();

    CLI::App *css = app.add_subcommand("css-repeat", "Repeated logical NOT with error correction on the 7-qubit code");
    CssRepeatConfig css_cfg;
    std::string css_mode = "fresh";
    css->add_option("--cycles", css_cfg.cycles, "NOT + correction cycles")->capture_default_str();
    css->add_option("--eps-max", css_cfg.eps_max, "Rotation errors are uniform on [-eps-max, eps-max]")
        ->capture_default_str();
    css->add_option("--trials", css_cfg.trials, "Independent trials")->capture_default_str();
    css->add_option("--mode", css_mode, "fresh: new error per application; fixed: one per gate kind")
        ->check(CLI::IsMember({"fresh", "fixed"}))
        ->capture_default_str();
    css->add_option("--seed", seed, "Master seed")->capture_default_str();
    css->add_option("--jobs", jobs, "Worker threads (0: available parallelism)")->capture_default_str();
    css->add_option("--out", out_path, "Per-trial CSV; the aggregate goes to <stem>_aggregate<ext>");

    CLI::App *qftn = app.add_subcommand("qft-noise", "Peak-hit rate of the QFT on a noisy periodic input");
    QftNoiseConfig qft_cfg;
    std::vector<double> sigmas;
    qftn->add_option("--qubits", qft_cfg.qubits, "Register size L")->capture_default_str();
    qftn->add_option("--period", qft_cfg.period, "Period r")->capture_default_str();
    qftn->add_option("--offset", qft_cfg.offset, "Offset l in [0, r)")->capture_default_str();
    qftn->add_option("--sigma", sigmas, "Noise standard deviation per real/imaginary part (repeatable)")
        ->allow_extra_args(false);
    qftn->add_option("--trials", qft_cfg.trials, "Trials per sigma")->capture_default_str();
    qftn->add_option("--seed", seed, "Master seed")->capture_default_str();
    qftn->add_option("--jobs", jobs, "Worker threads (0: available parallelism)")->capture_default_str();
    qftn->add_option("--out", out_path, "Output CSV path (stdout when omitted)");

    CLI::App *shor_cmd = app.add_subcommand("shor", "Factor a small odd modulus with simulated order finding");
    ShorConfig shor_cfg;
    std::vector<double> shor_sigma;
    shor_cmd->add_option("--modulus", shor_cfg.modulus, "Odd composite N")->required();
    shor_cmd->add_option("--qubits", shor_cfg.qubits, "First register size (0: smallest L with 2^L >= N^2)")
        ->capture_default_str();
    shor_cmd->add_option("--sigma", shor_sigma, "Input noise standard deviation")->allow_extra_args(false);
    shor_cmd->add_option("--trials", shor_cfg.trials, "Trials")->capture_default_str();
    shor_cmd->add_option("--seed", seed, "Master seed")->capture_default_str();
    shor_cmd->add_option("--jobs", jobs, "Worker threads (0: available parallelism)")->capture_default_str();
    shor_cmd->add_option("--out", out_path, "Per-trial CSV");

    CLI::App *skf = app.add_subcommand("sk-floor", "Error floor of a Solovay-Kitaev approximation");
    SkFloorConfig sk_cfg;
    skf->add_option("--f0", sk_cfg.f0, "Per-gate fidelity error")->required();
    skf->add_option("--c", sk_cfg.c, "Sequence-length exponent")->capture_default_str();
    skf->add_option("--mode", sk_cfg.mode, "paper, walk or both")
        ->check(CLI::IsMember({"paper", "walk", "both"}))
        ->capture_default_str();
    skf->add_option("--out", out_path, "Table CSV");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return to_int(ExitCode::kSuccess);
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return to_int(ExitCode::kSuccess);
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        if (app.get_subcommands().empty()) {
            err << app.help();
        }
        return to_int(ExitCode::kUsageError);
    }

    try {
        if (hooks.jobs_env) {
            jobs = parse_jobs_env(*hooks.jobs_env);
        }
        if (verify->parsed()) {
            VerifyConfig cfg{verify_samples, seed, hooks.corrupt_right_factor};
            const VerifyReport report = run_verify(cfg);
            write_verify_report(report.passed() ? out : err, report);
            return to_int(report.passed() ? ExitCode::kSuccess : ExitCode::kVerificationFailure);
        }
        if (css->parsed()) {
            css_cfg.seed = seed;
            css_cfg.jobs = jobs;
            css_cfg.mode = css_mode == "fixed" ? NoiseMode::kFixedPerGateKind : NoiseMode::kFreshPerApplication;
            if (css_cfg.eps_max == 0.0) {
                css_cfg.mode = NoiseMode::kOff;
            }
            const CssRepeatResult result = run_css_repeat(css_cfg);
            if (out_path.empty()) {
                write_css_trials_csv(out, result);
                write_css_summary(err, result);
            } else {
                const std::filesystem::path path(out_path);
                write_file(path, [&](std::ostream &f) { write_css_trials_csv(f, result); });
                write_file(aggregate_path(path), [&](std::ostream &f) { write_css_aggregate_csv(f, result); });
                write_css_summary(out, result);
            }
            return to_int(ExitCode::kSuccess);
        }
        if (qftn->parsed()) {
            qft_cfg.sigmas = sigmas.empty() ? std::vector<double>{0.0} : sigmas;
            qft_cfg.seed = seed;
            qft_cfg.jobs = jobs;
            const auto rows = run_qft_noise(qft_cfg);
            if (out_path.empty()) {
                write_qft_noise_csv(out, rows);
            } else {
                write_file(out_path, [&](std::ostream &f) { write_qft_noise_csv(f, rows); });
            }
            return to_int(ExitCode::kSuccess);
        }
        if (shor_cmd->parsed()) {
            if (shor_sigma.size() > 1) {
                throw UsageError("shor takes a single --sigma");
            }
            shor_cfg.sigma = shor_sigma.empty() ? 0.0 : shor_sigma.front();
            shor_cfg.seed = seed;
            shor_cfg.jobs = jobs;
            const shor::ShorReport report = run_shor_experiment(shor_cfg);
            if (!out_path.empty()) {
                write_file(out_path, [&](std::ostream &f) { write_shor_csv(f, report); });
            }
            write_shor_summary(out, report);
            return to_int(report.factors ? ExitCode::kSuccess : ExitCode::kVerificationFailure);
        }
        if (skf->parsed()) {
            const auto entries = run_sk_floor(sk_cfg);
            if (!out_path.empty()) {
                write_file(out_path, [&](std::ostream &f) { write_sk_table_csv(f, entries); });
            }
            write_sk_summary(out, entries);
            return to_int(ExitCode::kSuccess);
        }
    } catch (const IoError &e) {
        err << "i/o error: " << e.what() << "\n";
        return to_int(ExitCode::kIoError);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return to_int(ExitCode::kUsageError);
    } catch (const ResourceError &e) {
        err << "usage error: " << e.what() << "\n";
        return to_int(ExitCode::kUsageError);
    }
    return to_int(ExitCode::kUsageError);
}

}  // namespace impq::cli
