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

#ifndef IMPQ_SK_MODEL_H
#define IMPQ_SK_MODEL_H

#include <string_view>

namespace impq::sk {

enum class FidelityExponent {
    /// f = f0 log^2(1/p).
    kPaper,
    /// f = f0 log^(c/2)(1/p).
    kWalk,
};

enum class LogBase {
    kNatural,
    kTwo,
};

std::string_view fidelity_exponent_name(FidelityExponent mode);

struct SKParams {
    double f0 = 0;
    double c = 3.97;
    FidelityExponent exponent = FidelityExponent::kPaper;
    LogBase log_base = LogBase::kNatural;

    /// Exponent applied to log(1/p) in the fidelity term.
    double fidelity_power() const { return exponent == FidelityExponent::kPaper ? 2.0 : c / 2.0; }
};

/// Throws UsageError unless f0 >= 0 and c > 0 (both finite).
void validate(const SKParams &params);

/// log(1/p) in the configured base.
double sk_log(double p, const SKParams &params);

/// N = log^c(1/p). Throws UsageError for p outside (0, 1).
double sk_sequence_length(double p, const SKParams &params);

/// f(p) = f0 log^e(1/p).
double sk_fidelity_error(double p, const SKParams &params);

/// sqrt(f(p)^2 + p^2).
double sk_total_error(double p, const SKParams &params);

struct SKOptimum {
    double p_star = 0;
    double eps_min = 0;
    /// f0 == 0: the infimum sits at the boundary p -> 0 with eps -> 0.
    bool degenerate = false;
};

/// Global minimizer of sk_total_error over p in (0, 1).
SKOptimum sk_optimal_precision(const SKParams &params);

}  // namespace impq::sk

#endif
