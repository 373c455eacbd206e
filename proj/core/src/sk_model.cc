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

#include "impq/sk_model.h"

#include <cmath>
#include <numbers>

#include "impq/error.h"

namespace impq::sk {

namespace {

// Search range for l = ln(1/p); exp(-700) is still a normal double.
constexpr double kMinLogInv = 1e-9;
constexpr double kMaxLogInv = 700.0;
constexpr int kScanPoints = 4000;

double base_scale(const SKParams &params) { return params.log_base == LogBase::kTwo ? std::numbers::ln2 : 1.0; }

// g(l) = eps^2 at p = exp(-l).
double total_error_sq(double l, const SKParams &params) {
    const double f = params.f0 * std::pow(l / base_scale(params), params.fidelity_power());
    const double p = std::exp(-l);
    return f * f + p * p;
}

double total_error_sq_slope(double l, const SKParams &params) {
    const double b = base_scale(params);
    const double e = params.fidelity_power();
    return 2.0 * e * params.f0 * params.f0 * std::pow(l / b, 2.0 * e - 1.0) / b - 2.0 * std::exp(-2.0 * l);
}

void check_precision(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw UsageError("precision p must lie in (0, 1)");
    }
}

}  // namespace

std::string_view fidelity_exponent_name(FidelityExponent mode) {
    return mode == FidelityExponent::kPaper ? "paper" : "walk";
}

void validate(const SKParams &params) {
    if (!std::isfinite(params.f0) || params.f0 < 0.0) {
        throw UsageError("f0 must be finite and >= 0");
    }
    if (!std::isfinite(params.c) || params.c <= 0.0) {
        throw UsageError("c must be finite and > 0");
    }
}

double sk_log(double p, const SKParams &params) {
    check_precision(p);
    return -std::log(p) / base_scale(params);
}

double sk_sequence_length(double p, const SKParams &params) {
    validate(params);
    return std::pow(sk_log(p, params), params.c);
}

double sk_fidelity_error(double p, const SKParams &params) {
    validate(params);
    return params.f0 * std::pow(sk_log(p, params), params.fidelity_power());
}

double sk_total_error(double p, const SKParams &params) {
    const double f = sk_fidelity_error(p, params);
    return std::hypot(f, p);
}

SKOptimum sk_optimal_precision(const SKParams &params) {
    validate(params);
    if (params.f0 == 0.0) {
        return {0.0, 0.0, true};
    }
    // Coarse scan on a log grid in l, then bisect the slope of g inside the
    // best bracket.
    const double log_lo = std::log(kMinLogInv);
    const double step = (std::log(kMaxLogInv) - log_lo) / (kScanPoints - 1);
    auto grid = [&](int i) { return std::exp(log_lo + step * i); };
    int best = 0;
    double best_g = total_error_sq(grid(0), params);
    for (int i = 1; i < kScanPoints; i++) {
        const double g = total_error_sq(grid(i), params);
        if (g < best_g) {
            best_g = g;
            best = i;
        }
    }
    double lo = grid(best > 0 ? best - 1 : 0);
    double hi = grid(best < kScanPoints - 1 ? best + 1 : kScanPoints - 1);
    double l_star = grid(best);
    if (total_error_sq_slope(lo, params) < 0.0 && total_error_sq_slope(hi, params) > 0.0) {
        for (int iter = 0; iter < 200 && hi - lo > 0.0; iter++) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) {
                break;
            }
            if (total_error_sq_slope(mid, params) < 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        const double cand = 0.5 * (lo + hi);
        if (total_error_sq(cand, params) <= best_g) {
            l_star = cand;
        }
    }
    const double p_star = std::exp(-l_star);
    return {p_star, std::sqrt(total_error_sq(l_star, params)), false};
}

}  // namespace impq::sk
