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

#include "impq/stats.h"

#include <cmath>
#include <limits>

#include "impq/error.h"

namespace impq {

double mean(std::span<const double> xs) {
    if (xs.empty()) {
        throw UsageError("mean of an empty range");
    }
    double total = 0;
    for (double x : xs) {
        total += x;
    }
    return total / static_cast<double>(xs.size());
}

double sample_stddev(std::span<const double> xs) {
    if (xs.size() < 2) {
        return 0.0;
    }
    const double m = mean(xs);
    double ss = 0;
    for (double x : xs) {
        ss += (x - m) * (x - m);
    }
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw UsageError("linear_fit needs two equally sized ranges of at least two points");
    }
    const double mx = mean(xs);
    const double my = mean(ys);
    double sxx = 0;
    double sxy = 0;
    double syy = 0;
    for (std::size_t i = 0; i < xs.size(); i++) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0) {
        throw UsageError("linear_fit needs at least two distinct x values");
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy == 0) {
        fit.r_squared = std::numeric_limits<double>::quiet_NaN();
        fit.r_squared_defined = false;
        return fit;
    }
    double ss_res = 0;
    for (std::size_t i = 0; i < xs.size(); i++) {
        const double r = ys[i] - (fit.slope * xs[i] + fit.intercept);
        ss_res += r * r;
    }
    fit.r_squared = 1.0 - ss_res / syy;
    fit.r_squared_defined = true;
    return fit;
}

}  // namespace impq
