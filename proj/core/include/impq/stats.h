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

#ifndef IMPQ_STATS_H
#define IMPQ_STATS_H

#include <span>

namespace impq {

/// Sums are accumulated left to right so results are bit-reproducible.
double mean(std::span<const double> xs);

/// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
double sample_stddev(std::span<const double> xs);

struct LinearFit {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
    /// False when the responses have zero variance, which leaves R^2 undefined.
    bool r_squared_defined = false;
};

/// Ordinary least squares y = slope * x + intercept.
LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys);

}  // namespace impq

#endif
