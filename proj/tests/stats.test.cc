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
#include <vector>

#include "gtest/gtest.h"

namespace impq {
namespace {

TEST(stats, mean_and_stddev) {
    const std::vector<double> xs{2, 4, 4, 4, 5, 5, 7, 9};
    EXPECT_DOUBLE_EQ(mean(xs), 5.0);
    EXPECT_NEAR(sample_stddev(xs), std::sqrt(32.0 / 7.0), 1e-15);
    EXPECT_EQ(sample_stddev(std::vector<double>{3.0}), 0.0);
}

TEST(stats, exact_line) {
    std::vector<double> x, y;
    for (int i = 1; i <= 20; i++) {
        x.push_back(i);
        y.push_back(3.5 * i - 2);
    }
    const LinearFit fit = linear_fit(x, y);
    EXPECT_NEAR(fit.slope, 3.5, 1e-12);
    EXPECT_NEAR(fit.intercept, -2, 1e-12);
    EXPECT_TRUE(fit.r_squared_defined);
    EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);
}

TEST(stats, noisy_line_against_closed_form) {
    const std::vector<double> x{1, 2, 3, 4, 5};
    const std::vector<double> y{1.1, 1.9, 3.2, 3.8, 5.1};
    // Worked by hand: Sxy = 9.9, Sxx = 10, Syy = 9.908.
    const LinearFit fit = linear_fit(x, y);
    EXPECT_NEAR(fit.slope, 0.99, 1e-12);
    EXPECT_NEAR(fit.intercept, 3.02 - 0.99 * 3, 1e-12);
    EXPECT_NEAR(fit.r_squared, 9.9 * 9.9 / (10 * 9.908), 1e-12);
}

TEST(stats, constant_response_leaves_r_squared_undefined) {
    const std::vector<double> x{1, 2, 3};
    const std::vector<double> y{0, 0, 0};
    const LinearFit fit = linear_fit(x, y);
    EXPECT_FALSE(fit.r_squared_defined);
    EXPECT_TRUE(std::isnan(fit.r_squared));
    EXPECT_EQ(fit.slope, 0.0);
}

}  // namespace
}  // namespace impq
