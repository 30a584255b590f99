// Copyright 2026 The groverlab Authors
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

#pragma once

#include <cstddef>
#include <span>
#include <string>

namespace groverlab::stats {

struct StatSummary {
    std::size_t n = 0;
    double mean = 0.0;
    double stdev = 0.0;    // sample, n-1 denominator
    double se_mean = 0.0;  // stdev / sqrt(n)
    double median = 0.0;   // midpoint of the middle pair for even n
    double min = 0.0;
    double max = 0.0;
};

// Throws InsufficientDataError for fewer than two values.
StatSummary summarize(std::span<const double> values);

struct TestResult {
    double statistic = 0.0;
    double df = 0.0;
    double p_value = 0.0;  // two-sided
    double ci_low = 0.0;   // for the mean
    double ci_high = 0.0;
    double null_value = 0.0;
};

// One-sample two-sided t test of mean == mu0 with a (1-alpha) CI.
TestResult t_test_mean(std::span<const double> values, double mu0, double alpha = 0.05);

// Same test driven by summarized data (n, sample mean, sample stdev) — the
// form used when only a table's printed summary rows are available.
TestResult t_test_mean_summary(std::size_t n, double mean, double stdev, double mu0,
                               double alpha = 0.05);

struct VarianceTest {
    double statistic = 0.0;  // (n-1) s^2 / sigma0^2
    double df = 0.0;
    double p_value = 0.0;    // two-sided: 2 * min(F, 1-F)
    double var_ci_low = 0.0;
    double var_ci_high = 0.0;
    double sd_ci_low = 0.0;
    double sd_ci_high = 0.0;
    double null_stdev = 0.0;
};

// Chi-square test of stdev == sigma0 with (1-alpha) CIs for the variance
// and the standard deviation.
VarianceTest variance_test(std::span<const double> values, double sigma0, double alpha = 0.05);
VarianceTest variance_test_summary(std::size_t n, double stdev, double sigma0,
                                   double alpha = 0.05);

std::string to_json(const StatSummary& summary);
std::string to_json(const TestResult& result);
std::string to_json(const VarianceTest& result);

}  // namespace groverlab::stats
