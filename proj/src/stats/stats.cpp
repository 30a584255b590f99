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

#include "groverlab/stats/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "groverlab/errors.hpp"
#include "groverlab/stats/special_functions.hpp"

namespace groverlab::stats {

StatSummary summarize(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) throw InsufficientDataError("summary statistics need at least two values");

    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(n);

    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double stdev = std::sqrt(ss / static_cast<double>(n - 1));

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double median = (n % 2 == 1) ? sorted[n / 2]
                                       : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

    StatSummary s;
    s.n = n;
    s.mean = mean;
    s.stdev = stdev;
    s.se_mean = stdev / std::sqrt(static_cast<double>(n));
    s.median = median;
    s.min = sorted.front();
    s.max = sorted.back();
    return s;
}

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie strictly between 0 and 1");
    }
}

}  // namespace

TestResult t_test_mean_summary(std::size_t n, double mean, double stdev, double mu0,
                               double alpha) {
    if (n < 2) throw InsufficientDataError("t test needs at least two values");
    check_alpha(alpha);
    if (!(stdev > 0.0)) {
        throw std::invalid_argument("t test needs positive sample variance");
    }
    const double df = static_cast<double>(n - 1);
    const double se = stdev / std::sqrt(static_cast<double>(n));
    const double t = (mean - mu0) / se;
    const double tcrit = t_quantile(1.0 - alpha / 2.0, df);

    TestResult r;
    r.statistic = t;
    r.df = df;
    r.p_value = 2.0 * (1.0 - t_cdf(std::abs(t), df));
    r.ci_low = mean - tcrit * se;
    r.ci_high = mean + tcrit * se;
    r.null_value = mu0;
    return r;
}

TestResult t_test_mean(std::span<const double> values, double mu0, double alpha) {
    const StatSummary s = summarize(values);
    return t_test_mean_summary(s.n, s.mean, s.stdev, mu0, alpha);
}

VarianceTest variance_test_summary(std::size_t n, double stdev, double sigma0, double alpha) {
    if (n < 2) throw InsufficientDataError("variance test needs at least two values");
    check_alpha(alpha);
    if (!(sigma0 > 0.0)) throw std::invalid_argument("null stdev must be positive");
    if (!(stdev > 0.0)) {
        throw std::invalid_argument("variance test needs positive sample variance");
    }
    const double df = static_cast<double>(n - 1);
    const double s2 = stdev * stdev;
    const double chi2 = df * s2 / (sigma0 * sigma0);
    const double cdf = chisq_cdf(chi2, df);
    const double hi_crit = chisq_quantile(1.0 - alpha / 2.0, df);
    const double lo_crit = chisq_quantile(alpha / 2.0, df);

    VarianceTest r;
    r.statistic = chi2;
    r.df = df;
    r.p_value = 2.0 * std::min(cdf, 1.0 - cdf);
    r.var_ci_low = df * s2 / hi_crit;
    r.var_ci_high = df * s2 / lo_crit;
    r.sd_ci_low = std::sqrt(r.var_ci_low);
    r.sd_ci_high = std::sqrt(r.var_ci_high);
    r.null_stdev = sigma0;
    return r;
}

VarianceTest variance_test(std::span<const double> values, double sigma0, double alpha) {
    const StatSummary s = summarize(values);
    return variance_test_summary(s.n, s.stdev, sigma0, alpha);
}

std::string to_json(const StatSummary& summary) {
    nlohmann::json j;
    j["n"] = summary.n;
    j["mean"] = summary.mean;
    j["stdev"] = summary.stdev;
    j["se_mean"] = summary.se_mean;
    j["median"] = summary.median;
    j["min"] = summary.min;
    j["max"] = summary.max;
    return j.dump();
}

std::string to_json(const TestResult& result) {
    nlohmann::json j;
    j["statistic"] = result.statistic;
    j["df"] = result.df;
    j["p_value"] = result.p_value;
    j["ci_low"] = result.ci_low;
    j["ci_high"] = result.ci_high;
    j["null_value"] = result.null_value;
    return j.dump();
}

std::string to_json(const VarianceTest& result) {
    nlohmann::json j;
    j["statistic"] = result.statistic;
    j["df"] = result.df;
    j["p_value"] = result.p_value;
    j["variance_ci_low"] = result.var_ci_low;
    j["variance_ci_high"] = result.var_ci_high;
    j["stdev_ci_low"] = result.sd_ci_low;
    j["stdev_ci_high"] = result.sd_ci_high;
    j["null_stdev"] = result.null_stdev;
    return j.dump();
}

}  // namespace groverlab::stats
