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

#include <cstdint>
#include <string>
#include <vector>

#include "groverlab/core/types.hpp"
#include "groverlab/grover/grover.hpp"

namespace groverlab::metrics {

// Normalized population over 2^n basis states, indexed by basis integer.
struct PopulationDistribution {
    int n = 0;
    std::vector<double> mass;
};

// Checked constructor: masses nonnegative, summing to 1 within 1e-9.
PopulationDistribution make_distribution(int n, std::vector<double> mass);
PopulationDistribution distribution_from_counts(const CountsHistogram& counts);

// Success probability: total measured mass on the marked states.
double asp(const CountsHistogram& counts, const std::vector<std::uint64_t>& marked);
double asp(const PopulationDistribution& dist, const std::vector<std::uint64_t>& marked);

// Squared statistical overlap (sum_m sqrt(expected_m * measured_m))^2.
// Symmetric; 1 exactly when the distributions coincide.
double sso(const PopulationDistribution& expected, const PopulationDistribution& measured);

struct MetricsReport {
    double asp = 0.0;
    double sso = 0.0;
    std::vector<std::string> marked;
    std::uint64_t shots = 0;
    std::string backend;
};

// ASP against spec.marked and SSO against the one-iteration expected state.
MetricsReport metrics_report(const CountsHistogram& counts, const grover::OracleSpec& spec,
                             const std::string& backend_tag);

std::string to_json(const MetricsReport& report);
// One RFC-4180 row: marked;sso;asp columns after a label cell.
std::string to_csv_row(const MetricsReport& report);

}  // namespace groverlab::metrics
