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

#include "groverlab/metrics/metrics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "groverlab/core/simulate.hpp"

namespace groverlab::metrics {

PopulationDistribution make_distribution(int n, std::vector<double> mass) {
    if (n < 1) throw std::invalid_argument("distribution needs n >= 1");
    if (mass.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("distribution length does not equal 2^n");
    }
    double total = 0.0;
    for (double& p : mass) {
        if (p < 0.0) {
            if (p < -1e-12) throw std::invalid_argument("distribution has negative mass");
            p = 0.0;
        }
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("distribution mass deviates from 1 by more than 1e-9");
    }
    return PopulationDistribution{n, std::move(mass)};
}

PopulationDistribution distribution_from_counts(const CountsHistogram& counts) {
    if (counts.shots == 0) throw std::invalid_argument("histogram has zero shots");
    std::vector<double> mass(std::size_t{1} << counts.n, 0.0);
    for (const auto& [label, c] : counts.counts) {
        mass[parse_basis_label(label)] = static_cast<double>(c) / static_cast<double>(counts.shots);
    }
    return make_distribution(counts.n, std::move(mass));
}

namespace {

void validate_marked(int n, const std::vector<std::uint64_t>& marked) {
    if (marked.empty()) throw std::invalid_argument("marked set must be nonempty");
    for (std::uint64_t m : marked) {
        if (m >= (std::uint64_t{1} << n)) {
            throw std::invalid_argument("marked state outside the register width");
        }
    }
}

}  // namespace

double asp(const CountsHistogram& counts, const std::vector<std::uint64_t>& marked) {
    validate_marked(counts.n, marked);
    std::uint64_t hits = 0;
    for (std::uint64_t m : marked) {
        const auto it = counts.counts.find(basis_label(m, counts.n));
        if (it != counts.counts.end()) hits += it->second;
    }
    return static_cast<double>(hits) / static_cast<double>(counts.shots);
}

double asp(const PopulationDistribution& dist, const std::vector<std::uint64_t>& marked) {
    validate_marked(dist.n, marked);
    double total = 0.0;
    for (std::uint64_t m : marked) total += dist.mass[m];
    return total;
}

double sso(const PopulationDistribution& expected, const PopulationDistribution& measured) {
    if (expected.n != measured.n) {
        throw std::invalid_argument("SSO requires distributions over the same register width");
    }
    double acc = 0.0;
    for (std::size_t m = 0; m < expected.mass.size(); ++m) {
        acc += std::sqrt(expected.mass[m] * measured.mass[m]);
    }
    return acc * acc;
}

MetricsReport metrics_report(const CountsHistogram& counts, const grover::OracleSpec& spec,
                             const std::string& backend_tag) {
    if (counts.n != spec.n) {
        throw std::invalid_argument("histogram width does not match oracle width");
    }
    const StateVector ideal = grover::expected_state(spec);
    const PopulationDistribution expected = make_distribution(spec.n, probabilities(ideal));
    const PopulationDistribution measured = distribution_from_counts(counts);

    MetricsReport report;
    report.asp = asp(counts, spec.marked);
    report.sso = sso(expected, measured);
    for (std::uint64_t m : spec.marked) report.marked.push_back(basis_label(m, spec.n));
    report.shots = counts.shots;
    report.backend = backend_tag;
    return report;
}

std::string to_json(const MetricsReport& report) {
    nlohmann::json j;
    j["asp"] = report.asp;
    j["sso"] = report.sso;
    j["marked"] = report.marked;
    j["shots"] = report.shots;
    j["backend"] = report.backend;
    return j.dump();
}

std::string to_csv_row(const MetricsReport& report) {
    std::ostringstream out;
    for (std::size_t i = 0; i < report.marked.size(); ++i) {
        if (i > 0) out << ' ';
        out << report.marked[i];
    }
    out << ',' << report.sso << ',' << report.asp;
    return out.str();
}

}  // namespace groverlab::metrics
