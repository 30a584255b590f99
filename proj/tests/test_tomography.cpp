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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "groverlab/core/rng.hpp"
#include "groverlab/core/simulate.hpp"
#include "groverlab/errors.hpp"
#include "groverlab/grover/grover.hpp"
#include "groverlab/tomo/tomography.hpp"

using namespace groverlab;
using namespace groverlab::tomo;

namespace {

// The paper's five tomography cases.
std::vector<grover::OracleSpec> qst_cases() {
    using V = std::vector<std::string>;
    return {grover::make_oracle_spec(3, V{"010"}), grover::make_oracle_spec(3, V{"101"}),
            grover::make_oracle_spec(3, V{"000", "111"}),
            grover::make_oracle_spec(3, V{"101", "110"}),
            grover::make_oracle_spec(3, V{"101", "111"})};
}

Circuit case_circuit(const grover::OracleSpec& spec) {
    return grover::grover_circuit(grover::GroverPlan{spec, 1, 1});
}

SettingDistributions analytic_data(const Circuit& base) {
    SettingDistributions data;
    for (const BasisSetting& s : basis_settings(base.width())) {
        data[s] = probabilities(apply_circuit(zero_state(base.width()),
                                              measurement_circuit(base, s)));
    }
    return data;
}

}  // namespace

TEST_CASE("basis settings enumerate 3^n axes lexicographically") {
    const auto one = basis_settings(1);
    CHECK(one == std::vector<BasisSetting>{"X", "Y", "Z"});

    const auto two = basis_settings(2);
    REQUIRE(two.size() == 9);
    CHECK(two.front() == "XX");
    CHECK(two.back() == "ZZ");
    CHECK(std::is_sorted(two.begin(), two.end()));

    CHECK(basis_settings(3).size() == 27);
}

TEST_CASE("measurement circuit appends the right rotations") {
    Circuit base(2);
    const Circuit all_z = measurement_circuit(base, "ZZ");
    CHECK(all_z.size() == 0);

    // |+> measured in X is deterministic 0.
    Circuit plus(1);
    plus.add(GateKind::H, {0});
    const Circuit mx = measurement_circuit(plus, "X");
    const std::vector<double> px = probabilities(apply_circuit(zero_state(1), mx));
    CHECK(px[0] == doctest::Approx(1.0).epsilon(1e-12));

    // (|0> + i|1>)/sqrt(2) measured in Y is deterministic 0.
    Circuit y_eigen(1);
    y_eigen.add(GateKind::H, {0}).add(GateKind::S, {0});
    const Circuit my = measurement_circuit(y_eigen, "Y");
    const std::vector<double> py = probabilities(apply_circuit(zero_state(1), my));
    CHECK(py[0] == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(measurement_circuit(base, "Z"), std::invalid_argument);
    CHECK_THROWS_AS(measurement_circuit(base, "ZQ"), std::invalid_argument);
}

TEST_CASE("analytic estimates equal the direct Pauli expectations") {
    const grover::OracleSpec spec = grover::make_oracle_spec(3, std::vector<std::string>{"010"});
    const Circuit base = case_circuit(spec);
    const StateVector state = apply_circuit(zero_state(3), base);

    const auto est = estimate_expectations(analytic_data(base), 3);
    for (const auto& [pauli, value] : est) {
        CHECK(std::abs(value - pauli_expectation(state, pauli)) < 1e-12);
    }
    CHECK(est.at("III") == 1.0);
    CHECK(est.size() == 64);
}

TEST_CASE("ideal |000> counts give unit Z-type expectations") {
    SettingCounts data;
    for (const BasisSetting& s : basis_settings(3)) {
        CountsHistogram h{3, 1024, {}};
        if (s == "ZZZ") {
            h.counts["000"] = 1024;
        } else {
            // Deterministic only on Z positions; split the rest evenly.
            h.counts["000"] = 512;
            std::string other = "000";
            for (int i = 0; i < 3; ++i) {
                if (s[i] != 'Z') {
                    other[i] = '1';
                    break;
                }
            }
            h.counts[other] = 512;
        }
        data[s] = h;
    }
    const auto est = estimate_expectations(data, 3);
    CHECK(est.at("ZII") == doctest::Approx(1.0));
    CHECK(est.at("IZI") == doctest::Approx(1.0));
    CHECK(est.at("ZZI") == doctest::Approx(1.0));
}

TEST_CASE("missing settings are reported by name") {
    const Circuit base = case_circuit(grover::make_oracle_spec(3, std::vector<std::string>{"010"}));
    SettingDistributions data = analytic_data(base);
    data.erase("XYZ");
    CHECK_THROWS_WITH_AS(estimate_expectations(data, 3),
                         "missing tomography setting \"XYZ\"", IncompleteDataError);
}

TEST_CASE("linear inversion closed forms on one qubit") {
    std::map<std::string, double> exps{{"I", 1.0}, {"X", 0.0}, {"Y", 0.0}, {"Z", 1.0}};
    const std::vector<Complex> zero = linear_inversion(exps, 1);
    CHECK(std::abs(zero[0] - Complex{1, 0}) < 1e-12);
    CHECK(std::abs(zero[3]) < 1e-12);
    CHECK(std::abs(zero[1]) < 1e-12);

    std::map<std::string, double> mixed{{"I", 1.0}, {"X", 0.0}, {"Y", 0.0}, {"Z", 0.0}};
    const std::vector<Complex> half = linear_inversion(mixed, 1);
    CHECK(std::abs(half[0] - Complex{0.5, 0}) < 1e-12);
    CHECK(std::abs(half[3] - Complex{0.5, 0}) < 1e-12);

    mixed.erase("Y");
    CHECK_THROWS_AS(linear_inversion(mixed, 1), IncompleteDataError);
}

TEST_CASE("linear inversion reconstructs pure states from analytic expectations") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        // Random 3-qubit pure state via a random circuit.
        Circuit c(3);
        c.add(GateKind::H, {0}).add(GateKind::H, {1}).add(GateKind::H, {2});
        for (int g = 0; g < 12; ++g) {
            const int q = static_cast<int>(rng() % 3);
            switch (rng() % 4) {
                case 0: c.add(GateKind::S, {q}); break;
                case 1: c.add(GateKind::H, {q}); break;
                case 2: c.add(GateKind::CX, {q, (q + 1) % 3}); break;
                default: c.add(GateKind::Y, {q}); break;
            }
        }
        const StateVector psi = apply_circuit(zero_state(3), c);
        std::map<std::string, double> exps;
        const auto est = estimate_expectations(analytic_data(c), 3);
        const std::vector<Complex> raw = linear_inversion(est, 3);
        const DensityMatrix expect = density_from_state(psi);
        double worst = 0.0;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            worst = std::max(worst, std::abs(raw[i] - expect.entries[i]));
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("physical projection: already PSD input is unchanged") {
    const StateVector psi = grover::expected_state(
        grover::make_oracle_spec(3, std::vector<std::string>{"011"}));
    const DensityMatrix dm = density_from_state(psi);
    const DensityMatrix out = project_physical(dm.entries, 3);
    double worst = 0.0;
    for (std::size_t i = 0; i < dm.entries.size(); ++i) {
        worst = std::max(worst, std::abs(out.entries[i] - dm.entries[i]));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("physical projection: hand-run truncation of diag(1.1, -0.1)") {
    const std::vector<Complex> raw = {Complex{1.1, 0}, Complex{0, 0}, Complex{0, 0},
                                      Complex{-0.1, 0}};
    const DensityMatrix out = project_physical(raw, 1);
    CHECK(std::abs(out.at(0, 0) - Complex{1, 0}) < 1e-12);
    CHECK(std::abs(out.at(1, 1)) < 1e-12);
    CHECK(std::abs(out.at(0, 1)) < 1e-12);
}

TEST_CASE("physical projection on random perturbed inputs") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-0.05, 0.05);
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector psi = grover::expected_state(
            grover::make_oracle_spec(3, std::vector<std::uint64_t>{rng() % 8}));
        DensityMatrix dm = density_from_state(psi);
        // Hermitian perturbation, then re-pin the trace at 1.
        const std::size_t dim = 8;
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = r; c < dim; ++c) {
                const Complex delta{u(rng), r == c ? 0.0 : u(rng)};
                dm.entries[r * dim + c] += delta;
                if (r != c) dm.entries[c * dim + r] += std::conj(delta);
            }
        }
        Complex tr{0, 0};
        for (std::size_t i = 0; i < dim; ++i) tr += dm.entries[i * dim + i];
        dm.entries[0] += Complex{1, 0} - tr;

        const DensityMatrix out = project_physical(dm.entries, 3);
        CHECK(min_eigenvalue(out) > -1e-12);
        CHECK(trace_defect(out) < 1e-10);
        CHECK(hermiticity_defect(out) < 1e-10);

        // Idempotence.
        const DensityMatrix twice = project_physical(out.entries, 3);
        double worst = 0.0;
        for (std::size_t i = 0; i < out.entries.size(); ++i) {
            worst = std::max(worst, std::abs(twice.entries[i] - out.entries[i]));
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("physical projection rejects off-trace input") {
    std::vector<Complex> raw(4, Complex{0, 0});
    raw[0] = Complex{1.3, 0};
    CHECK_THROWS_AS(project_physical(raw, 1), DataQualityError);
}

TEST_CASE("state fidelity basics") {
    const StateVector psi = grover::expected_state(
        grover::make_oracle_spec(3, std::vector<std::string>{"110"}));
    CHECK(state_fidelity(density_from_state(psi), psi) == doctest::Approx(1.0).epsilon(1e-12));

    // Maximally mixed against any pure target: 1/8.
    DensityMatrix mixed{3, std::vector<Complex>(64, Complex{0, 0})};
    for (std::size_t i = 0; i < 8; ++i) mixed.entries[i * 8 + i] = Complex{0.125, 0};
    CHECK(state_fidelity(mixed, psi) == doctest::Approx(0.125).epsilon(1e-12));

    // Orthogonal pure state: 0.
    std::vector<Complex> ortho(8, Complex{0, 0});
    ortho[0] = Complex{1, 0};
    const StateVector zero3 = make_state(3, ortho);
    std::vector<Complex> one(8, Complex{0, 0});
    one[7] = Complex{1, 0};
    CHECK(state_fidelity(density_from_state(make_state(3, one)), zero3) ==
          doctest::Approx(0.0));

    CHECK_THROWS_AS(state_fidelity(mixed, zero_state(2)), std::invalid_argument);
}

TEST_CASE("analytic QST reconstructs every paper expected state exactly") {
    for (const auto& spec : qst_cases()) {
        const Circuit base = case_circuit(spec);
        const StateVector target = grover::expected_state(spec);
        const TomographyResult r = run_qst(base, target, std::nullopt, 0, 0);
        CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(r.backend == "ideal");
        CHECK(r.shots_per_setting == 0);
    }
}

TEST_CASE("finite-shot ideal QST at 4096 shots per setting stays above 0.99") {
    for (const auto& spec : qst_cases()) {
        const TomographyResult r =
            run_qst(case_circuit(spec), grover::expected_state(spec), std::nullopt, 4096, 3);
        CHECK(r.fidelity >= 0.99);
    }
}

TEST_CASE("reconstruction is invariant under setting processing order") {
    // std::map already fixes the order; feed the estimator from data built in
    // reversed and shuffled insertion orders and compare fidelities.
    const grover::OracleSpec spec = grover::make_oracle_spec(3, std::vector<std::string>{"101"});
    const Circuit base = case_circuit(spec);
    const StateVector target = grover::expected_state(spec);

    std::vector<BasisSetting> settings = basis_settings(3);
    SettingCounts forward, backward;
    std::uint64_t stream = 0;
    for (const BasisSetting& s : settings) {
        const std::vector<double> dist =
            probabilities(apply_circuit(zero_state(3), measurement_circuit(base, s)));
        forward[s] = sample_counts(dist, 2048, derive_stream_seed(9, stream));
        ++stream;
    }
    for (auto it = settings.rbegin(); it != settings.rend(); ++it) backward[*it] = forward[*it];

    const auto ea = estimate_expectations(forward, 3);
    const auto eb = estimate_expectations(backward, 3);
    CHECK(ea == eb);

    const double fa = state_fidelity(project_physical(linear_inversion(ea, 3), 3), target);
    const double fb = state_fidelity(project_physical(linear_inversion(eb, 3), 3), target);
    CHECK(fa == doctest::Approx(fb).epsilon(1e-14));
}

TEST_CASE("more shots help: mean fidelity at 16384 beats 256 over ten seeds") {
    const grover::OracleSpec spec = grover::make_oracle_spec(3, std::vector<std::string>{"010"});
    const Circuit base = case_circuit(spec);
    const StateVector target = grover::expected_state(spec);

    double mean_low = 0.0, mean_high = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        mean_low += run_qst(base, target, std::nullopt, 256, seed).fidelity;
        mean_high += run_qst(base, target, std::nullopt, 16384, seed).fidelity;
    }
    CHECK(mean_high / 10.0 > mean_low / 10.0);
}

TEST_CASE("noisy QST lands between the ideal fidelity and the mixed-state floor") {
    const grover::OracleSpec spec =
        grover::make_oracle_spec(3, std::vector<std::string>{"101", "111"});
    const Circuit base = case_circuit(spec);
    const StateVector target = grover::expected_state(spec);

    const TomographyResult noisy =
        run_qst(base, target, noise::default_noise_model(), 4096, 21);
    const TomographyResult ideal = run_qst(base, target, std::nullopt, 0, 0);
    CHECK(noisy.fidelity < ideal.fidelity);
    CHECK(noisy.fidelity > 0.125);
    CHECK(noisy.backend == "noisy");
}

TEST_CASE("environment ordering: ideal beats the default noisy model on mean fidelity") {
    double ideal_sum = 0.0, noisy_sum = 0.0;
    for (const auto& spec : qst_cases()) {
        const Circuit base = case_circuit(spec);
        const StateVector target = grover::expected_state(spec);
        ideal_sum += run_qst(base, target, std::nullopt, 0, 0).fidelity;
        noisy_sum += run_qst(base, target, noise::default_noise_model(), 0, 0).fidelity;
    }
    CHECK(ideal_sum / 5.0 > noisy_sum / 5.0);
}

TEST_CASE("likelihood refinement is deterministic and never hurts the likelihood") {
    const grover::OracleSpec spec = grover::make_oracle_spec(3, std::vector<std::string>{"010"});
    const Circuit base = case_circuit(spec);
    const StateVector target = grover::expected_state(spec);

    SettingCounts data;
    std::uint64_t stream = 0;
    for (const BasisSetting& s : basis_settings(3)) {
        const std::vector<double> dist =
            probabilities(apply_circuit(zero_state(3), measurement_circuit(base, s)));
        data[s] = sample_counts(dist, 4096, derive_stream_seed(41, stream++));
    }
    const DensityMatrix start = project_physical(linear_inversion(estimate_expectations(data, 3), 3), 3);

    auto log_likelihood = [&](const DensityMatrix& rho) {
        double ll = 0.0;
        for (const auto& [setting, hist] : data) {
            const Circuit rot = measurement_circuit(Circuit(3), setting);
            DensityMatrix rotated = apply_circuit(rho, rot);
            const std::vector<double> p = diagonal_probabilities(rotated);
            for (const auto& [label, count] : hist.counts) {
                ll += static_cast<double>(count) *
                      std::log(std::max(p[parse_basis_label(label)], 1e-300));
            }
        }
        return ll;
    };

    const DensityMatrix refined = refine_reconstruction(start, data, 3);
    CHECK(log_likelihood(refined) >= log_likelihood(start) - 1e-9);
    CHECK(hermiticity_defect(refined) < 1e-10);
    CHECK(trace_defect(refined) < 1e-10);
    CHECK(min_eigenvalue(refined) > -1e-12);
    CHECK(state_fidelity(refined, target) >= state_fidelity(start, target) - 1e-6);

    const DensityMatrix again = refine_reconstruction(start, data, 3);
    CHECK(again.entries == refined.entries);
}

TEST_CASE("likelihood refinement keeps an exact-data reconstruction") {
    // Uniform |+++>: every setting distribution is dyadic, so exact counts
    // exist; the true state is the likelihood fixed point.
    Circuit base(3);
    for (int q = 0; q < 3; ++q) base.add(GateKind::H, {0 + q});
    const StateVector target = apply_circuit(zero_state(3), base);

    SettingCounts data;
    for (const BasisSetting& s : basis_settings(3)) {
        const std::vector<double> dist =
            probabilities(apply_circuit(zero_state(3), measurement_circuit(base, s)));
        CountsHistogram h{3, 4096, {}};
        for (std::size_t i = 0; i < 8; ++i) {
            const auto c = static_cast<std::uint64_t>(dist[i] * 4096.0 + 0.5);
            if (c > 0) h.counts[basis_label(i, 3)] = c;
        }
        data[s] = h;
    }
    const DensityMatrix refined = refine_reconstruction(density_from_state(target), data, 3);
    CHECK(state_fidelity(refined, target) > 0.9999);
}

TEST_CASE("tomography JSON carries the matrix and fidelity") {
    const grover::OracleSpec spec = grover::make_oracle_spec(3, std::vector<std::string>{"010"});
    const TomographyResult r =
        run_qst(case_circuit(spec), grover::expected_state(spec), std::nullopt, 0, 0);
    const std::string j = to_json(r);
    CHECK(j.find("\"fidelity\":") != std::string::npos);
    CHECK(j.find("\"rho_real\"") != std::string::npos);
    CHECK(j.find("\"rho_imag\"") != std::string::npos);
    CHECK(j.find("\"analytic\":true") != std::string::npos);
}
