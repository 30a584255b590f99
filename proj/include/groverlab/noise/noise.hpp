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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "groverlab/calib/calibration.hpp"
#include "groverlab/core/types.hpp"

namespace groverlab::noise {

struct ReadoutConfusion {
    double p_m1p0 = 0.0;  // P(read 1 | prepared 0)
    double p_m0p1 = 0.0;  // P(read 0 | prepared 1)
};

struct GateDurations {
    double one_qubit_ns = 60.0;
    double two_qubit_ns = 660.0;   // also applied to wider multi-qubit gates
    double readout_ns = 1244.44;
};

// Parametric per-gate noise. T1/T2 and readout entries are per qubit; a
// single entry applies uniformly to every qubit. T2 inputs above 2*T1 are
// clamped at model construction and noted in `warnings`.
struct NoiseModel {
    double depol_1q = 0.0;
    double depol_2q = 0.0;  // applied to every gate touching >= 2 qubits
    std::vector<double> t1_us{0.0};
    std::vector<double> t2_us{0.0};
    GateDurations durations;
    std::vector<ReadoutConfusion> readout{{}};
    bool idle_decoherence = false;
    std::vector<std::string> warnings;

    double t1_for(int q) const { return t1_us[std::min<std::size_t>(q, t1_us.size() - 1)]; }
    double t2_for(int q) const { return t2_us[std::min<std::size_t>(q, t2_us.size() - 1)]; }
    const ReadoutConfusion& readout_for(int q) const {
        return readout[std::min<std::size_t>(q, readout.size() - 1)];
    }
    bool thermal_enabled() const;
};

// Validates ranges, clamps T2 <= 2*T1.
NoiseModel make_noise_model(NoiseModel model);

// Everything off: run_noisy reduces to the ideal simulation.
NoiseModel zero_noise_model();

// Median ibm_sherbrook calibration applied uniformly to all qubits.
NoiseModel default_noise_model();

NoiseModel noise_model_from_json(const std::string& text);
std::string to_json(const NoiseModel& model);

// Builds the uniform-median model from a calibration summary. Requires the
// fields T1_us, T2_us, SX_error (1q), ECR_error (2q), P_m0p1, P_m1p0 and
// throws SchemaError naming whichever is missing. The reported gate error is
// used directly as the depolarizing parameter.
NoiseModel from_calibration(const calib::CalibrationSummary& summary,
                            const GateDurations& durations = GateDurations{});
NoiseModel from_calibration_with_readout_length(const calib::CalibrationSummary& summary);

// rho -> (1-p) rho + p I/2^arity, as a uniform Pauli mixture.
KrausChannel depolarizing_channel(double p, int arity);

// Amplitude damping with gamma = 1 - exp(-d/T1) composed with the pure
// dephasing that brings the off-diagonal decay to exp(-d/T2).
KrausChannel thermal_relaxation_channel(double t1_us, double t2_us, double duration_ns);

// Column-stochastic 2x2, row-major: [[1-p10, p01], [p10, 1-p01]].
std::array<double, 4> readout_confusion(double p10, double p01);

// Applies the per-qubit confusion matrices to an outcome distribution.
std::vector<double> apply_readout_confusion(std::vector<double> dist, const NoiseModel& model,
                                            int n);

struct NoisyRunResult {
    DensityMatrix dm;
    std::vector<double> pre_readout;
    std::vector<double> post_readout;
    CountsHistogram counts;
};

// Density-matrix evolution with each gate followed by its depolarizing and
// thermal channels on the touched qubits; readout confusion is applied to
// the final diagonal before sampling.
NoisyRunResult run_noisy(const Circuit& circuit, const NoiseModel& model, std::uint64_t shots,
                         std::uint64_t seed, int cap = kDensityMatrixQubitCap);

// Final mixed state only (no sampling); used where counts are not needed.
DensityMatrix evolve_noisy(const Circuit& circuit, const NoiseModel& model,
                           int cap = kDensityMatrixQubitCap);

// Scales both depolarizing probabilities (clamped to 1); used for the
// monotone-degradation checks.
NoiseModel scale_depolarizing(NoiseModel model, double factor);

}  // namespace groverlab::noise
