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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "groverlab/core/types.hpp"
#include "groverlab/noise/noise.hpp"

namespace groverlab::tomo {

// Per-qubit measurement axes in display order, e.g. "XZY" (leftmost is the
// highest qubit index). Each character is one of X, Y, Z.
using BasisSetting = std::string;

// All 3^n settings in lexicographic order (X < Y < Z): n=2 runs XX ... ZZ.
std::vector<BasisSetting> basis_settings(int n);

// Appends the basis rotation to a copy of `base`: H for X, S^dag then H for
// Y, nothing for Z. Only the first n qubits (the work register of the
// setting's width) are rotated.
Circuit measurement_circuit(const Circuit& base, const BasisSetting& setting);

using SettingCounts = std::map<BasisSetting, CountsHistogram>;
using SettingDistributions = std::map<BasisSetting, std::vector<double>>;

// Estimates every 4^n Pauli expectation. A string's estimate averages the
// empirical parity over all 3^(#identity positions) compatible settings;
// the all-identity string is pinned to 1. Throws IncompleteDataError naming
// the first absent setting.
std::map<std::string, double> estimate_expectations(const SettingCounts& data, int n);
std::map<std::string, double> estimate_expectations(const SettingDistributions& data, int n);

// rho_raw = 2^-n sum_P <P> P. Throws IncompleteDataError when an expectation
// is missing. The result is Hermitian with unit trace but may not be PSD.
std::vector<Complex> linear_inversion(const std::map<std::string, double>& expectations, int n);

// Nearest physical state by eigenvalue truncation: negative eigenvalues are
// zeroed and their mass spread uniformly over the remaining nonzero ones,
// repeating until none are negative. Throws DataQualityError when the input
// trace deviates from 1 by more than 0.1.
DensityMatrix project_physical(const std::vector<Complex>& raw, int n);

// F_S = <psi| rho |psi>, clamped into [0, 1] (1e-12 slack).
double state_fidelity(const DensityMatrix& rho, const StateVector& target);

// Deterministic likelihood refinement of a finite-shot reconstruction:
// fixed-point R*rho*R iteration against the measured setting frequencies,
// started from `initial`. Exact-data fixed points stay put; on sampled data
// this removes most of the eigenvalue-truncation bias of the projection
// step. Purely arithmetic: identical data gives identical output.
DensityMatrix refine_reconstruction(const DensityMatrix& initial, const SettingCounts& data,
                                    int n, int max_iterations = 2000);

struct TomographyResult {
    std::vector<Complex> raw;       // linear-inversion output before projection
    DensityMatrix rho;              // physical reconstruction
    double fidelity = 0.0;
    std::uint64_t shots_per_setting = 0;  // 0 = analytic (infinite shots)
    std::string backend;            // "ideal" | "noisy"
};

// Full pipeline: schedule 3^n settings over `base`, simulate each on the
// given backend (nullopt = ideal statevector), estimate, invert, project and
// score against `target`. shots_per_setting == 0 runs the analytic
// (infinite-shot) mode on exact outcome distributions.
TomographyResult run_qst(const Circuit& base, const StateVector& target,
                         const std::optional<noise::NoiseModel>& backend,
                         std::uint64_t shots_per_setting, std::uint64_t seed);

// Row-major real/imag arrays ordered by display-label integer value.
std::string to_json(const TomographyResult& result);

}  // namespace groverlab::tomo
