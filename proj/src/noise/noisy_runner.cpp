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

#include <algorithm>

#include "groverlab/core/simulate.hpp"
#include "groverlab/errors.hpp"
#include "groverlab/noise/noise.hpp"

namespace groverlab::noise {

namespace {

void apply_thermal(DensityMatrix& dm, const NoiseModel& model, int qubit, double duration_ns) {
    const double t1 = model.t1_for(qubit);
    const double t2 = model.t2_for(qubit);
    if (duration_ns <= 0.0 || t1 <= 0.0) return;
    dm = apply_channel(dm, thermal_relaxation_channel(t1, std::min(t2, 2.0 * t1), duration_ns),
                       {qubit});
}

}  // namespace

DensityMatrix evolve_noisy(const Circuit& circuit, const NoiseModel& model, int cap) {
    if (circuit.width() > cap) {
        throw ResourceError("circuit width " + std::to_string(circuit.width()) +
                            " exceeds the density-matrix cap of " + std::to_string(cap) +
                            " qubits; a statevector trajectory mode would be needed at this"
                            " scale");
    }
    DensityMatrix dm = density_from_state(zero_state(circuit.width()), cap);
    const std::size_t dim = dm.entries.size();

    for (const GateOp& op : circuit.ops()) {
        apply_gate_inplace(dm.entries.data(), dim, op, dm.n, false);
        apply_gate_inplace(dm.entries.data(), dim, op, 0, true);

        const int touched = static_cast<int>(op.targets.size());
        const double depol = touched == 1 ? model.depol_1q : model.depol_2q;
        const double duration =
            touched == 1 ? model.durations.one_qubit_ns : model.durations.two_qubit_ns;

        if (depol > 0.0) {
            dm = apply_channel(dm, depolarizing_channel(depol, touched), op.targets);
        }
        for (int q : op.targets) apply_thermal(dm, model, q, duration);
        if (model.idle_decoherence) {
            for (int q = 0; q < dm.n; ++q) {
                if (std::find(op.targets.begin(), op.targets.end(), q) == op.targets.end()) {
                    apply_thermal(dm, model, q, duration);
                }
            }
        }
    }
    return dm;
}

NoisyRunResult run_noisy(const Circuit& circuit, const NoiseModel& model, std::uint64_t shots,
                         std::uint64_t seed, int cap) {
    NoisyRunResult result{evolve_noisy(circuit, model, cap), {}, {}, {}};
    result.pre_readout = diagonal_probabilities(result.dm);
    result.post_readout = apply_readout_confusion(result.pre_readout, model, result.dm.n);
    result.counts = sample_counts(result.post_readout, shots, seed);
    return result;
}

}  // namespace groverlab::noise
