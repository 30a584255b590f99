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
#include <string_view>
#include <vector>

#include "groverlab/core/types.hpp"

namespace groverlab {

// All functions here are pure: inputs are taken by value or const reference
// and a fresh value is returned. Values are safe to share across threads.

// psi' = U_circuit |psi>; preserves the norm within 1e-10.
StateVector apply_circuit(StateVector state, const Circuit& circuit);

// rho' = U rho U^dag, gate by gate.
DensityMatrix apply_circuit(DensityMatrix dm, const Circuit& circuit);

// rho' = sum_k K rho K^dag with the channel embedded on `targets`.
DensityMatrix apply_channel(const DensityMatrix& dm, const KrausChannel& channel,
                            const std::vector<int>& targets);

// p_i = |a_i|^2, indexed by basis-state integer.
std::vector<double> probabilities(const StateVector& state);

// Diagonal of rho as a real distribution.
std::vector<double> diagonal_probabilities(const DensityMatrix& dm);

// Draws `shots` samples from `dist` (length 2^n, sums to 1 within 1e-9).
// Identical (dist, shots, seed) triples give bit-identical histograms.
CountsHistogram sample_counts(const std::vector<double>& dist, std::uint64_t shots,
                              std::uint64_t seed);

// <psi|P|psi> / tr(rho P) for a Pauli string over {I,X,Y,Z} written in
// display order (leftmost character = highest qubit index).
double pauli_expectation(const StateVector& state, std::string_view pauli);
double pauli_expectation(const DensityMatrix& dm, std::string_view pauli);

// A Pauli string acts on a basis state as P|i> = phase(i) |i ^ flip_mask>.
struct PauliTerm {
    std::uint64_t flip_mask = 0;   // X and Y positions
    std::uint64_t minus_mask = 0;  // Z and Y positions, each contributing (-1)^bit
    int y_count = 0;               // overall factor i^y_count
};

PauliTerm parse_pauli_string(std::string_view pauli, int n);
Complex pauli_phase(const PauliTerm& term, std::uint64_t i);

// Internal building block shared by the statevector and density-matrix
// paths: applies one gate to a 2^m amplitude array. `shift` offsets every
// target bit (density matrices use shift = n for the row side) and
// `conjugate` applies the complex-conjugate gate (the right-hand side of
// rho U^dag).
void apply_gate_inplace(Complex* amps, std::size_t dim, const GateOp& op, int shift = 0,
                        bool conjugate = false);

}  // namespace groverlab
