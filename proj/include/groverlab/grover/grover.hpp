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

namespace groverlab::grover {

enum class OracleStyle { Phase, Boolean };

// Search problem: a register of n qubits (space size 2^n) and the set of
// marked basis states. `marked` holds basis-state integers, kept sorted.
struct OracleSpec {
    int n = 0;
    std::vector<std::uint64_t> marked;
    OracleStyle style = OracleStyle::Phase;
};

// Validates width, distinctness and 1 <= |marked| < 2^n. Labels use the
// display convention (leftmost = highest qubit index).
OracleSpec make_oracle_spec(int n, const std::vector<std::string>& marked_labels,
                            OracleStyle style = OracleStyle::Phase);
OracleSpec make_oracle_spec(int n, std::vector<std::uint64_t> marked,
                            OracleStyle style = OracleStyle::Phase);

// JSON form: {"n":3,"marked":["010"],"style":"phase"}
OracleSpec oracle_spec_from_json(const std::string& text);
std::string to_json(const OracleSpec& spec);

struct GroverPlan {
    OracleSpec oracle;
    int iterations = 1;   // Grover-operator repetitions inside one circuit
    int repetitions = 1;  // independent experiment repeats
};

// Phase oracle: per marked state, X-conjugated multi-controlled Z across the
// register. Maps |x> -> (-1)^{f(x)} |x>.
Circuit phase_oracle(const OracleSpec& spec);

// Boolean oracle on n+1 qubits: ancilla q_n prepared in |->, then per marked
// state an X-conjugated MCX from the work register onto the ancilla. The
// phase kicks back onto the work register.
Circuit boolean_oracle(const OracleSpec& spec);

// Reflection about the uniform state: H^n X^n MCZ X^n H^n = 2|s><s| - I up
// to global phase.
Circuit diffusion(int n);

// Full program: H layer, then `iterations` rounds of (oracle, diffusion).
// Boolean style adds the ancilla and prepares it once up front.
Circuit grover_circuit(const GroverPlan& plan);

// Closed-form state after one Grover iteration; amplitude 2*mu + 1/sqrt(S)
// on marked states and 2*mu - 1/sqrt(S) elsewhere, mu the post-oracle mean.
StateVector expected_state(const OracleSpec& spec);

// Probability of landing on a marked state after one Grover iteration with
// k marked states in a space of `space` (power of two) elements:
// k * ([(S-2k)/S + 2(S-k)/S] / sqrt(S))^2.
double theoretical_success(std::uint64_t k, std::uint64_t space);

// Classical best effort: one query then a random guess on failure:
// k/S + (1 - k/S) * k/(S-1).
double classical_baseline(std::uint64_t k, std::uint64_t space);

// Work-register marginal for a boolean-oracle state (traces out the ancilla).
// For width == n_work this is just probabilities().
std::vector<double> work_register_probabilities(const StateVector& state, int n_work);

// The experiment suites: all 8 single-marked oracles in label order, and
// the nine two-marked pairs in suite order.
std::vector<OracleSpec> single_marked_suite(int n = 3, OracleStyle style = OracleStyle::Phase);
std::vector<OracleSpec> two_marked_suite(OracleStyle style = OracleStyle::Phase);

}  // namespace groverlab::grover
