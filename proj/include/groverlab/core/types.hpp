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

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace groverlab {

using Complex = std::complex<double>;

// Default width caps; callers may pass a different cap where a constructor
// accepts one. Statevectors hold 2^n amplitudes, density matrices 4^n entries.
inline constexpr int kStateVectorQubitCap = 24;
inline constexpr int kDensityMatrixQubitCap = 12;

// Bit ordering: qubit index 0 is the least significant bit of the basis-state
// integer. Display labels render q_{n-1}...q_0, i.e. leftmost character is the
// highest qubit index. All labels crossing an external interface use the
// display convention.
std::string basis_label(std::uint64_t index, int n);
std::uint64_t parse_basis_label(const std::string& label);

enum class GateKind { H, X, Y, Z, S, Sdg, CX, CZ, MCX, MCZ };

const char* gate_name(GateKind kind);

// One gate application. For CX/MCX the last target index is the flipped
// qubit and the preceding indices are controls. CZ/MCZ are symmetric in
// their targets.
struct GateOp {
    GateKind kind;
    std::vector<int> targets;
};

// Minimum number of qubit operands for a gate kind (MCX/MCZ accept more).
int gate_min_arity(GateKind kind);

// An ordered gate program over `width` qubits (work register plus any
// ancilla). Operations are validated on insertion: indices distinct,
// in range, and arity consistent with the gate kind.
class Circuit {
  public:
    explicit Circuit(int width);

    int width() const { return width_; }
    const std::vector<GateOp>& ops() const { return ops_; }
    std::size_t size() const { return ops_.size(); }

    Circuit& add(GateKind kind, std::vector<int> targets);
    Circuit& add(const GateOp& op);
    // Concatenates another program of the same width.
    Circuit& append(const Circuit& other);

  private:
    int width_;
    std::vector<GateOp> ops_;
};

// Pure n-qubit state: 2^n complex amplitudes, unit norm within 1e-10.
struct StateVector {
    int n = 0;
    std::vector<Complex> amps;
};

// Checked constructor: size must be 2^n and the norm must be 1 within 1e-10.
StateVector make_state(int n, std::vector<Complex> amps);

// |0...0> on n qubits.
StateVector zero_state(int n, int cap = kStateVectorQubitCap);

// Mixed n-qubit state: row-major 2^n x 2^n, Hermitian PSD trace-1.
struct DensityMatrix {
    int n = 0;
    std::vector<Complex> entries;  // entries[row * 2^n + col]

    Complex at(std::uint64_t row, std::uint64_t col) const {
        return entries[(row << n) | col];
    }
};

DensityMatrix density_from_state(const StateVector& psi, int cap = kDensityMatrixQubitCap);

// Validity probes used by tests and internal postcondition checks.
double hermiticity_defect(const DensityMatrix& dm);   // max |rho - rho^dagger|
double trace_defect(const DensityMatrix& dm);         // |tr(rho) - 1|
double min_eigenvalue(const DensityMatrix& dm);

struct CountsHistogram {
    int n = 0;
    std::uint64_t shots = 0;
    std::map<std::string, std::uint64_t> counts;  // display label -> count, zero bins omitted
};

// Trace-preserving channel on `arity` qubits: sum_k K^dag K = I within 1e-10.
struct KrausChannel {
    int arity = 0;
    std::vector<std::vector<Complex>> operators;  // each row-major 2^arity x 2^arity
};

// Checked constructor; throws std::invalid_argument if the operator set is
// not trace preserving within 1e-10.
KrausChannel make_channel(int arity, std::vector<std::vector<Complex>> operators);

double trace_preservation_defect(const KrausChannel& ch);

}  // namespace groverlab
