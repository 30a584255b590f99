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

#include "groverlab/core/simulate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "groverlab/errors.hpp"
#include "groverlab/core/rng.hpp"
#include "groverlab/kernels/kernels.hpp"

namespace groverlab {

namespace {

constexpr Complex kI{0.0, 1.0};

std::uint64_t bit_mask(const std::vector<int>& targets, int shift) {
    std::uint64_t mask = 0;
    for (int t : targets) mask |= std::uint64_t{1} << (t + shift);
    return mask;
}

}  // namespace

void apply_gate_inplace(Complex* amps, std::size_t dim, const GateOp& op, int shift,
                        bool conjugate) {
    const auto& k = kernels::active();
    switch (op.kind) {
        case GateKind::H: {
            const double s = 1.0 / std::numbers::sqrt2;
            const Complex u[4] = {Complex{s, 0}, Complex{s, 0}, Complex{s, 0}, Complex{-s, 0}};
            k.apply_1q(amps, dim, op.targets[0] + shift, u);
            return;
        }
        case GateKind::X:
            k.apply_x(amps, dim, op.targets[0] + shift);
            return;
        case GateKind::Y: {
            const Complex off = conjugate ? kI : -kI;
            const Complex u[4] = {Complex{0, 0}, off, -off, Complex{0, 0}};
            k.apply_1q(amps, dim, op.targets[0] + shift, u);
            return;
        }
        case GateKind::Z:
            k.apply_diag1q(amps, dim, op.targets[0] + shift, Complex{1, 0}, Complex{-1, 0});
            return;
        case GateKind::S:
            k.apply_diag1q(amps, dim, op.targets[0] + shift, Complex{1, 0},
                           conjugate ? -kI : kI);
            return;
        case GateKind::Sdg:
            k.apply_diag1q(amps, dim, op.targets[0] + shift, Complex{1, 0},
                           conjugate ? kI : -kI);
            return;
        case GateKind::CX:
        case GateKind::MCX: {
            const int target = op.targets.back() + shift;
            std::uint64_t ctrl = 0;
            for (std::size_t i = 0; i + 1 < op.targets.size(); ++i) {
                ctrl |= std::uint64_t{1} << (op.targets[i] + shift);
            }
            k.apply_controlled_x(amps, dim, ctrl, target);
            return;
        }
        case GateKind::CZ:
        case GateKind::MCZ:
            k.phase_flip_mask(amps, dim, bit_mask(op.targets, shift));
            return;
    }
    throw std::invalid_argument("unknown gate kind");
}

StateVector apply_circuit(StateVector state, const Circuit& circuit) {
    if (state.n != circuit.width()) {
        throw std::invalid_argument("state width " + std::to_string(state.n) +
                                    " does not match circuit width " +
                                    std::to_string(circuit.width()));
    }
    const std::size_t dim = state.amps.size();
    for (const GateOp& op : circuit.ops()) {
        apply_gate_inplace(state.amps.data(), dim, op);
    }
    return state;
}

DensityMatrix apply_circuit(DensityMatrix dm, const Circuit& circuit) {
    if (dm.n != circuit.width()) {
        throw std::invalid_argument("density matrix width " + std::to_string(dm.n) +
                                    " does not match circuit width " +
                                    std::to_string(circuit.width()));
    }
    const std::size_t dim = dm.entries.size();  // 4^n
    for (const GateOp& op : circuit.ops()) {
        apply_gate_inplace(dm.entries.data(), dim, op, dm.n, false);  // U on row bits
        apply_gate_inplace(dm.entries.data(), dim, op, 0, true);      // conj(U) on col bits
    }
    return dm;
}

namespace {

// Applies a dense 2^m x 2^m matrix to the amplitude array on the given bit
// positions (bit j of the matrix index lives at position `bits[j]`).
void apply_dense_matrix(Complex* amps, std::size_t dim, const std::vector<Complex>& mat,
                        const std::vector<int>& bits, bool conjugate) {
    const int m = static_cast<int>(bits.size());
    const std::size_t sub = std::size_t{1} << m;
    std::uint64_t op_mask = 0;
    std::vector<std::uint64_t> offset(sub, 0);
    for (int j = 0; j < m; ++j) op_mask |= std::uint64_t{1} << bits[j];
    for (std::size_t g = 1; g < sub; ++g) {
        std::uint64_t off = 0;
        for (int j = 0; j < m; ++j) {
            if ((g >> j) & 1) off |= std::uint64_t{1} << bits[j];
        }
        offset[g] = off;
    }

    std::vector<Complex> gathered(sub);
    const std::uint64_t free_bits = (dim - 1) & ~op_mask;
    std::uint64_t base = 0;
    while (true) {
        for (std::size_t g = 0; g < sub; ++g) gathered[g] = amps[base | offset[g]];
        for (std::size_t r = 0; r < sub; ++r) {
            Complex acc{0.0, 0.0};
            const Complex* row = mat.data() + r * sub;
            if (conjugate) {
                for (std::size_t c = 0; c < sub; ++c) acc += std::conj(row[c]) * gathered[c];
            } else {
                for (std::size_t c = 0; c < sub; ++c) acc += row[c] * gathered[c];
            }
            amps[base | offset[r]] = acc;
        }
        if (base == free_bits) break;
        base = (base - free_bits) & free_bits;
    }
}

}  // namespace

DensityMatrix apply_channel(const DensityMatrix& dm, const KrausChannel& channel,
                            const std::vector<int>& targets) {
    if (static_cast<int>(targets.size()) != channel.arity) {
        throw std::invalid_argument("channel arity " + std::to_string(channel.arity) +
                                    " does not match " + std::to_string(targets.size()) +
                                    " target(s)");
    }
    for (int t : targets) {
        if (t < 0 || t >= dm.n) {
            throw std::invalid_argument("channel target " + std::to_string(t) +
                                        " outside register of width " + std::to_string(dm.n));
        }
    }
    if (trace_preservation_defect(channel) > 1e-10) {
        throw std::invalid_argument("Kraus operator set is not trace preserving within 1e-10");
    }

    const std::size_t dim = dm.entries.size();
    std::vector<int> row_bits(targets.size());
    for (std::size_t j = 0; j < targets.size(); ++j) row_bits[j] = targets[j] + dm.n;

    DensityMatrix out{dm.n, std::vector<Complex>(dim, Complex{0.0, 0.0})};
    std::vector<Complex> tmp(dim);
    for (const auto& kraus : channel.operators) {
        tmp = dm.entries;
        apply_dense_matrix(tmp.data(), dim, kraus, row_bits, false);
        apply_dense_matrix(tmp.data(), dim, kraus, targets, true);
        kernels::active().accumulate(out.entries.data(), tmp.data(), dim);
    }
    return out;
}

std::vector<double> probabilities(const StateVector& state) {
    std::vector<double> out(state.amps.size());
    kernels::active().probabilities(state.amps.data(), out.data(), state.amps.size());
    return out;
}

std::vector<double> diagonal_probabilities(const DensityMatrix& dm) {
    const std::size_t dim = std::size_t{1} << dm.n;
    std::vector<double> out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        // PSD within tolerance can leave the diagonal a hair below zero.
        out[i] = std::max(0.0, dm.entries[i * dim + i].real());
    }
    return out;
}

CountsHistogram sample_counts(const std::vector<double>& dist, std::uint64_t shots,
                              std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("shots must be >= 1");
    const std::size_t dim = dist.size();
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("distribution length must be a power of two >= 2");
    }
    double total = 0.0;
    for (double p : dist) {
        if (p < -1e-12) throw std::invalid_argument("distribution has a negative mass");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("distribution mass deviates from 1 by more than 1e-9");
    }

    int n = 0;
    while ((std::size_t{1} << n) < dim) ++n;

    std::vector<double> cdf(dim);
    double run = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        run += std::max(0.0, dist[i]);
        cdf[i] = run;
    }

    std::vector<std::uint64_t> tallies(dim, 0);
    Rng rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform01() * run;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t idx = std::min<std::size_t>(dim - 1, it - cdf.begin());
        ++tallies[idx];
    }

    CountsHistogram hist{n, shots, {}};
    for (std::size_t i = 0; i < dim; ++i) {
        if (tallies[i] > 0) hist.counts[basis_label(i, n)] = tallies[i];
    }
    return hist;
}

PauliTerm parse_pauli_string(std::string_view pauli, int n) {
    if (static_cast<int>(pauli.size()) != n) {
        throw std::invalid_argument("Pauli string length does not match qubit count");
    }
    PauliTerm term;
    for (int pos = 0; pos < n; ++pos) {
        const int q = n - 1 - pos;  // display order
        const std::uint64_t bit = std::uint64_t{1} << q;
        switch (pauli[pos]) {
            case 'I': break;
            case 'X': term.flip_mask |= bit; break;
            case 'Y':
                term.flip_mask |= bit;
                term.minus_mask |= bit;
                ++term.y_count;
                break;
            case 'Z': term.minus_mask |= bit; break;
            default:
                throw std::invalid_argument(std::string("invalid Pauli character '") +
                                            pauli[pos] + "'");
        }
    }
    return term;
}

Complex pauli_phase(const PauliTerm& term, std::uint64_t i) {
    // Z and Y each contribute (-1)^bit; every Y adds a factor of i.
    const int minus = std::popcount(i & term.minus_mask);
    Complex phase = (minus & 1) ? Complex{-1, 0} : Complex{1, 0};
    switch (term.y_count & 3) {
        case 0: break;
        case 1: phase *= kI; break;
        case 2: phase *= Complex{-1, 0}; break;
        case 3: phase *= -kI; break;
    }
    return phase;
}

double pauli_expectation(const StateVector& state, std::string_view pauli) {
    const PauliTerm term = parse_pauli_string(pauli, state.n);
    Complex acc{0.0, 0.0};
    const std::size_t dim = state.amps.size();
    for (std::size_t i = 0; i < dim; ++i) {
        acc += pauli_phase(term, i) * std::conj(state.amps[i ^ term.flip_mask]) * state.amps[i];
    }
    return acc.real();
}

double pauli_expectation(const DensityMatrix& dm, std::string_view pauli) {
    const PauliTerm term = parse_pauli_string(pauli, dm.n);
    Complex acc{0.0, 0.0};
    const std::size_t dim = std::size_t{1} << dm.n;
    for (std::size_t i = 0; i < dim; ++i) {
        acc += pauli_phase(term, i) * dm.entries[i * dim + (i ^ term.flip_mask)];
    }
    return acc.real();
}

}  // namespace groverlab
