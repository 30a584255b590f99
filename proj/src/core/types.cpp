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

#include "groverlab/core/types.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "groverlab/errors.hpp"
#include "groverlab/kernels/kernels.hpp"

namespace groverlab {

std::string basis_label(std::uint64_t index, int n) {
    std::string out(static_cast<std::size_t>(n), '0');
    for (int q = 0; q < n; ++q) {
        if ((index >> q) & 1) out[static_cast<std::size_t>(n - 1 - q)] = '1';
    }
    return out;
}

std::uint64_t parse_basis_label(const std::string& label) {
    if (label.empty() || label.size() > 63) {
        throw ParseError("basis label must have 1..63 characters, got \"" + label + "\"");
    }
    std::uint64_t value = 0;
    for (char c : label) {
        if (c != '0' && c != '1') {
            throw ParseError("basis label \"" + label + "\" contains non-binary character");
        }
        value = (value << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return value;
}

const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::S: return "S";
        case GateKind::Sdg: return "Sdg";
        case GateKind::CX: return "CX";
        case GateKind::CZ: return "CZ";
        case GateKind::MCX: return "MCX";
        case GateKind::MCZ: return "MCZ";
    }
    return "?";
}

int gate_min_arity(GateKind kind) {
    switch (kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
        case GateKind::S:
        case GateKind::Sdg: return 1;
        case GateKind::CX:
        case GateKind::CZ:
        case GateKind::MCX:
        case GateKind::MCZ: return 2;
    }
    return 1;
}

namespace {

bool fixed_arity(GateKind kind) { return kind != GateKind::MCX && kind != GateKind::MCZ; }

void validate_op(const GateOp& op, int width) {
    const int min_arity = gate_min_arity(op.kind);
    const int arity = static_cast<int>(op.targets.size());
    if (arity < min_arity || (fixed_arity(op.kind) && arity != min_arity)) {
        throw std::invalid_argument(std::string(gate_name(op.kind)) + " expects " +
                                    std::to_string(min_arity) + " qubit operand(s), got " +
                                    std::to_string(arity));
    }
    std::set<int> seen;
    for (int t : op.targets) {
        if (t < 0 || t >= width) {
            throw std::invalid_argument(std::string(gate_name(op.kind)) + " target " +
                                        std::to_string(t) + " outside register of width " +
                                        std::to_string(width));
        }
        if (!seen.insert(t).second) {
            throw std::invalid_argument(std::string(gate_name(op.kind)) +
                                        " has duplicate target " + std::to_string(t));
        }
    }
}

}  // namespace

Circuit::Circuit(int width) : width_(width) {
    if (width < 1) throw std::invalid_argument("circuit width must be >= 1");
}

Circuit& Circuit::add(GateKind kind, std::vector<int> targets) {
    return add(GateOp{kind, std::move(targets)});
}

Circuit& Circuit::add(const GateOp& op) {
    validate_op(op, width_);
    ops_.push_back(op);
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    if (other.width_ != width_) {
        throw std::invalid_argument("cannot append circuit of width " +
                                    std::to_string(other.width_) + " to width " +
                                    std::to_string(width_));
    }
    ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
    return *this;
}

StateVector make_state(int n, std::vector<Complex> amps) {
    if (n < 1) throw std::invalid_argument("state needs at least one qubit");
    if (amps.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("amplitude count does not equal 2^n");
    }
    const double norm = kernels::active().norm_sq(amps.data(), amps.size());
    if (std::abs(norm - 1.0) > 1e-10) {
        throw std::invalid_argument("state vector norm deviates from 1 by more than 1e-10");
    }
    return StateVector{n, std::move(amps)};
}

StateVector zero_state(int n, int cap) {
    if (n < 1 || n > cap) {
        throw std::invalid_argument("qubit count " + std::to_string(n) +
                                    " outside supported range [1, " + std::to_string(cap) + "]");
    }
    std::vector<Complex> amps(std::size_t{1} << n, Complex{0.0, 0.0});
    amps[0] = Complex{1.0, 0.0};
    return StateVector{n, std::move(amps)};
}

DensityMatrix density_from_state(const StateVector& psi, int cap) {
    if (psi.n > cap) {
        throw ResourceError("density matrix for " + std::to_string(psi.n) +
                            " qubits exceeds cap " + std::to_string(cap));
    }
    const std::size_t dim = psi.amps.size();
    DensityMatrix dm{psi.n, std::vector<Complex>(dim * dim)};
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            dm.entries[r * dim + c] = psi.amps[r] * std::conj(psi.amps[c]);
        }
    }
    return dm;
}

double hermiticity_defect(const DensityMatrix& dm) {
    const std::size_t dim = std::size_t{1} << dm.n;
    double worst = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = r; c < dim; ++c) {
            worst = std::max(worst,
                             std::abs(dm.entries[r * dim + c] -
                                      std::conj(dm.entries[c * dim + r])));
        }
    }
    return worst;
}

double trace_defect(const DensityMatrix& dm) {
    const std::size_t dim = std::size_t{1} << dm.n;
    Complex tr{0.0, 0.0};
    for (std::size_t i = 0; i < dim; ++i) tr += dm.entries[i * dim + i];
    return std::abs(tr - Complex{1.0, 0.0});
}

double min_eigenvalue(const DensityMatrix& dm) {
    const Eigen::Index dim = Eigen::Index{1} << dm.n;
    Eigen::MatrixXcd m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            m(r, c) = dm.entries[static_cast<std::size_t>(r * dim + c)];
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double trace_preservation_defect(const KrausChannel& ch) {
    const std::size_t dim = std::size_t{1} << ch.arity;
    // sum_k K^dag K, compared against identity.
    std::vector<Complex> acc(dim * dim, Complex{0.0, 0.0});
    for (const auto& k : ch.operators) {
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                Complex v{0.0, 0.0};
                for (std::size_t m = 0; m < dim; ++m) {
                    v += std::conj(k[m * dim + r]) * k[m * dim + c];
                }
                acc[r * dim + c] += v;
            }
        }
    }
    double worst = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            const Complex expect = (r == c) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            worst = std::max(worst, std::abs(acc[r * dim + c] - expect));
        }
    }
    return worst;
}

KrausChannel make_channel(int arity, std::vector<std::vector<Complex>> operators) {
    if (arity < 1) throw std::invalid_argument("channel arity must be >= 1");
    if (operators.empty()) throw std::invalid_argument("channel needs at least one operator");
    const std::size_t dim = std::size_t{1} << arity;
    for (const auto& k : operators) {
        if (k.size() != dim * dim) {
            throw std::invalid_argument("Kraus operator size does not match channel arity");
        }
    }
    KrausChannel ch{arity, std::move(operators)};
    if (trace_preservation_defect(ch) > 1e-10) {
        throw std::invalid_argument("Kraus operator set is not trace preserving within 1e-10");
    }
    return ch;
}

}  // namespace groverlab
