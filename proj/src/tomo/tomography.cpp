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

#include "groverlab/tomo/tomography.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

#include "groverlab/core/rng.hpp"
#include "groverlab/core/simulate.hpp"
#include "groverlab/errors.hpp"

namespace groverlab::tomo {

std::vector<BasisSetting> basis_settings(int n) {
    if (n < 1) throw std::invalid_argument("basis settings need n >= 1");
    static const char axes[3] = {'X', 'Y', 'Z'};
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;

    std::vector<BasisSetting> settings;
    settings.reserve(total);
    BasisSetting current(static_cast<std::size_t>(n), 'X');
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (std::size_t s = 0; s < total; ++s) {
        for (int i = 0; i < n; ++i) current[i] = axes[digits[i]];
        settings.push_back(current);
        for (int i = n - 1; i >= 0; --i) {  // rightmost digit fastest
            if (++digits[i] < 3) break;
            digits[i] = 0;
        }
    }
    return settings;
}

Circuit measurement_circuit(const Circuit& base, const BasisSetting& setting) {
    if (static_cast<int>(setting.size()) != base.width()) {
        throw std::invalid_argument("basis setting length does not match circuit width");
    }
    Circuit c = base;
    const int n = base.width();
    for (int pos = 0; pos < n; ++pos) {
        const int q = n - 1 - pos;
        switch (setting[pos]) {
            case 'Z': break;
            case 'X': c.add(GateKind::H, {q}); break;
            case 'Y':
                c.add(GateKind::Sdg, {q});
                c.add(GateKind::H, {q});
                break;
            default:
                throw std::invalid_argument(std::string("invalid basis axis '") + setting[pos] +
                                            "'");
        }
    }
    return c;
}

namespace {

std::vector<std::string> all_pauli_strings(int n) {
    static const char letters[4] = {'I', 'X', 'Y', 'Z'};
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= 4;
    std::vector<std::string> out;
    out.reserve(total);
    std::string current(static_cast<std::size_t>(n), 'I');
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (std::size_t s = 0; s < total; ++s) {
        for (int i = 0; i < n; ++i) current[i] = letters[digits[i]];
        out.push_back(current);
        for (int i = n - 1; i >= 0; --i) {
            if (++digits[i] < 4) break;
            digits[i] = 0;
        }
    }
    return out;
}

// Mean parity of the support bits under one setting's outcome distribution.
double parity_from_distribution(const std::vector<double>& dist, std::uint64_t support_mask) {
    double value = 0.0;
    for (std::size_t idx = 0; idx < dist.size(); ++idx) {
        const int parity = std::popcount(idx & support_mask) & 1;
        value += parity ? -dist[idx] : dist[idx];
    }
    return value;
}

// Walks every setting compatible with `pauli` (identity positions free) and
// averages the parity estimates produced by `lookup`.
template <typename Lookup>
double average_over_compatible(const std::string& pauli, int n, const Lookup& lookup) {
    std::vector<int> free_positions;
    BasisSetting setting(pauli.size(), 'Z');
    std::uint64_t support_mask = 0;
    for (int pos = 0; pos < n; ++pos) {
        if (pauli[pos] == 'I') {
            free_positions.push_back(pos);
        } else {
            setting[pos] = pauli[pos];
            support_mask |= std::uint64_t{1} << (n - 1 - pos);
        }
    }
    static const char axes[3] = {'X', 'Y', 'Z'};
    std::size_t combos = 1;
    for (std::size_t i = 0; i < free_positions.size(); ++i) combos *= 3;

    double acc = 0.0;
    for (std::size_t c = 0; c < combos; ++c) {
        std::size_t rest = c;
        for (int pos : free_positions) {
            setting[pos] = axes[rest % 3];
            rest /= 3;
        }
        acc += lookup(setting, support_mask);
    }
    return acc / static_cast<double>(combos);
}

template <typename Map, typename Lookup>
std::map<std::string, double> estimate_impl(const Map& data, int n, const Lookup& lookup) {
    for (const BasisSetting& s : basis_settings(n)) {
        if (data.find(s) == data.end()) {
            throw IncompleteDataError("missing tomography setting \"" + s + "\"");
        }
    }
    std::map<std::string, double> out;
    for (const std::string& pauli : all_pauli_strings(n)) {
        if (pauli.find_first_not_of('I') == std::string::npos) {
            out[pauli] = 1.0;
            continue;
        }
        out[pauli] = average_over_compatible(pauli, n, lookup);
    }
    return out;
}

}  // namespace

std::map<std::string, double> estimate_expectations(const SettingCounts& data, int n) {
    for (const auto& [setting, hist] : data) {
        if (hist.shots < 1) {
            throw std::invalid_argument("setting \"" + setting + "\" has zero shots");
        }
    }
    return estimate_impl(data, n, [&](const BasisSetting& s, std::uint64_t mask) {
        const CountsHistogram& hist = data.at(s);
        double value = 0.0;
        for (const auto& [label, count] : hist.counts) {
            const std::uint64_t idx = parse_basis_label(label);
            const int parity = std::popcount(idx & mask) & 1;
            const double w = static_cast<double>(count) / static_cast<double>(hist.shots);
            value += parity ? -w : w;
        }
        return value;
    });
}

std::map<std::string, double> estimate_expectations(const SettingDistributions& data, int n) {
    for (const auto& [setting, dist] : data) {
        if (dist.size() != (std::size_t{1} << n)) {
            throw std::invalid_argument("setting \"" + setting +
                                        "\" has a distribution of the wrong length");
        }
    }
    return estimate_impl(data, n, [&](const BasisSetting& s, std::uint64_t mask) {
        return parity_from_distribution(data.at(s), mask);
    });
}

std::vector<Complex> linear_inversion(const std::map<std::string, double>& expectations, int n) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Complex> rho(dim * dim, Complex{0.0, 0.0});
    const double scale = 1.0 / static_cast<double>(dim);

    for (const std::string& pauli : all_pauli_strings(n)) {
        const auto it = expectations.find(pauli);
        if (it == expectations.end()) {
            throw IncompleteDataError("missing Pauli expectation \"" + pauli + "\"");
        }
        const double coeff = it->second * scale;
        if (coeff == 0.0) continue;
        const PauliTerm term = parse_pauli_string(pauli, n);
        // P has the single nonzero entry phi(c) at (c ^ flip, c) per column.
        for (std::uint64_t c = 0; c < dim; ++c) {
            rho[(c ^ term.flip_mask) * dim + c] += coeff * pauli_phase(term, c);
        }
    }
    return rho;
}

DensityMatrix project_physical(const std::vector<Complex>& raw, int n) {
    const std::size_t dim = std::size_t{1} << n;
    if (raw.size() != dim * dim) {
        throw std::invalid_argument("raw matrix size does not equal 4^n");
    }
    Complex tr{0.0, 0.0};
    for (std::size_t i = 0; i < dim; ++i) tr += raw[i * dim + i];
    if (std::abs(tr - Complex{1.0, 0.0}) > 0.1) {
        throw DataQualityError("raw reconstruction trace deviates from 1 by more than 0.1");
    }

    Eigen::MatrixXcd m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = raw[r * dim + c];
    }
    // Hermitize before decomposing; the solver uses the lower triangle only.
    Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
    Eigen::VectorXd evals = solver.eigenvalues();  // ascending

    // Zero negative eigenvalues, spreading their mass uniformly over the
    // remaining nonzero ones until all are nonnegative.
    while (true) {
        double negative_mass = 0.0;
        int positive = 0;
        for (Eigen::Index i = 0; i < evals.size(); ++i) {
            if (evals[i] < 0.0) {
                negative_mass += evals[i];
                evals[i] = 0.0;
            } else if (evals[i] > 0.0) {
                ++positive;
            }
        }
        if (negative_mass == 0.0) break;
        const double share = negative_mass / static_cast<double>(positive);
        for (Eigen::Index i = 0; i < evals.size(); ++i) {
            if (evals[i] > 0.0) evals[i] += share;
        }
    }
    const double total = evals.sum();
    evals /= total;

    const Eigen::MatrixXcd rebuilt =
        solver.eigenvectors() * evals.asDiagonal() * solver.eigenvectors().adjoint();

    DensityMatrix out{n, std::vector<Complex>(dim * dim)};
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            out.entries[r * dim + c] = rebuilt(r, c);
        }
    }
    return out;
}

double state_fidelity(const DensityMatrix& rho, const StateVector& target) {
    if (rho.n != target.n) {
        throw std::invalid_argument("density matrix and target widths differ");
    }
    const std::size_t dim = target.amps.size();
    Complex acc{0.0, 0.0};
    for (std::size_t r = 0; r < dim; ++r) {
        Complex row{0.0, 0.0};
        for (std::size_t c = 0; c < dim; ++c) {
            row += rho.entries[r * dim + c] * target.amps[c];
        }
        acc += std::conj(target.amps[r]) * row;
    }
    const double f = acc.real();
    if (f < -1e-12 || f > 1.0 + 1e-12) {
        throw std::invalid_argument("fidelity outside [0, 1] beyond tolerance");
    }
    return std::clamp(f, 0.0, 1.0);
}

namespace {

// Dense unitary of the basis-rotation circuit for one setting.
std::vector<Complex> rotation_matrix(const BasisSetting& setting, int n) {
    const std::size_t dim = std::size_t{1} << n;
    Circuit empty(n);
    const Circuit rot = measurement_circuit(empty, setting);
    std::vector<Complex> u(dim * dim, Complex{0, 0});
    std::vector<Complex> col(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        std::fill(col.begin(), col.end(), Complex{0, 0});
        col[c] = Complex{1, 0};
        for (const GateOp& op : rot.ops()) apply_gate_inplace(col.data(), dim, op);
        for (std::size_t r = 0; r < dim; ++r) u[r * dim + c] = col[r];
    }
    return u;
}

std::vector<Complex> matmul(const std::vector<Complex>& a, const std::vector<Complex>& b,
                            std::size_t dim) {
    std::vector<Complex> out(dim * dim, Complex{0, 0});
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t k = 0; k < dim; ++k) {
            const Complex v = a[r * dim + k];
            if (v == Complex{0, 0}) continue;
            for (std::size_t c = 0; c < dim; ++c) out[r * dim + c] += v * b[k * dim + c];
        }
    }
    return out;
}

std::vector<Complex> dagger(const std::vector<Complex>& m, std::size_t dim) {
    std::vector<Complex> out(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) out[c * dim + r] = std::conj(m[r * dim + c]);
    }
    return out;
}

}  // namespace

DensityMatrix refine_reconstruction(const DensityMatrix& initial, const SettingCounts& data,
                                    int n, int max_iterations) {
    const std::size_t dim = std::size_t{1} << n;
    const std::vector<BasisSetting> settings = basis_settings(n);

    std::vector<std::vector<Complex>> rotations, rotations_dag;
    std::vector<std::vector<double>> freqs;
    rotations.reserve(settings.size());
    for (const BasisSetting& s : settings) {
        const auto it = data.find(s);
        if (it == data.end()) throw IncompleteDataError("missing tomography setting \"" + s + "\"");
        rotations.push_back(rotation_matrix(s, n));
        rotations_dag.push_back(dagger(rotations.back(), dim));
        std::vector<double> f(dim, 0.0);
        for (const auto& [label, count] : it->second.counts) {
            f[parse_basis_label(label)] =
                static_cast<double>(count) / static_cast<double>(it->second.shots);
        }
        freqs.push_back(std::move(f));
    }
    const double weight = 1.0 / static_cast<double>(settings.size());

    // A touch of the maximally mixed state unlocks any exact zeros in the
    // projected start (R*rho*R preserves the kernel of rho).
    std::vector<Complex> rho = initial.entries;
    for (Complex& v : rho) v *= (1.0 - 1e-3);
    for (std::size_t i = 0; i < dim; ++i) {
        rho[i * dim + i] += 1e-3 / static_cast<double>(dim);
    }

    std::vector<Complex> r_op(dim * dim);
    for (int iter = 0; iter < max_iterations; ++iter) {
        std::fill(r_op.begin(), r_op.end(), Complex{0, 0});
        for (std::size_t s = 0; s < rotations.size(); ++s) {
            // p_o = diag(V rho V^dag)
            const std::vector<Complex> rotated =
                matmul(rotations[s], matmul(rho, rotations_dag[s], dim), dim);
            for (std::size_t o = 0; o < dim; ++o) {
                const double f = freqs[s][o];
                if (f == 0.0) continue;
                const double p = std::max(rotated[o * dim + o].real(), 1e-12);
                const double scale = weight * f / p;
                // R += scale * V^dag |o><o| V, i.e. the outer product of
                // V^dag's column o with itself.
                for (std::size_t r = 0; r < dim; ++r) {
                    const Complex vr = rotations_dag[s][r * dim + o];
                    if (vr == Complex{0, 0}) continue;
                    for (std::size_t c = 0; c < dim; ++c) {
                        r_op[r * dim + c] += scale * vr * std::conj(rotations_dag[s][c * dim + o]);
                    }
                }
            }
        }

        std::vector<Complex> next = matmul(r_op, matmul(rho, r_op, dim), dim);
        Complex tr{0, 0};
        for (std::size_t i = 0; i < dim; ++i) tr += next[i * dim + i];
        const double inv = 1.0 / tr.real();
        double delta = 0.0;
        for (std::size_t i = 0; i < next.size(); ++i) {
            next[i] *= inv;
            delta = std::max(delta, std::abs(next[i] - rho[i]));
        }
        rho.swap(next);
        if (delta < 1e-13) break;
    }

    // Hermitize against accumulated rounding.
    DensityMatrix out{n, std::move(rho)};
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = r + 1; c < dim; ++c) {
            const Complex avg =
                0.5 * (out.entries[r * dim + c] + std::conj(out.entries[c * dim + r]));
            out.entries[r * dim + c] = avg;
            out.entries[c * dim + r] = std::conj(avg);
        }
        out.entries[r * dim + r] = Complex{out.entries[r * dim + r].real(), 0.0};
    }
    return out;
}

TomographyResult run_qst(const Circuit& base, const StateVector& target,
                         const std::optional<noise::NoiseModel>& backend,
                         std::uint64_t shots_per_setting, std::uint64_t seed) {
    const int n = base.width();
    if (target.n != n) throw std::invalid_argument("QST target width does not match circuit");

    const std::vector<BasisSetting> settings = basis_settings(n);
    const bool analytic = shots_per_setting == 0;

    SettingCounts counts;
    SettingDistributions dists;
    std::uint64_t stream = 0;
    for (const BasisSetting& setting : settings) {
        const Circuit circ = measurement_circuit(base, setting);
        std::vector<double> dist;
        if (backend.has_value()) {
            const DensityMatrix dm = noise::evolve_noisy(circ, *backend);
            dist = noise::apply_readout_confusion(diagonal_probabilities(dm), *backend, n);
        } else {
            dist = probabilities(apply_circuit(zero_state(n), circ));
        }
        if (analytic) {
            dists[setting] = std::move(dist);
        } else {
            counts[setting] =
                sample_counts(dist, shots_per_setting, derive_stream_seed(seed, stream));
        }
        ++stream;
    }

    const std::map<std::string, double> exps =
        analytic ? estimate_expectations(dists, n) : estimate_expectations(counts, n);

    TomographyResult result;
    result.raw = linear_inversion(exps, n);
    result.rho = project_physical(result.raw, n);
    if (!analytic) {
        // Finite-shot reconstructions carry an eigenvalue-truncation bias
        // from the projection; the likelihood fixed-point iteration removes
        // most of it. Exact data is already at the fixed point.
        result.rho = refine_reconstruction(result.rho, counts, n);
    }
    result.fidelity = state_fidelity(result.rho, target);
    result.shots_per_setting = shots_per_setting;
    result.backend = backend.has_value() ? "noisy" : "ideal";
    return result;
}

std::string to_json(const TomographyResult& result) {
    const int n = result.rho.n;
    const std::size_t dim = std::size_t{1} << n;
    nlohmann::json real_rows = nlohmann::json::array();
    nlohmann::json imag_rows = nlohmann::json::array();
    for (std::size_t r = 0; r < dim; ++r) {
        nlohmann::json re = nlohmann::json::array();
        nlohmann::json im = nlohmann::json::array();
        for (std::size_t c = 0; c < dim; ++c) {
            re.push_back(result.rho.entries[r * dim + c].real());
            im.push_back(result.rho.entries[r * dim + c].imag());
        }
        real_rows.push_back(re);
        imag_rows.push_back(im);
    }
    nlohmann::json j;
    j["n"] = n;
    j["backend"] = result.backend;
    j["shots_per_setting"] = result.shots_per_setting;
    j["analytic"] = result.shots_per_setting == 0;
    j["fidelity"] = result.fidelity;
    j["rho_real"] = real_rows;
    j["rho_imag"] = imag_rows;
    return j.dump();
}

}  // namespace groverlab::tomo
