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

#include <cmath>
#include <stdexcept>

#include "groverlab/noise/noise.hpp"

namespace groverlab::noise {

namespace {

using Matrix = std::vector<Complex>;  // row-major square

Matrix kron(const Matrix& a, std::size_t da, const Matrix& b, std::size_t db) {
    Matrix out(da * db * da * db);
    const std::size_t d = da * db;
    for (std::size_t ra = 0; ra < da; ++ra) {
        for (std::size_t ca = 0; ca < da; ++ca) {
            for (std::size_t rb = 0; rb < db; ++rb) {
                for (std::size_t cb = 0; cb < db; ++cb) {
                    out[(ra * db + rb) * d + (ca * db + cb)] = a[ra * da + ca] * b[rb * db + cb];
                }
            }
        }
    }
    return out;
}

const Matrix kPauli1[4] = {
    {Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}},    // I
    {Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}},    // X
    {Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0}},   // Y
    {Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{-1, 0}},   // Z
};

Matrix pauli_tensor(unsigned code, int arity) {
    // Base-4 digits of `code`, digit j = Pauli on operand j.
    Matrix m = kPauli1[code & 3];
    std::size_t dim = 2;
    for (int j = 1; j < arity; ++j) {
        m = kron(kPauli1[(code >> (2 * j)) & 3], 2, m, dim);
        dim *= 2;
    }
    return m;
}

void scale_matrix(Matrix& m, double factor) {
    for (Complex& v : m) v *= factor;
}

}  // namespace

KrausChannel depolarizing_channel(double p, int arity) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("depolarizing probability must lie in [0, 1]");
    }
    if (arity < 1) throw std::invalid_argument("channel arity must be >= 1");

    const unsigned pauli_count = 1u << (2 * arity);  // 4^arity
    // (1-p) rho + p/4^m sum_P P rho P^dag  ==  (1-p) rho + p I/2^m.
    const double uniform_weight = p / static_cast<double>(pauli_count);

    std::vector<Matrix> ops;
    Matrix identity = pauli_tensor(0, arity);
    scale_matrix(identity, std::sqrt(1.0 - p + uniform_weight));
    ops.push_back(std::move(identity));
    if (p > 0.0) {
        for (unsigned code = 1; code < pauli_count; ++code) {
            Matrix m = pauli_tensor(code, arity);
            scale_matrix(m, std::sqrt(uniform_weight));
            ops.push_back(std::move(m));
        }
    }
    return make_channel(arity, std::move(ops));
}

KrausChannel thermal_relaxation_channel(double t1_us, double t2_us, double duration_ns) {
    if (!(t1_us > 0.0)) throw std::invalid_argument("T1 must be positive");
    if (!(t2_us > 0.0)) throw std::invalid_argument("T2 must be positive");
    if (t2_us > 2.0 * t1_us * (1.0 + 1e-9)) {
        throw std::invalid_argument("T2 must not exceed 2*T1");
    }
    if (duration_ns < 0.0) throw std::invalid_argument("duration must be nonnegative");

    const double d_us = duration_ns * 1e-3;
    const double gamma = -std::expm1(-d_us / t1_us);        // 1 - e^{-d/T1}
    const double sqrt_keep = std::sqrt(1.0 - gamma);        // e^{-d/(2 T1)}
    // Residual pure dephasing so the off-diagonal decays by e^{-d/T2} total.
    const double residual = std::exp(-d_us / t2_us) / sqrt_keep;
    const double pz = 0.5 * (1.0 - std::min(1.0, residual));

    // Damping Kraus pair followed by the dephasing pair.
    const Matrix damp0 = {Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{sqrt_keep, 0}};
    const Matrix damp1 = {Complex{0, 0}, Complex{std::sqrt(gamma), 0}, Complex{0, 0},
                          Complex{0, 0}};

    std::vector<Matrix> ops;
    for (const Matrix& base : {damp0, damp1}) {
        Matrix keep = base;
        scale_matrix(keep, std::sqrt(1.0 - pz));
        Matrix flip = {base[0], base[1], -base[2], -base[3]};  // Z * base
        scale_matrix(flip, std::sqrt(pz));
        ops.push_back(std::move(keep));
        ops.push_back(std::move(flip));
    }
    // Drop numerically empty operators (gamma or pz equal to zero).
    std::vector<Matrix> kept;
    for (Matrix& m : ops) {
        double mass = 0.0;
        for (const Complex& v : m) mass += std::norm(v);
        if (mass > 1e-30) kept.push_back(std::move(m));
    }
    return make_channel(1, std::move(kept));
}

std::array<double, 4> readout_confusion(double p10, double p01) {
    if (!(p10 >= 0.0 && p10 <= 1.0) || !(p01 >= 0.0 && p01 <= 1.0)) {
        throw std::invalid_argument("readout flip probabilities must lie in [0, 1]");
    }
    return {1.0 - p10, p01, p10, 1.0 - p01};
}

std::vector<double> apply_readout_confusion(std::vector<double> dist, const NoiseModel& model,
                                            int n) {
    if (dist.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("distribution length does not equal 2^n");
    }
    for (int q = 0; q < n; ++q) {
        const ReadoutConfusion& rc = model.readout_for(q);
        if (rc.p_m1p0 == 0.0 && rc.p_m0p1 == 0.0) continue;
        const std::array<double, 4> m = readout_confusion(rc.p_m1p0, rc.p_m0p1);
        const std::size_t half = std::size_t{1} << q;
        const std::size_t stride = half << 1;
        for (std::size_t base = 0; base < dist.size(); base += stride) {
            for (std::size_t i = 0; i < half; ++i) {
                const double p0 = dist[base + i];
                const double p1 = dist[base + i + half];
                dist[base + i] = m[0] * p0 + m[1] * p1;
                dist[base + i + half] = m[2] * p0 + m[3] * p1;
            }
        }
    }
    return dist;
}

}  // namespace groverlab::noise
