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

#include <utility>

#include "groverlab/kernels/kernels.hpp"

namespace groverlab::kernels {
namespace {

void apply_1q_scalar(Complex* amps, std::size_t dim, int target, const Complex* u) {
    const std::size_t half = std::size_t{1} << target;
    const std::size_t stride = half << 1;
    for (std::size_t base = 0; base < dim; base += stride) {
        for (std::size_t i = 0; i < half; ++i) {
            const std::size_t i0 = base + i;
            const std::size_t i1 = i0 + half;
            const Complex a = amps[i0];
            const Complex b = amps[i1];
            amps[i0] = u[0] * a + u[1] * b;
            amps[i1] = u[2] * a + u[3] * b;
        }
    }
}

void apply_diag1q_scalar(Complex* amps, std::size_t dim, int target, Complex d0, Complex d1) {
    const std::size_t half = std::size_t{1} << target;
    const std::size_t stride = half << 1;
    for (std::size_t base = 0; base < dim; base += stride) {
        for (std::size_t i = 0; i < half; ++i) {
            amps[base + i] *= d0;
            amps[base + i + half] *= d1;
        }
    }
}

void apply_x_scalar(Complex* amps, std::size_t dim, int target) {
    const std::size_t half = std::size_t{1} << target;
    const std::size_t stride = half << 1;
    for (std::size_t base = 0; base < dim; base += stride) {
        for (std::size_t i = 0; i < half; ++i) {
            std::swap(amps[base + i], amps[base + i + half]);
        }
    }
}

void phase_flip_mask_scalar(Complex* amps, std::size_t dim, std::uint64_t mask) {
    // Matching indices are mask | s for every subset s of the free bits.
    const std::uint64_t free_bits = (dim - 1) & ~mask;
    std::uint64_t s = 0;
    while (true) {
        amps[mask | s] = -amps[mask | s];
        if (s == free_bits) break;
        s = (s - free_bits) & free_bits;  // next subset of free_bits
    }
}

void apply_controlled_x_scalar(Complex* amps, std::size_t dim, std::uint64_t ctrl_mask,
                               int target) {
    const std::uint64_t tbit = std::uint64_t{1} << target;
    const std::uint64_t free_bits = (dim - 1) & ~ctrl_mask & ~tbit;
    std::uint64_t s = 0;
    while (true) {
        const std::uint64_t i0 = ctrl_mask | s;
        std::swap(amps[i0], amps[i0 | tbit]);
        if (s == free_bits) break;
        s = (s - free_bits) & free_bits;
    }
}

void probabilities_scalar(const Complex* amps, double* out, std::size_t dim) {
    for (std::size_t i = 0; i < dim; ++i) {
        out[i] = amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    }
}

double norm_sq_scalar(const Complex* amps, std::size_t dim) {
    double acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        acc += amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    }
    return acc;
}

void scale_scalar(Complex* amps, std::size_t dim, double factor) {
    for (std::size_t i = 0; i < dim; ++i) amps[i] *= factor;
}

void accumulate_scalar(Complex* dst, const Complex* src, std::size_t dim) {
    for (std::size_t i = 0; i < dim; ++i) dst[i] += src[i];
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{
        "scalar",
        apply_1q_scalar,
        apply_diag1q_scalar,
        apply_x_scalar,
        phase_flip_mask_scalar,
        apply_controlled_x_scalar,
        probabilities_scalar,
        norm_sq_scalar,
        scale_scalar,
        accumulate_scalar,
    };
    return table;
}

}  // namespace groverlab::kernels
