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
#include <cstddef>
#include <cstdint>

namespace groverlab::kernels {

using Complex = std::complex<double>;

// Data-parallel inner loops over interleaved complex<double> arrays. Two
// implementations exist: a scalar reference and an AVX2 variant compiled
// only on x86-64. The active table is chosen once at startup from CPUID and
// can be overridden (tests equivalence-check the two tables against each
// other; the CLI exposes --kernels).
//
// `dim` is always the array length in complex elements and a power of two.
// `target` is a bit position (0 = least significant). Density matrices are
// handled by the same kernels: an n-qubit matrix in row-major order is a
// 2n-qubit amplitude array whose high n bits index the row.
struct KernelTable {
    const char* name;

    // amps[pair] = [[u00,u01],[u10,u11]] * amps[pair] over all index pairs
    // (i, i | 1<<target). u is row-major.
    void (*apply_1q)(Complex* amps, std::size_t dim, int target, const Complex* u);

    // Diagonal 1-qubit gate: multiply by d0 where the target bit is 0,
    // by d1 where it is 1.
    void (*apply_diag1q)(Complex* amps, std::size_t dim, int target, Complex d0, Complex d1);

    // Pauli-X: swap amps[i] <-> amps[i ^ 1<<target].
    void (*apply_x)(Complex* amps, std::size_t dim, int target);

    // Negate every amplitude whose index has all `mask` bits set.
    void (*phase_flip_mask)(Complex* amps, std::size_t dim, std::uint64_t mask);

    // Multi-controlled X: swap the pair on `target` wherever every bit of
    // ctrl_mask is set. ctrl_mask must not contain the target bit.
    void (*apply_controlled_x)(Complex* amps, std::size_t dim, std::uint64_t ctrl_mask,
                               int target);

    // out[i] = |amps[i]|^2
    void (*probabilities)(const Complex* amps, double* out, std::size_t dim);

    // sum_i |amps[i]|^2
    double (*norm_sq)(const Complex* amps, std::size_t dim);

    // amps[i] *= factor
    void (*scale)(Complex* amps, std::size_t dim, double factor);

    // dst[i] += src[i]
    void (*accumulate)(Complex* dst, const Complex* src, std::size_t dim);
};

enum class Backend { Scalar, Avx2 };

const KernelTable& scalar_kernels();

// nullptr when the build target has no AVX2 variant.
const KernelTable* avx2_kernels();

// True when the running CPU can execute the AVX2 variant.
bool cpu_supports_avx2();

// Table picked at startup (AVX2 when compiled in and supported, otherwise
// scalar), or whatever set_backend() forced last.
const KernelTable& active();
Backend active_backend();

// Throws std::invalid_argument if the requested backend is unavailable.
void set_backend(Backend backend);

}  // namespace groverlab::kernels
