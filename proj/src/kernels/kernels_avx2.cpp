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

#include "groverlab/kernels/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define GROVERLAB_HAVE_AVX2_BUILD 1
#include <immintrin.h>

#include <utility>
#else
#define GROVERLAB_HAVE_AVX2_BUILD 0
#endif

namespace groverlab::kernels {

#if GROVERLAB_HAVE_AVX2_BUILD

namespace {

// One __m256d holds two interleaved complex doubles [re0, im0, re1, im1].

// Elementwise complex multiply of v by the constant (cr + i*ci).
inline __m256d cmul_const(__m256d v, double cr, double ci) {
    const __m256d t0 = _mm256_mul_pd(_mm256_set1_pd(cr), v);
    const __m256d swapped = _mm256_permute_pd(v, 0x5);  // [im0, re0, im1, re1]
    const __m256d t1 = _mm256_mul_pd(_mm256_set1_pd(ci), swapped);
    return _mm256_addsub_pd(t0, t1);
}

// Elementwise complex multiply where each lane pair has its own constant:
// lane 0 by (re_lo + i*im_lo), lane 1 by (re_hi + i*im_hi).
inline __m256d cmul_const2(__m256d v, double re_lo, double im_lo, double re_hi, double im_hi) {
    const __m256d re = _mm256_set_pd(re_hi, re_hi, re_lo, re_lo);
    const __m256d im = _mm256_set_pd(im_hi, im_hi, im_lo, im_lo);
    const __m256d t0 = _mm256_mul_pd(re, v);
    const __m256d swapped = _mm256_permute_pd(v, 0x5);
    const __m256d t1 = _mm256_mul_pd(im, swapped);
    return _mm256_addsub_pd(t0, t1);
}

void apply_1q_avx2(Complex* amps, std::size_t dim, int target, const Complex* u) {
    double* p = reinterpret_cast<double*>(amps);
    const double u00r = u[0].real(), u00i = u[0].imag();
    const double u01r = u[1].real(), u01i = u[1].imag();
    const double u10r = u[2].real(), u10i = u[2].imag();
    const double u11r = u[3].real(), u11i = u[3].imag();

    if (target == 0) {
        // Each vector is one (a0, a1) pair.
        for (std::size_t i = 0; i < dim; i += 2) {
            const __m256d v = _mm256_loadu_pd(p + 2 * i);
            const __m256d a0 = _mm256_permute4x64_pd(v, 0x44);  // [a0, a0]
            const __m256d a1 = _mm256_permute4x64_pd(v, 0xEE);  // [a1, a1]
            // Column 0 of u in the low lane, column 1 in the high lane.
            const __m256d r = _mm256_add_pd(cmul_const2(a0, u00r, u00i, u10r, u10i),
                                            cmul_const2(a1, u01r, u01i, u11r, u11i));
            _mm256_storeu_pd(p + 2 * i, r);
        }
        return;
    }

    const std::size_t half = std::size_t{1} << target;
    const std::size_t stride = half << 1;
    for (std::size_t base = 0; base < dim; base += stride) {
        for (std::size_t i = 0; i < half; i += 2) {
            double* lo = p + 2 * (base + i);
            double* hi = lo + 2 * half;
            const __m256d va = _mm256_loadu_pd(lo);
            const __m256d vb = _mm256_loadu_pd(hi);
            const __m256d ra =
                _mm256_add_pd(cmul_const(va, u00r, u00i), cmul_const(vb, u01r, u01i));
            const __m256d rb =
                _mm256_add_pd(cmul_const(va, u10r, u10i), cmul_const(vb, u11r, u11i));
            _mm256_storeu_pd(lo, ra);
            _mm256_storeu_pd(hi, rb);
        }
    }
}

void apply_diag1q_avx2(Complex* amps, std::size_t dim, int target, Complex d0, Complex d1) {
    double* p = reinterpret_cast<double*>(amps);
    if (target == 0) {
        for (std::size_t i = 0; i < dim; i += 2) {
            const __m256d v = _mm256_loadu_pd(p + 2 * i);
            _mm256_storeu_pd(p + 2 * i,
                             cmul_const2(v, d0.real(), d0.imag(), d1.real(), d1.imag()));
        }
        return;
    }
    const std::size_t half = std::size_t{1} << target;
    const std::size_t stride = half << 1;
    for (std::size_t base = 0; base < dim; base += stride) {
        for (std::size_t i = 0; i < half; i += 2) {
            double* lo = p + 2 * (base + i);
            double* hi = lo + 2 * half;
            _mm256_storeu_pd(lo, cmul_const(_mm256_loadu_pd(lo), d0.real(), d0.imag()));
            _mm256_storeu_pd(hi, cmul_const(_mm256_loadu_pd(hi), d1.real(), d1.imag()));
        }
    }
}

void apply_x_avx2(Complex* amps, std::size_t dim, int target) {
    double* p = reinterpret_cast<double*>(amps);
    if (target == 0) {
        for (std::size_t i = 0; i < dim; i += 2) {
            const __m256d v = _mm256_loadu_pd(p + 2 * i);
            _mm256_storeu_pd(p + 2 * i, _mm256_permute4x64_pd(v, 0x4E));  // swap halves
        }
        return;
    }
    const std::size_t half = std::size_t{1} << target;
    const std::size_t stride = half << 1;
    for (std::size_t base = 0; base < dim; base += stride) {
        for (std::size_t i = 0; i < half; i += 2) {
            double* lo = p + 2 * (base + i);
            double* hi = lo + 2 * half;
            const __m256d va = _mm256_loadu_pd(lo);
            const __m256d vb = _mm256_loadu_pd(hi);
            _mm256_storeu_pd(lo, vb);
            _mm256_storeu_pd(hi, va);
        }
    }
}

void phase_flip_mask_avx2(Complex* amps, std::size_t dim, std::uint64_t mask) {
    double* p = reinterpret_cast<double*>(amps);
    const std::uint64_t free_bits = (dim - 1) & ~mask;
    // Matching indices form contiguous runs of 2^tz elements (tz = trailing
    // free bits below the lowest mask bit); negate runs vectorized when the
    // run covers at least one full vector.
    std::uint64_t run = 1;
    if (mask != 0) {
        std::uint64_t low = mask & (~mask + 1);
        run = low;  // indices below the lowest mask bit are all free
    } else {
        run = dim;
    }
    const __m256d sign = _mm256_set1_pd(-0.0);
    const std::uint64_t high_free = free_bits & ~(run - 1);
    std::uint64_t s = 0;
    while (true) {
        const std::uint64_t start = mask | s;
        if (run >= 2) {
            for (std::uint64_t i = 0; i < run; i += 2) {
                double* q = p + 2 * (start + i);
                _mm256_storeu_pd(q, _mm256_xor_pd(_mm256_loadu_pd(q), sign));
            }
        } else {
            amps[start] = -amps[start];
        }
        if (s == high_free) break;
        s = (s - high_free) & high_free;
    }
}

void probabilities_avx2(const Complex* amps, double* out, std::size_t dim) {
    const double* p = reinterpret_cast<const double*>(amps);
    std::size_t i = 0;
    for (; i + 4 <= dim; i += 4) {
        const __m256d a = _mm256_loadu_pd(p + 2 * i);      // amps[i..i+1]
        const __m256d b = _mm256_loadu_pd(p + 2 * i + 4);  // amps[i+2..i+3]
        const __m256d aa = _mm256_mul_pd(a, a);
        const __m256d bb = _mm256_mul_pd(b, b);
        // hadd yields [a0, b0, a1, b1] pairwise sums; restore element order.
        const __m256d h = _mm256_hadd_pd(aa, bb);
        _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(h, 0xD8));
    }
    for (; i < dim; ++i) {
        out[i] = amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    }
}

double norm_sq_avx2(const Complex* amps, std::size_t dim) {
    const double* p = reinterpret_cast<const double*>(amps);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= dim; i += 2) {
        const __m256d v = _mm256_loadu_pd(p + 2 * i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < dim; ++i) {
        total += amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    }
    return total;
}

void scale_avx2(Complex* amps, std::size_t dim, double factor) {
    double* p = reinterpret_cast<double*>(amps);
    const __m256d f = _mm256_set1_pd(factor);
    std::size_t i = 0;
    for (; i + 2 <= dim; i += 2) {
        _mm256_storeu_pd(p + 2 * i, _mm256_mul_pd(_mm256_loadu_pd(p + 2 * i), f));
    }
    for (; i < dim; ++i) amps[i] *= factor;
}

void accumulate_avx2(Complex* dst, const Complex* src, std::size_t dim) {
    double* d = reinterpret_cast<double*>(dst);
    const double* s = reinterpret_cast<const double*>(src);
    std::size_t i = 0;
    for (; i + 2 <= dim; i += 2) {
        _mm256_storeu_pd(d + 2 * i,
                         _mm256_add_pd(_mm256_loadu_pd(d + 2 * i), _mm256_loadu_pd(s + 2 * i)));
    }
    for (; i < dim; ++i) dst[i] += src[i];
}

// The multi-controlled X inner loop is a strided pair swap over a sparse
// index set; the scalar walk is already memory bound, so the AVX2 table
// reuses it.
void apply_controlled_x_fallback(Complex* amps, std::size_t dim, std::uint64_t ctrl_mask,
                                 int target) {
    scalar_kernels().apply_controlled_x(amps, dim, ctrl_mask, target);
}

}  // namespace

const KernelTable* avx2_kernels() {
    static const KernelTable table{
        "avx2",
        apply_1q_avx2,
        apply_diag1q_avx2,
        apply_x_avx2,
        phase_flip_mask_avx2,
        apply_controlled_x_fallback,
        probabilities_avx2,
        norm_sq_avx2,
        scale_avx2,
        accumulate_avx2,
    };
    return &table;
}

#else  // !GROVERLAB_HAVE_AVX2_BUILD

const KernelTable* avx2_kernels() { return nullptr; }

#endif

}  // namespace groverlab::kernels
