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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <random>
#include <vector>

#include "groverlab/kernels/kernels.hpp"

using groverlab::kernels::Complex;
using groverlab::kernels::KernelTable;

namespace {

std::vector<Complex> random_amps(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> amps(dim);
    for (Complex& a : amps) a = Complex{u(rng), u(rng)};
    return amps;
}

void expect_close(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CAPTURE(i);
        CHECK(std::abs(a[i] - b[i]) <= tol);
    }
}

const KernelTable* avx2_or_skip() {
    const KernelTable* t = groverlab::kernels::avx2_kernels();
    if (t == nullptr || !groverlab::kernels::cpu_supports_avx2()) return nullptr;
    return t;
}

constexpr double kTol = 1e-12;

}  // namespace

TEST_CASE("avx2 matches scalar: apply_1q over all targets and sizes") {
    const KernelTable* avx2 = avx2_or_skip();
    if (avx2 == nullptr) return;
    const KernelTable& scalar = groverlab::kernels::scalar_kernels();

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n = 1; n <= 7; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        for (int target = 0; target < n; ++target) {
            Complex mat[4];
            for (Complex& v : mat) v = Complex{u(rng), u(rng)};
            std::vector<Complex> a = random_amps(dim, 100 * n + target);
            std::vector<Complex> b = a;
            scalar.apply_1q(a.data(), dim, target, mat);
            avx2->apply_1q(b.data(), dim, target, mat);
            expect_close(a, b, kTol);
        }
    }
}

TEST_CASE("avx2 matches scalar: diagonal gate") {
    const KernelTable* avx2 = avx2_or_skip();
    if (avx2 == nullptr) return;
    const KernelTable& scalar = groverlab::kernels::scalar_kernels();

    for (int n = 1; n <= 6; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        for (int target = 0; target < n; ++target) {
            const Complex d0{0.3, -0.4};
            const Complex d1{-0.9, 0.1};
            std::vector<Complex> a = random_amps(dim, 41 * n + target);
            std::vector<Complex> b = a;
            scalar.apply_diag1q(a.data(), dim, target, d0, d1);
            avx2->apply_diag1q(b.data(), dim, target, d0, d1);
            expect_close(a, b, kTol);
        }
    }
}

TEST_CASE("avx2 matches scalar: pauli x swap") {
    const KernelTable* avx2 = avx2_or_skip();
    if (avx2 == nullptr) return;
    const KernelTable& scalar = groverlab::kernels::scalar_kernels();

    for (int n = 1; n <= 6; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        for (int target = 0; target < n; ++target) {
            std::vector<Complex> a = random_amps(dim, 13 * n + target);
            std::vector<Complex> b = a;
            scalar.apply_x(a.data(), dim, target);
            avx2->apply_x(b.data(), dim, target);
            expect_close(a, b, 0.0);
        }
    }
}

TEST_CASE("avx2 matches scalar: masked phase flip over every mask") {
    const KernelTable* avx2 = avx2_or_skip();
    if (avx2 == nullptr) return;
    const KernelTable& scalar = groverlab::kernels::scalar_kernels();

    for (int n = 1; n <= 6; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        for (std::uint64_t mask = 0; mask < dim; ++mask) {
            std::vector<Complex> a = random_amps(dim, 1000 * n + mask);
            std::vector<Complex> b = a;
            scalar.phase_flip_mask(a.data(), dim, mask);
            avx2->phase_flip_mask(b.data(), dim, mask);
            expect_close(a, b, 0.0);
        }
    }
}

TEST_CASE("avx2 matches scalar: probabilities, norm, scale, accumulate") {
    const KernelTable* avx2 = avx2_or_skip();
    if (avx2 == nullptr) return;
    const KernelTable& scalar = groverlab::kernels::scalar_kernels();

    for (int n = 1; n <= 8; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        const std::vector<Complex> amps = random_amps(dim, 997 + n);

        std::vector<double> pa(dim), pb(dim);
        scalar.probabilities(amps.data(), pa.data(), dim);
        avx2->probabilities(amps.data(), pb.data(), dim);
        for (std::size_t i = 0; i < dim; ++i) CHECK(pa[i] == doctest::Approx(pb[i]).epsilon(1e-14));

        CHECK(scalar.norm_sq(amps.data(), dim) ==
              doctest::Approx(avx2->norm_sq(amps.data(), dim)).epsilon(1e-13));

        std::vector<Complex> sa = amps, sb = amps;
        scalar.scale(sa.data(), dim, 0.731);
        avx2->scale(sb.data(), dim, 0.731);
        expect_close(sa, sb, 0.0);

        std::vector<Complex> da = amps, db = amps;
        const std::vector<Complex> src = random_amps(dim, 4242 + n);
        scalar.accumulate(da.data(), src.data(), dim);
        avx2->accumulate(db.data(), src.data(), dim);
        expect_close(da, db, 0.0);
    }
}

TEST_CASE("phase flip hits exactly the indices with all mask bits set") {
    const KernelTable& scalar = groverlab::kernels::scalar_kernels();
    const std::size_t dim = 16;
    for (std::uint64_t mask = 0; mask < dim; ++mask) {
        std::vector<Complex> amps(dim, Complex{1.0, 0.0});
        scalar.phase_flip_mask(amps.data(), dim, mask);
        for (std::size_t i = 0; i < dim; ++i) {
            const bool flipped = (i & mask) == mask;
            CHECK(amps[i] == (flipped ? Complex{-1.0, 0.0} : Complex{1.0, 0.0}));
        }
    }
}

TEST_CASE("controlled x swaps exactly the controlled pairs") {
    const KernelTable& scalar = groverlab::kernels::scalar_kernels();
    const std::size_t dim = 16;
    // controls {0, 2}, target 3
    const std::uint64_t ctrl = 0b0101;
    std::vector<Complex> amps(dim);
    for (std::size_t i = 0; i < dim; ++i) amps[i] = Complex{static_cast<double>(i), 0.0};
    scalar.apply_controlled_x(amps.data(), dim, ctrl, 3);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::size_t expect = ((i & ctrl) == ctrl) ? (i ^ 0b1000) : i;
        CHECK(amps[i].real() == doctest::Approx(static_cast<double>(expect)));
    }
}

TEST_CASE("backend dispatch") {
    using groverlab::kernels::Backend;
    const Backend original = groverlab::kernels::active_backend();

    groverlab::kernels::set_backend(Backend::Scalar);
    CHECK(groverlab::kernels::active_backend() == Backend::Scalar);
    CHECK(std::string(groverlab::kernels::active().name) == "scalar");

    if (avx2_or_skip() != nullptr) {
        groverlab::kernels::set_backend(Backend::Avx2);
        CHECK(groverlab::kernels::active_backend() == Backend::Avx2);
        CHECK(std::string(groverlab::kernels::active().name) == "avx2");
    }
    groverlab::kernels::set_backend(original);
}
