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

#include <atomic>
#include <stdexcept>

#include "groverlab/kernels/kernels.hpp"

namespace groverlab::kernels {

bool cpu_supports_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {

const KernelTable* pick_default() {
    if (const KernelTable* t = avx2_kernels(); t != nullptr && cpu_supports_avx2()) {
        return t;
    }
    return &scalar_kernels();
}

std::atomic<const KernelTable*>& active_slot() {
    static std::atomic<const KernelTable*> slot{pick_default()};
    return slot;
}

}  // namespace

const KernelTable& active() { return *active_slot().load(std::memory_order_acquire); }

Backend active_backend() {
    return &active() == &scalar_kernels() ? Backend::Scalar : Backend::Avx2;
}

void set_backend(Backend backend) {
    switch (backend) {
        case Backend::Scalar:
            active_slot().store(&scalar_kernels(), std::memory_order_release);
            return;
        case Backend::Avx2: {
            const KernelTable* t = avx2_kernels();
            if (t == nullptr || !cpu_supports_avx2()) {
                throw std::invalid_argument("avx2 kernels unavailable on this CPU/build");
            }
            active_slot().store(t, std::memory_order_release);
            return;
        }
    }
    throw std::invalid_argument("unknown kernel backend");
}

}  // namespace groverlab::kernels
