// SPDX-License-Identifier: Apache-2.0

#include "ediz/simd.hpp"

#include <atomic>

namespace ediz::simd {

#if defined(EDIZ_HAVE_AVX2)
const Ops& avx2_ops();
#endif
#if defined(EDIZ_HAVE_NEON)
const Ops& neon_ops();
#endif

namespace {

bool cpu_has_avx2() {
#if defined(EDIZ_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Ops* detect_best() {
#if defined(EDIZ_HAVE_NEON)
    return &neon_ops(); // baseline on aarch64
#endif
#if defined(EDIZ_HAVE_AVX2)
    if (cpu_has_avx2())
        return &avx2_ops();
#endif
    return &scalar_ops();
}

std::atomic<const Ops*>& active_slot() {
    static std::atomic<const Ops*> slot{detect_best()};
    return slot;
}

} // namespace

std::vector<const Ops*> available_backends() {
    std::vector<const Ops*> v{&scalar_ops()};
#if defined(EDIZ_HAVE_AVX2)
    if (cpu_has_avx2())
        v.push_back(&avx2_ops());
#endif
#if defined(EDIZ_HAVE_NEON)
    v.push_back(&neon_ops());
#endif
    return v;
}

const Ops& active_ops() {
    return *active_slot().load(std::memory_order_relaxed);
}

bool select(Backend backend) {
    switch (backend) {
    case Backend::Auto:
        active_slot().store(detect_best(), std::memory_order_relaxed);
        return true;
    case Backend::Scalar:
        active_slot().store(&scalar_ops(), std::memory_order_relaxed);
        return true;
    case Backend::Avx2:
#if defined(EDIZ_HAVE_AVX2)
        if (cpu_has_avx2()) {
            active_slot().store(&avx2_ops(), std::memory_order_relaxed);
            return true;
        }
#endif
        return false;
    case Backend::Neon:
#if defined(EDIZ_HAVE_NEON)
        active_slot().store(&neon_ops(), std::memory_order_relaxed);
        return true;
#else
        return false;
#endif
    }
    return false;
}

} // namespace ediz::simd
