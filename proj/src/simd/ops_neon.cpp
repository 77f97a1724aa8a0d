// SPDX-License-Identifier: Apache-2.0

// NEON variants, 2 doubles per lane group. vmulq + vaddq rather than
// vfmaq, for the same reason the AVX2 backend avoids fmadd.

#include "ediz/simd.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace ediz::simd {

namespace {

void scale_neon(double* dst, const double* src, double w, std::size_t n) {
    const float64x2_t vw = vdupq_n_f64(w);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(dst + i, vmulq_f64(vw, vld1q_f64(src + i)));
    for (; i < n; ++i)
        dst[i] = w * src[i];
}

void axpy_neon(double* dst, const double* src, double w, std::size_t n) {
    const float64x2_t vw = vdupq_n_f64(w);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t d = vld1q_f64(dst + i);
        const float64x2_t s = vld1q_f64(src + i);
        vst1q_f64(dst + i, vaddq_f64(d, vmulq_f64(vw, s)));
    }
    for (; i < n; ++i)
        dst[i] += w * src[i];
}

void add_neon(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(dst + i, vaddq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    for (; i < n; ++i)
        dst[i] = a[i] + b[i];
}

void sub_neon(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(dst + i, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    for (; i < n; ++i)
        dst[i] = a[i] - b[i];
}

void add_scaled_neon(double* dst, const double* a, const double* b, double g, std::size_t n) {
    const float64x2_t vg = vdupq_n_f64(g);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t va = vld1q_f64(a + i);
        const float64x2_t vb = vld1q_f64(b + i);
        vst1q_f64(dst + i, vaddq_f64(va, vmulq_f64(vg, vb)));
    }
    for (; i < n; ++i)
        dst[i] = a[i] + g * b[i];
}

double ssd_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t d = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
        acc = vaddq_f64(acc, vmulq_f64(d, d));
    }
    double sum = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

} // namespace

const Ops& neon_ops() {
    static const Ops ops{
        "neon", scale_neon, axpy_neon, add_neon, sub_neon, add_scaled_neon, ssd_neon,
    };
    return ops;
}

} // namespace ediz::simd

#endif // __aarch64__
