// SPDX-License-Identifier: Apache-2.0

// AVX2 variants, 4 doubles per lane group. mul + add is used instead of
// fmadd so each lane performs exactly the scalar reference arithmetic.

#include "ediz/simd.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace ediz::simd {

namespace {

void scale_avx2(double* dst, const double* src, double w, std::size_t n) {
    const __m256d vw = _mm256_set1_pd(w);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(dst + i, _mm256_mul_pd(vw, _mm256_loadu_pd(src + i)));
    for (; i < n; ++i)
        dst[i] = w * src[i];
}

void axpy_avx2(double* dst, const double* src, double w, std::size_t n) {
    const __m256d vw = _mm256_set1_pd(w);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_loadu_pd(dst + i);
        const __m256d s = _mm256_loadu_pd(src + i);
        _mm256_storeu_pd(dst + i, _mm256_add_pd(d, _mm256_mul_pd(vw, s)));
    }
    for (; i < n; ++i)
        dst[i] += w * src[i];
}

void add_avx2(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(dst + i, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i)
        dst[i] = a[i] + b[i];
}

void sub_avx2(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(dst + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i)
        dst[i] = a[i] - b[i];
}

void add_scaled_avx2(double* dst, const double* a, const double* b, double g, std::size_t n) {
    const __m256d vg = _mm256_set1_pd(g);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        const __m256d vb = _mm256_loadu_pd(b + i);
        _mm256_storeu_pd(dst + i, _mm256_add_pd(va, _mm256_mul_pd(vg, vb)));
    }
    for (; i < n; ++i)
        dst[i] = a[i] + g * b[i];
}

double ssd_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

} // namespace

const Ops& avx2_ops() {
    static const Ops ops{
        "avx2", scale_avx2, axpy_avx2, add_avx2, sub_avx2, add_scaled_avx2, ssd_avx2,
    };
    return ops;
}

} // namespace ediz::simd

#endif // x86_64
