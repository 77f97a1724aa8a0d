// SPDX-License-Identifier: Apache-2.0

// Reference implementations. The vector backends must match these
// elementwise ops bit for bit (the build disables FP contraction), and may
// only reassociate the ssd reduction.

#include "ediz/simd.hpp"

namespace ediz::simd {

namespace {

void scale_scalar(double* dst, const double* src, double w, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = w * src[i];
}

void axpy_scalar(double* dst, const double* src, double w, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] += w * src[i];
}

void add_scalar(double* dst, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = a[i] + b[i];
}

void sub_scalar(double* dst, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = a[i] - b[i];
}

void add_scaled_scalar(double* dst, const double* a, const double* b, double g, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = a[i] + g * b[i];
}

double ssd_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops{
        "scalar", scale_scalar, axpy_scalar, add_scalar, sub_scalar, add_scaled_scalar,
        ssd_scalar,
    };
    return ops;
}

} // namespace ediz::simd
