// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

namespace ediz::simd {

/// Vectorizable array primitives used by the resampling passes, raster
/// arithmetic and metric reductions. `scalar` is the reference
/// implementation; other backends must produce identical results for the
/// elementwise ops (same per-element operation order, no FMA contraction)
/// and may reassociate only the reductions (ssd).
struct Ops {
    const char* name;
    // dst = w * src
    void (*scale)(double* dst, const double* src, double w, std::size_t n);
    // dst += w * src
    void (*axpy)(double* dst, const double* src, double w, std::size_t n);
    // dst = a + b
    void (*add)(double* dst, const double* a, const double* b, std::size_t n);
    // dst = a - b
    void (*sub)(double* dst, const double* a, const double* b, std::size_t n);
    // dst = a + g * b
    void (*add_scaled)(double* dst, const double* a, const double* b, double g, std::size_t n);
    // sum((a - b)^2)
    double (*ssd)(const double* a, const double* b, std::size_t n);
};

enum class Backend { Auto, Scalar, Avx2, Neon };

const Ops& scalar_ops();

/// Backends compiled in and usable on this CPU (always includes scalar).
std::vector<const Ops*> available_backends();

/// Currently selected backend; defaults to the best available.
const Ops& active_ops();

/// Force a backend (Backend::Auto restores runtime detection).
/// Returns false and leaves the selection unchanged if the requested
/// backend is not available on this CPU.
bool select(Backend backend);

} // namespace ediz::simd
