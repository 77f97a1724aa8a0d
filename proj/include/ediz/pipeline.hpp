// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "ediz/kernels.hpp"
#include "ediz/raster.hpp"
#include "ediz/resample.hpp"

namespace ediz {

/// Configuration of the error-feedback zoom. error_gain scales the detail
/// correction added in the final step; 1.0 is the plain unweighted sum.
/// error_kernel, when set, is used only for zooming the error field
/// (experimentation knob; the default shares `kernel` for every stage).
struct EdizConfig {
    int factor = 2;
    Kernel kernel = Kernel::cubic();
    double error_gain = 1.0;
    std::optional<Kernel> error_kernel;

    enum class Divisibility { Strict, PadReplicate };
    Divisibility divisibility = Divisibility::Strict;
};

/// All intermediates of one ediz_zoom run. For a W x H input and factor n:
/// i_zout is (W/n) x (H/n), i_rec and error_e match the input, and
/// estimated_error, i_in_zoom and i_out are (W*n) x (H*n).
///
/// Under Divisibility::PadReplicate with non-divisible input, the pipeline
/// runs on a right/bottom edge-padded copy; every field except i_zout is
/// cropped back to the sizes above (i_zout keeps the padded reduced size).
struct EdizTrace {
    Raster i_zout;          // input decimated by n
    Raster i_rec;           // i_zout zoomed back to input size
    Raster error_e;         // input - i_rec (signed)
    Raster estimated_error; // error_e zoomed by n (signed)
    Raster i_in_zoom;       // input zoomed by n
    Raster i_out;           // i_in_zoom + error_gain * estimated_error
};

/// Error-feedback zoom: decimate the input, zoom it back, take the
/// reconstruction error, zoom the error, and add it to the plainly zoomed
/// input. The error term is exactly what the chosen kernel fails to
/// recover from its own decimation, so the correction vanishes wherever
/// the kernel is already exact. No stage clamps; quantization happens at
/// file save only.
EdizTrace ediz_zoom(const Raster& img, const EdizConfig& cfg);

/// Steps 1-3 only: the signed reconstruction error at input resolution.
Raster reconstruction_error(const Raster& img, const EdizConfig& cfg);

} // namespace ediz
