// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "ediz/raster.hpp"

namespace ediz {

/// Mean squared error over all samples. Shapes must match.
double mse(const Raster& a, const Raster& b);

/// 10 * log10(1 / mse) with peak 1.0 (float-normalized pipeline, not 255).
/// Returns +infinity when mse == 0.
double psnr(const Raster& a, const Raster& b);

/// Mean local SSIM with an 8x8 uniform window, stride 1, constants
/// C1 = 0.01^2 and C2 = 0.03^2 at unit dynamic range. RGB inputs are
/// converted to luma first. Throws if the image is smaller than the
/// window.
double ssim(const Raster& a, const Raster& b);

/// Mean squared response of the 3x3 discrete Laplacian
/// [[0,1,0],[1,-4,1],[0,1,0]] over interior pixels, on luma for RGB.
/// A proxy for visible high-frequency detail.
double hf_energy(const Raster& img);

struct MetricRow {
    double mse = 0.0;
    double psnr = 0.0;
    double ssim = 0.0;
    double hf_energy = 0.0;
};

/// Per-channel rows plus the luma headline row. hf_energy is a property of
/// `img` alone; the paired metrics compare `img` against `reference`.
struct QualityReport {
    std::vector<MetricRow> channel;
    MetricRow luma;
};

QualityReport measure_quality(const Raster& img, const Raster& reference);

} // namespace ediz
