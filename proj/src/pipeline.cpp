// SPDX-License-Identifier: Apache-2.0

#include "ediz/pipeline.hpp"

#include <stdexcept>
#include <string>

namespace ediz {

namespace {

void validate(const EdizConfig& cfg) {
    if (cfg.factor < 2)
        throw std::invalid_argument("zoom factor must be >= 2, got " +
                                    std::to_string(cfg.factor));
    if (!(cfg.error_gain >= 0.0))
        throw std::invalid_argument("error gain must be >= 0, got " +
                                    std::to_string(cfg.error_gain));
}

// Strict: reject non-divisible dimensions, naming the axis. PadReplicate:
// return an edge-padded working copy; callers crop results back.
Raster prepare_input(const Raster& img, const EdizConfig& cfg) {
    const int n = cfg.factor;
    const int rem_w = img.width() % n;
    const int rem_h = img.height() % n;
    if (rem_w == 0 && rem_h == 0)
        return img;
    if (cfg.divisibility == EdizConfig::Divisibility::Strict) {
        if (rem_w != 0)
            throw ShapeError("ediz: width " + std::to_string(img.width()) +
                             " not divisible by factor " + std::to_string(n));
        throw ShapeError("ediz: height " + std::to_string(img.height()) +
                         " not divisible by factor " + std::to_string(n));
    }
    return pad_replicate(img, rem_w ? n - rem_w : 0, rem_h ? n - rem_h : 0);
}

} // namespace

EdizTrace ediz_zoom(const Raster& img, const EdizConfig& cfg) {
    validate(cfg);
    const int n = cfg.factor;
    const Raster work = prepare_input(img, cfg);

    Raster i_zout = subsample(work, n);
    Raster i_rec = upsample(i_zout, n, cfg.kernel);
    Raster error_e = subtract(work, i_rec);
    Raster estimated = upsample(error_e, n, cfg.error_kernel.value_or(cfg.kernel));
    Raster i_in_zoom = upsample(work, n, cfg.kernel);
    Raster i_out = add_scaled(i_in_zoom, estimated, cfg.error_gain);

    if (work.width() != img.width() || work.height() != img.height()) {
        const int w = img.width();
        const int h = img.height();
        i_rec = crop_top_left(i_rec, w, h);
        error_e = crop_top_left(error_e, w, h);
        estimated = crop_top_left(estimated, w * n, h * n);
        i_in_zoom = crop_top_left(i_in_zoom, w * n, h * n);
        i_out = crop_top_left(i_out, w * n, h * n);
    }

    return EdizTrace{std::move(i_zout), std::move(i_rec),     std::move(error_e),
                     std::move(estimated), std::move(i_in_zoom), std::move(i_out)};
}

Raster reconstruction_error(const Raster& img, const EdizConfig& cfg) {
    validate(cfg);
    const Raster work = prepare_input(img, cfg);
    Raster i_rec = upsample(subsample(work, cfg.factor), cfg.factor, cfg.kernel);
    Raster error_e = subtract(work, i_rec);
    if (work.width() != img.width() || work.height() != img.height())
        error_e = crop_top_left(error_e, img.width(), img.height());
    return error_e;
}

} // namespace ediz
