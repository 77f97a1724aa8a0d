// SPDX-License-Identifier: Apache-2.0

#include "ediz/resample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ediz/simd.hpp"

namespace ediz {

namespace detail {

WeightTable build_weights_impl(int len_in, int factor, const Kernel& kernel, bool normalize) {
    if (factor < 2)
        throw std::invalid_argument("resampling factor must be >= 2, got " +
                                    std::to_string(factor));
    if (len_in < 1)
        throw std::invalid_argument("input length must be >= 1, got " + std::to_string(len_in));

    WeightTable table;
    table.factor_ = factor;
    table.len_in_ = len_in;
    table.begin_.reserve(factor + 1);
    table.begin_.push_back(0);

    const double support = kernel.support();
    for (int p = 0; p < factor; ++p) {
        // Output j with j mod factor == p sits at source coordinate
        // floor(j / factor) + p / factor.
        const double frac = double(p) / factor;
        const int lo = int(std::floor(frac - support)) + 1;
        const int hi = int(std::ceil(frac + support)) - 1;

        const std::size_t first = table.taps_.size();
        double sum = 0.0;
        for (int m = lo; m <= hi; ++m) {
            const double w = kernel(frac - m);
            if (w != 0.0) {
                table.taps_.push_back(Tap{m, w});
                sum += w;
            }
        }
        if (normalize) {
            for (std::size_t k = first; k < table.taps_.size(); ++k)
                table.taps_[k].weight /= sum;
        }
        table.begin_.push_back(table.taps_.size());
    }
    return table;
}

Raster subsample_offset(const Raster& img, int factor, int offset) {
    if (factor < 2)
        throw std::invalid_argument("decimation factor must be >= 2, got " +
                                    std::to_string(factor));
    if (img.width() % factor != 0)
        throw ShapeError("subsample: width " + std::to_string(img.width()) +
                         " not divisible by factor " + std::to_string(factor));
    if (img.height() % factor != 0)
        throw ShapeError("subsample: height " + std::to_string(img.height()) +
                         " not divisible by factor " + std::to_string(factor));

    const int c = img.channels();
    Raster out(img.width() / factor, img.height() / factor, c, img.is_signed());
    for (int y = 0; y < out.height(); ++y) {
        const double* src = img.row_ptr(y * factor + offset);
        double* dst = out.row_ptr(y);
        for (int x = 0; x < out.width(); ++x)
            for (int ch = 0; ch < c; ++ch)
                dst[std::size_t(x) * c + ch] = src[std::size_t(x * factor + offset) * c + ch];
    }
    return out;
}

} // namespace detail

WeightTable build_weights(int len_in, int factor, const Kernel& kernel) {
    return detail::build_weights_impl(len_in, factor, kernel, true);
}

namespace {

// One row, horizontal: interleaved channels make this a strided gather, so
// it stays scalar. Interior pixels skip the clamp.
void resample_row(const double* src, int len_in, int channels, double* dst,
                  const WeightTable& table) {
    const int n = table.factor();
    const int len_out = len_in * n;
    for (int j = 0; j < len_out; ++j) {
        const int i0 = j / n;
        const auto taps = table.phase(j % n);
        double* out = dst + std::size_t(j) * channels;

        const bool interior =
            i0 + taps.front().offset >= 0 && i0 + taps.back().offset < len_in;
        if (interior) {
            for (int ch = 0; ch < channels; ++ch) {
                double acc = 0.0;
                for (const Tap& t : taps)
                    acc += t.weight * src[std::size_t(i0 + t.offset) * channels + ch];
                out[ch] = acc;
            }
        } else {
            for (int ch = 0; ch < channels; ++ch) {
                double acc = 0.0;
                for (const Tap& t : taps) {
                    const int si = std::clamp(i0 + t.offset, 0, len_in - 1);
                    acc += t.weight * src[std::size_t(si) * channels + ch];
                }
                out[ch] = acc;
            }
        }
    }
}

Raster pass_horizontal(const Raster& img, const WeightTable& table) {
    Raster out(img.width() * table.factor(), img.height(), img.channels(), img.is_signed());
    for (int y = 0; y < img.height(); ++y)
        resample_row(img.row_ptr(y), img.width(), img.channels(), out.row_ptr(y), table);
    return out;
}

// Vertical: whole rows are contiguous, so each output row is a weighted
// sum of source rows done with the vector backend.
Raster pass_vertical(const Raster& img, const WeightTable& table) {
    const auto& ops = simd::active_ops();
    const int n = table.factor();
    const int rows_in = img.height();
    Raster out(img.width(), rows_in * n, img.channels(), img.is_signed());
    const std::size_t row_len = img.row_stride();

    for (int j = 0; j < out.height(); ++j) {
        const int i0 = j / n;
        const auto taps = table.phase(j % n);
        double* dst = out.row_ptr(j);

        const int s0 = std::clamp(i0 + taps.front().offset, 0, rows_in - 1);
        ops.scale(dst, img.row_ptr(s0), taps.front().weight, row_len);
        for (std::size_t k = 1; k < taps.size(); ++k) {
            const int si = std::clamp(i0 + taps[k].offset, 0, rows_in - 1);
            ops.axpy(dst, img.row_ptr(si), taps[k].weight, row_len);
        }
    }
    return out;
}

} // namespace

Raster upsample(const Raster& img, int factor, const Kernel& kernel, BoundaryPolicy) {
    const WeightTable horizontal = build_weights(img.width(), factor, kernel);
    const Raster mid = pass_horizontal(img, horizontal);
    const WeightTable vertical = build_weights(img.height(), factor, kernel);
    return pass_vertical(mid, vertical);
}

Raster subsample(const Raster& img, int factor) {
    return detail::subsample_offset(img, factor, 0);
}

} // namespace ediz
