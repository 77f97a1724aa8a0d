// SPDX-License-Identifier: Apache-2.0

#include "ediz/raster.hpp"

#include <algorithm>
#include <cstring>

#include "ediz/simd.hpp"

namespace ediz {

namespace {

void require_same_shape(const Raster& a, const Raster& b, const char* op) {
    if (a.width() != b.width())
        throw ShapeError(std::string(op) + ": width mismatch (" + std::to_string(a.width()) +
                         " vs " + std::to_string(b.width()) + ")");
    if (a.height() != b.height())
        throw ShapeError(std::string(op) + ": height mismatch (" + std::to_string(a.height()) +
                         " vs " + std::to_string(b.height()) + ")");
    if (a.channels() != b.channels())
        throw ShapeError(std::string(op) + ": channel mismatch (" + std::to_string(a.channels()) +
                         " vs " + std::to_string(b.channels()) + ")");
}

} // namespace

Raster::Raster(int width, int height, int channels, bool signed_values)
    : width_(width), height_(height), channels_(channels), signed_(signed_values) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("raster dimensions must be >= 1, got " +
                                    std::to_string(width) + "x" + std::to_string(height));
    if (channels != 1 && channels != 3)
        throw std::invalid_argument("raster channel count must be 1 or 3, got " +
                                    std::to_string(channels));
    samples_.assign(std::size_t(width) * height * channels, 0.0);
}

double Raster::at(const PixelSite& site) const {
    if (site.x < 0 || site.x >= width_ || site.y < 0 || site.y >= height_ || site.c < 0 ||
        site.c >= channels_)
        throw std::out_of_range("sample site (" + std::to_string(site.x) + "," +
                                std::to_string(site.y) + "," + std::to_string(site.c) +
                                ") outside " + std::to_string(width_) + "x" +
                                std::to_string(height_) + "x" + std::to_string(channels_));
    return samples_[index(site.x, site.y, site.c)];
}

void Raster::set(const PixelSite& site, double value) {
    if (site.x < 0 || site.x >= width_ || site.y < 0 || site.y >= height_ || site.c < 0 ||
        site.c >= channels_)
        throw std::out_of_range("sample site (" + std::to_string(site.x) + "," +
                                std::to_string(site.y) + "," + std::to_string(site.c) +
                                ") outside " + std::to_string(width_) + "x" +
                                std::to_string(height_) + "x" + std::to_string(channels_));
    samples_[index(site.x, site.y, site.c)] = value;
}

Raster add(const Raster& a, const Raster& b) {
    require_same_shape(a, b, "add");
    Raster out(a.width(), a.height(), a.channels(), a.is_signed() || b.is_signed());
    simd::active_ops().add(out.data(), a.data(), b.data(), out.sample_count());
    return out;
}

Raster subtract(const Raster& a, const Raster& b) {
    require_same_shape(a, b, "subtract");
    Raster out(a.width(), a.height(), a.channels(), true);
    simd::active_ops().sub(out.data(), a.data(), b.data(), out.sample_count());
    return out;
}

Raster add_scaled(const Raster& base, const Raster& correction, double gain) {
    require_same_shape(base, correction, "add_scaled");
    Raster out(base.width(), base.height(), base.channels(), base.is_signed());
    simd::active_ops().add_scaled(out.data(), base.data(), correction.data(), gain,
                                  out.sample_count());
    return out;
}

Raster multiply(const Raster& r, double factor) {
    Raster out(r.width(), r.height(), r.channels(), r.is_signed());
    simd::active_ops().scale(out.data(), r.data(), factor, out.sample_count());
    return out;
}

Raster to_luma(const Raster& r) {
    if (r.channels() == 1)
        return r;
    Raster out(r.width(), r.height(), 1, r.is_signed());
    const double* src = r.data();
    double* dst = out.data();
    const std::size_t pixels = std::size_t(r.width()) * r.height();
    for (std::size_t i = 0; i < pixels; ++i) {
        const double* p = src + i * 3;
        dst[i] = 0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2];
    }
    return out;
}

Raster channel_plane(const Raster& r, int c) {
    if (c < 0 || c >= r.channels())
        throw std::out_of_range("channel " + std::to_string(c) + " outside " +
                                std::to_string(r.channels()) + "-channel raster");
    if (r.channels() == 1)
        return r;
    Raster out(r.width(), r.height(), 1, r.is_signed());
    const double* src = r.data();
    double* dst = out.data();
    const std::size_t pixels = std::size_t(r.width()) * r.height();
    for (std::size_t i = 0; i < pixels; ++i)
        dst[i] = src[i * 3 + c];
    return out;
}

Raster clamp01(const Raster& r) {
    Raster out(r.width(), r.height(), r.channels(), false);
    const double* src = r.data();
    double* dst = out.data();
    for (std::size_t i = 0, n = r.sample_count(); i < n; ++i)
        dst[i] = std::clamp(src[i], 0.0, 1.0);
    return out;
}

Raster crop_top_left(const Raster& r, int new_width, int new_height) {
    if (new_width < 1 || new_width > r.width() || new_height < 1 || new_height > r.height())
        throw std::invalid_argument("crop " + std::to_string(new_width) + "x" +
                                    std::to_string(new_height) + " outside " +
                                    std::to_string(r.width()) + "x" + std::to_string(r.height()));
    if (new_width == r.width() && new_height == r.height())
        return r;
    Raster out(new_width, new_height, r.channels(), r.is_signed());
    const std::size_t row_bytes = out.row_stride() * sizeof(double);
    for (int y = 0; y < new_height; ++y)
        std::memcpy(out.row_ptr(y), r.row_ptr(y), row_bytes);
    return out;
}

Raster pad_replicate(const Raster& r, int add_right, int add_bottom) {
    if (add_right < 0 || add_bottom < 0)
        throw std::invalid_argument("padding must be non-negative");
    if (add_right == 0 && add_bottom == 0)
        return r;
    const int w = r.width() + add_right;
    const int h = r.height() + add_bottom;
    const int c = r.channels();
    Raster out(w, h, c, r.is_signed());
    for (int y = 0; y < h; ++y) {
        const int sy = std::min(y, r.height() - 1);
        const double* src = r.row_ptr(sy);
        double* dst = out.row_ptr(y);
        std::memcpy(dst, src, r.row_stride() * sizeof(double));
        const double* edge = src + std::size_t(r.width() - 1) * c;
        for (int x = r.width(); x < w; ++x)
            for (int ch = 0; ch < c; ++ch)
                dst[std::size_t(x) * c + ch] = edge[ch];
    }
    return out;
}

} // namespace ediz
