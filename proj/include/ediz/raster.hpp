// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ediz {

/// Shape mismatch between rasters (or a dimension that does not divide
/// evenly). The message names the offending axis.
class ShapeError : public std::runtime_error {
public:
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct PixelSite {
    int x = 0;
    int y = 0;
    int c = 0;
};

/// Planar image buffer: row-major, channel-interleaved doubles.
///
/// Image-valued rasters hold samples nominally in [0,1]; nothing in the
/// library clamps them until file save. Error-valued rasters carry
/// is_signed() == true and hold arbitrary signed values.
///
/// Dimensions and channel count are fixed at construction. All library
/// operations treat rasters as read-only inputs and return new buffers,
/// so concurrent reads from multiple threads are safe.
class Raster {
public:
    Raster(int width, int height, int channels, bool signed_values = false);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    int channels() const noexcept { return channels_; }
    bool is_signed() const noexcept { return signed_; }

    std::size_t sample_count() const noexcept { return samples_.size(); }

    /// Bounds-checked sample access; throws std::out_of_range.
    double at(const PixelSite& site) const;
    double at(int x, int y, int c = 0) const { return at(PixelSite{x, y, c}); }
    void set(const PixelSite& site, double value);
    void set(int x, int y, int c, double value) { set(PixelSite{x, y, c}, value); }

    // Unchecked access for inner loops.
    double* data() noexcept { return samples_.data(); }
    const double* data() const noexcept { return samples_.data(); }
    double* row_ptr(int y) noexcept { return samples_.data() + std::size_t(y) * row_stride(); }
    const double* row_ptr(int y) const noexcept {
        return samples_.data() + std::size_t(y) * row_stride();
    }
    std::size_t row_stride() const noexcept { return std::size_t(width_) * channels_; }
    std::size_t index(int x, int y, int c) const noexcept {
        return (std::size_t(y) * width_ + x) * channels_ + c;
    }

    std::span<double> samples() noexcept { return samples_; }
    std::span<const double> samples() const noexcept { return samples_; }

private:
    int width_;
    int height_;
    int channels_;
    bool signed_;
    std::vector<double> samples_;
};

/// Elementwise sum. Result is signed if either operand is.
Raster add(const Raster& a, const Raster& b);

/// Elementwise difference; the result is always signed.
Raster subtract(const Raster& a, const Raster& b);

/// base + gain * correction. Keeps the signedness of `base`, so adding a
/// signed correction to an image yields an image.
Raster add_scaled(const Raster& base, const Raster& correction, double gain);

/// Elementwise scaling; keeps the operand's signedness.
Raster multiply(const Raster& r, double factor);

/// Rec.601 luma (0.299 R + 0.587 G + 0.114 B). Grayscale input is copied.
Raster to_luma(const Raster& r);

/// Single-channel plane extracted from an interleaved raster.
Raster channel_plane(const Raster& r, int c);

/// Samples clamped to [0,1]; the result is unsigned.
Raster clamp01(const Raster& r);

/// Top-left region of the given size.
Raster crop_top_left(const Raster& r, int new_width, int new_height);

/// Edge-replicate padding on the right/bottom sides.
Raster pad_replicate(const Raster& r, int add_right, int add_bottom);

} // namespace ediz
