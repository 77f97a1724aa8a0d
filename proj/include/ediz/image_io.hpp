// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "ediz/raster.hpp"

namespace ediz {

/// Malformed or truncated image file. byte_offset() is the position in the
/// file at which decoding failed (0 when the backing codec does not report
/// one).
class CodecError : public std::runtime_error {
public:
    CodecError(const std::string& msg, std::size_t byte_offset)
        : std::runtime_error(msg + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const noexcept { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

enum class ImageFormat { PpmP6, PpmP5, Png8 };

/// Format inferred from the file extension: .ppm/.pnm -> P6, .pgm -> P5,
/// .png -> PNG8. Throws std::invalid_argument for anything else.
ImageFormat format_for_path(const std::string& path);

/// Loads an 8-bit PPM (P5/P6) or PNG (gray/RGB) file, sniffing the format
/// from the magic bytes. Samples are byte / 255.0; the result is unsigned.
Raster load_image(const std::string& path);

/// Saves an unsigned raster, quantizing with round(clamp(s, 0, 1) * 255).
/// Signed rasters are rejected; use save_signed_visualized for those.
void save_image(const Raster& img, const std::string& path, ImageFormat format);
void save_image(const Raster& img, const std::string& path);

/// Saves a signed raster mapped through [-m, m] -> [0, 1] with 0 at
/// mid-gray 0.5, where m = max |sample| (m = 1 is used when the raster is
/// all zero). Returns m so the map stays interpretable.
double save_signed_visualized(const Raster& img, const std::string& path, ImageFormat format);
double save_signed_visualized(const Raster& img, const std::string& path);

/// The save-path quantization as an in-memory op: clamp to [0,1], round to
/// 8 bits, return byte / 255.0. Measuring this raster is the same as
/// measuring the saved file.
Raster quantized8(const Raster& img);

} // namespace ediz
