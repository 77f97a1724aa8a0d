// SPDX-License-Identifier: Apache-2.0

#include "ediz/image_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <vector>

#include <png.h>

namespace ediz {

namespace {

std::vector<unsigned char> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CodecError("cannot open '" + path + "'", 0);
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
    return bytes;
}

void write_file(const std::string& path, const void* data, std::size_t size) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw CodecError("cannot open '" + path + "' for writing", 0);
    out.write(static_cast<const char*>(data), std::streamsize(size));
    if (!out)
        throw CodecError("write to '" + path + "' failed", 0);
}

unsigned char quantize(double s) {
    return static_cast<unsigned char>(std::lround(std::clamp(s, 0.0, 1.0) * 255.0));
}

// ---------------------------------------------------------------- PPM ---

bool is_pnm_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

struct PnmCursor {
    const std::vector<unsigned char>& bytes;
    std::size_t pos = 0;

    void skip_space_and_comments() {
        while (pos < bytes.size()) {
            if (is_pnm_space(bytes[pos])) {
                ++pos;
            } else if (bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n')
                    ++pos;
            } else {
                break;
            }
        }
    }

    int read_int(const char* what) {
        skip_space_and_comments();
        if (pos >= bytes.size())
            throw CodecError(std::string("PNM header truncated reading ") + what, pos);
        if (bytes[pos] < '0' || bytes[pos] > '9')
            throw CodecError(std::string("PNM header: expected digit for ") + what, pos);
        long value = 0;
        while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') {
            value = value * 10 + (bytes[pos] - '0');
            if (value > 1 << 30)
                throw CodecError(std::string("PNM header: ") + what + " out of range", pos);
            ++pos;
        }
        return int(value);
    }
};

Raster load_pnm(const std::vector<unsigned char>& bytes) {
    const int channels = bytes[1] == '6' ? 3 : 1;
    PnmCursor cur{bytes, 2};
    const int width = cur.read_int("width");
    const int height = cur.read_int("height");
    const int maxval = cur.read_int("maxval");
    if (width < 1 || height < 1)
        throw CodecError("PNM header: bad dimensions " + std::to_string(width) + "x" +
                             std::to_string(height),
                         cur.pos);
    if (maxval != 255)
        throw CodecError("PNM: unsupported bit depth (maxval " + std::to_string(maxval) +
                             ", only 255 supported)",
                         cur.pos);
    // Exactly one whitespace byte separates the header from the payload.
    if (cur.pos >= bytes.size() || !is_pnm_space(bytes[cur.pos]))
        throw CodecError("PNM header: missing whitespace before payload", cur.pos);
    ++cur.pos;

    const std::size_t expected = std::size_t(width) * height * channels;
    if (bytes.size() - cur.pos < expected)
        throw CodecError("PNM payload truncated: expected " + std::to_string(expected) +
                             " bytes, got " + std::to_string(bytes.size() - cur.pos),
                         bytes.size());

    Raster img(width, height, channels, false);
    double* dst = img.data();
    const unsigned char* src = bytes.data() + cur.pos;
    for (std::size_t i = 0; i < expected; ++i)
        dst[i] = src[i] / 255.0;
    return img;
}

void save_pnm(const Raster& img, const std::string& path, bool p6) {
    if (p6 && img.channels() != 3)
        throw std::invalid_argument("P6 requires a 3-channel raster");
    if (!p6 && img.channels() != 1)
        throw std::invalid_argument("P5 requires a 1-channel raster");

    char header[64];
    const int header_len = std::snprintf(header, sizeof header, "%s\n%d %d\n255\n",
                                         p6 ? "P6" : "P5", img.width(), img.height());
    std::vector<unsigned char> out(std::size_t(header_len) + img.sample_count());
    std::memcpy(out.data(), header, std::size_t(header_len));
    unsigned char* payload = out.data() + header_len;
    const double* src = img.data();
    for (std::size_t i = 0; i < img.sample_count(); ++i)
        payload[i] = quantize(src[i]);
    write_file(path, out.data(), out.size());
}

// ---------------------------------------------------------------- PNG ---

struct PngMemoryReader {
    const unsigned char* data;
    std::size_t size;
    std::size_t pos;
};

void png_mem_read(png_structp png, png_bytep out, png_size_t count) {
    auto* r = static_cast<PngMemoryReader*>(png_get_io_ptr(png));
    if (r->pos + count > r->size)
        png_error(png, "unexpected end of PNG stream");
    std::memcpy(out, r->data + r->pos, count);
    r->pos += count;
}

Raster load_png(const std::vector<unsigned char>& bytes) {
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png)
        throw CodecError("PNG: cannot initialize decoder", 0);
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw CodecError("PNG: cannot initialize decoder", 0);
    }

    PngMemoryReader reader{bytes.data(), bytes.size(), 0};
    std::vector<png_byte> pixels;
    std::vector<png_bytep> rows;

    if (setjmp(png_jmpbuf(png))) {
        const std::size_t at = reader.pos;
        png_destroy_read_struct(&png, &info, nullptr);
        throw CodecError("PNG: malformed stream", at);
    }

    png_set_read_fn(png, &reader, png_mem_read);
    png_read_info(png, info);

    const png_byte depth = png_get_bit_depth(png, info);
    const png_byte color = png_get_color_type(png, info);
    const png_byte interlace = png_get_interlace_type(png, info);
    if (depth != 8)
        png_error(png, "only 8-bit PNG is supported");
    if (color != PNG_COLOR_TYPE_GRAY && color != PNG_COLOR_TYPE_RGB)
        png_error(png, "only gray and RGB PNG are supported");
    if (interlace != PNG_INTERLACE_NONE)
        png_error(png, "interlaced PNG is not supported");

    const int width = int(png_get_image_width(png, info));
    const int height = int(png_get_image_height(png, info));
    const int channels = color == PNG_COLOR_TYPE_RGB ? 3 : 1;

    const std::size_t stride = std::size_t(width) * channels;
    pixels.resize(stride * height);
    rows.resize(std::size_t(height));
    for (int y = 0; y < height; ++y)
        rows[std::size_t(y)] = pixels.data() + std::size_t(y) * stride;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    Raster img(width, height, channels, false);
    double* dst = img.data();
    for (std::size_t i = 0; i < pixels.size(); ++i)
        dst[i] = pixels[i] / 255.0;
    return img;
}

void png_vec_write(png_structp png, png_bytep data, png_size_t count) {
    auto* out = static_cast<std::vector<unsigned char>*>(png_get_io_ptr(png));
    out->insert(out->end(), data, data + count);
}

void png_vec_flush(png_structp) {}

void save_png(const Raster& img, const std::string& path) {
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png)
        throw CodecError("PNG: cannot initialize encoder", 0);
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw CodecError("PNG: cannot initialize encoder", 0);
    }

    std::vector<unsigned char> out;
    std::vector<png_byte> pixels(img.sample_count());
    std::vector<png_bytep> rows(std::size_t(img.height()));

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw CodecError("PNG: encoding failed", 0);
    }

    png_set_write_fn(png, &out, png_vec_write, png_vec_flush);
    png_set_IHDR(png, info, png_uint_32(img.width()), png_uint_32(img.height()), 8,
                 img.channels() == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);

    const double* src = img.data();
    for (std::size_t i = 0; i < img.sample_count(); ++i)
        pixels[i] = quantize(src[i]);
    const std::size_t stride = img.row_stride();
    for (int y = 0; y < img.height(); ++y)
        rows[std::size_t(y)] = pixels.data() + std::size_t(y) * stride;

    png_write_info(png, info);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);

    write_file(path, out.data(), out.size());
}

} // namespace

ImageFormat format_for_path(const std::string& path) {
    const auto dot = path.find_last_of('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });
    if (ext == "ppm" || ext == "pnm")
        return ImageFormat::PpmP6;
    if (ext == "pgm")
        return ImageFormat::PpmP5;
    if (ext == "png")
        return ImageFormat::Png8;
    throw std::invalid_argument("cannot infer image format from '" + path +
                                "' (use .ppm, .pgm or .png)");
}

Raster load_image(const std::string& path) {
    const auto bytes = read_file(path);
    if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '5' || bytes[1] == '6'))
        return load_pnm(bytes);
    static const unsigned char png_sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    if (bytes.size() >= 8 && std::memcmp(bytes.data(), png_sig, 8) == 0)
        return load_png(bytes);
    throw CodecError("unrecognized image format in '" + path + "'", 0);
}

void save_image(const Raster& img, const std::string& path, ImageFormat format) {
    if (img.is_signed())
        throw std::invalid_argument(
            "cannot save a signed raster directly; use save_signed_visualized");
    switch (format) {
    case ImageFormat::PpmP6:
        save_pnm(img, path, true);
        return;
    case ImageFormat::PpmP5:
        save_pnm(img, path, false);
        return;
    case ImageFormat::Png8:
        save_png(img, path);
        return;
    }
}

void save_image(const Raster& img, const std::string& path) {
    ImageFormat format = format_for_path(path);
    // .ppm with a grayscale raster degrades gracefully to P5.
    if (format == ImageFormat::PpmP6 && img.channels() == 1)
        format = ImageFormat::PpmP5;
    save_image(img, path, format);
}

double save_signed_visualized(const Raster& img, const std::string& path, ImageFormat format) {
    double peak = 0.0;
    for (double s : img.samples())
        peak = std::max(peak, std::abs(s));
    if (peak == 0.0)
        peak = 1.0;
    Raster vis(img.width(), img.height(), img.channels(), false);
    const double* src = img.data();
    double* dst = vis.data();
    for (std::size_t i = 0; i < img.sample_count(); ++i)
        dst[i] = 0.5 + src[i] / (2.0 * peak);
    save_image(vis, path, format);
    return peak;
}

double save_signed_visualized(const Raster& img, const std::string& path) {
    ImageFormat format = format_for_path(path);
    if (format == ImageFormat::PpmP6 && img.channels() == 1)
        format = ImageFormat::PpmP5;
    return save_signed_visualized(img, path, format);
}

Raster quantized8(const Raster& img) {
    Raster out(img.width(), img.height(), img.channels(), false);
    const double* src = img.data();
    double* dst = out.data();
    for (std::size_t i = 0; i < img.sample_count(); ++i)
        dst[i] = quantize(src[i]) / 255.0;
    return out;
}

} // namespace ediz
