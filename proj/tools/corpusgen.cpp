// SPDX-License-Identifier: Apache-2.0

// Deterministic generator for the bundled natural-statistics test images.
// Three 512x512 color scenes with detail across scales: a fractal-noise
// terrain, a mortared brick wall, and an interference-wave pattern.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "ediz/image_io.hpp"
#include "ediz/raster.hpp"

namespace {

using std::uint64_t;

uint64_t splitmix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double lattice(uint64_t seed, std::int64_t ix, std::int64_t iy) {
    const uint64_t h =
        splitmix(seed ^ (uint64_t(ix) * 0x8da6b343ULL) ^ (uint64_t(iy) * 0xd8163841ULL));
    return double(h >> 11) * 0x1.0p-53;
}

double smoothstep(double t) { return t * t * (3.0 - 2.0 * t); }

double value_noise(uint64_t seed, double x, double y) {
    const double fx = std::floor(x);
    const double fy = std::floor(y);
    const auto ix = std::int64_t(fx);
    const auto iy = std::int64_t(fy);
    const double tx = smoothstep(x - fx);
    const double ty = smoothstep(y - fy);
    const double a = lattice(seed, ix, iy);
    const double b = lattice(seed, ix + 1, iy);
    const double c = lattice(seed, ix, iy + 1);
    const double d = lattice(seed, ix + 1, iy + 1);
    const double top = a + (b - a) * tx;
    const double bottom = c + (d - c) * tx;
    return top + (bottom - top) * ty;
}

double fbm(uint64_t seed, double x, double y, int octaves, double gain = 0.55) {
    double amp = 1.0;
    double freq = 1.0;
    double sum = 0.0;
    double norm = 0.0;
    for (int o = 0; o < octaves; ++o) {
        sum += amp * value_noise(seed + uint64_t(o) * 1013ULL, x * freq, y * freq);
        norm += amp;
        amp *= gain;
        freq *= 2.0;
    }
    return sum / norm;
}

void set_rgb(ediz::Raster& img, int x, int y, double r, double g, double b) {
    img.set(x, y, 0, r);
    img.set(x, y, 1, g);
    img.set(x, y, 2, b);
}

ediz::Raster make_terrain(int size) {
    ediz::Raster img(size, size, 3);
    const double inv = 1.0 / 96.0;
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            const double h = fbm(11, x * inv, y * inv, 7);
            const double speckle = fbm(23, x * 0.55, y * 0.55, 2) - 0.5;
            double r, g, b;
            if (h < 0.45) { // valley: dark green
                const double t = h / 0.45;
                r = 0.10 + 0.18 * t;
                g = 0.28 + 0.20 * t;
                b = 0.06 + 0.08 * t;
            } else if (h < 0.62) { // slopes: dry grass
                const double t = (h - 0.45) / 0.17;
                r = 0.28 + 0.22 * t;
                g = 0.48 - 0.10 * t;
                b = 0.14 + 0.08 * t;
            } else { // ridges: rock
                const double t = (h - 0.62) / 0.38;
                r = 0.50 + 0.25 * t;
                g = 0.38 + 0.32 * t;
                b = 0.22 + 0.45 * t;
            }
            set_rgb(img, x, y, r + 0.10 * speckle, g + 0.09 * speckle, b + 0.07 * speckle);
        }
    }
    return img;
}

ediz::Raster make_bricks(int size) {
    ediz::Raster img(size, size, 3);
    const int brick_w = 64;
    const int brick_h = 26;
    const int mortar = 3;
    for (int y = 0; y < size; ++y) {
        const int row = y / brick_h;
        const int shift = (row % 2) * (brick_w / 2);
        for (int x = 0; x < size; ++x) {
            const int xs = x + shift;
            const int col = xs / brick_w;
            const int lx = xs % brick_w;
            const int ly = y % brick_h;
            const double grain = fbm(37, x * 0.23, y * 0.23, 4) - 0.5;
            if (lx < mortar || ly < mortar) {
                const double m = 0.72 + 0.10 * grain;
                set_rgb(img, x, y, m, m, m * 0.97);
            } else {
                const double jr = lattice(41, col, row);
                const double jg = lattice(43, col, row);
                const double blotch = fbm(47, x / 14.0, y / 14.0, 3) - 0.5;
                const double r = 0.46 + 0.14 * jr + 0.10 * blotch + 0.12 * grain;
                const double g = 0.20 + 0.07 * jg + 0.06 * blotch + 0.09 * grain;
                const double b = 0.15 + 0.04 * jr + 0.04 * blotch + 0.07 * grain;
                set_rgb(img, x, y, r, g, b);
            }
        }
    }
    return img;
}

ediz::Raster make_waves(int size) {
    ediz::Raster img(size, size, 3);
    const double pi = std::numbers::pi;
    const double cx = size * 0.31;
    const double cy = size * 0.44;
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            const double dx = x - cx;
            const double dy = y - cy;
            const double r = std::sqrt(dx * dx + dy * dy);
            // rings whose frequency grows with radius, plus two swell
            // directions and chop noise
            const double rings = std::sin(pi * r * r / (9.0 * size));
            const double swell = std::sin(2.0 * pi * (0.013 * x + 0.027 * y) +
                                          3.1 * fbm(53, x / 80.0, y / 80.0, 3));
            const double cross = std::sin(2.0 * pi * (0.041 * x - 0.017 * y));
            const double chop = fbm(59, x * 0.38, y * 0.38, 3) - 0.5;
            const double v = 0.52 + 0.20 * rings + 0.14 * swell + 0.08 * cross + 0.16 * chop;
            set_rgb(img, x, y, 0.10 + 0.45 * v, 0.30 + 0.55 * v, 0.45 + 0.50 * v);
        }
    }
    return img;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ediz-corpusgen - write the deterministic test image set"};
    std::string outdir = "corpus";
    int size = 512;
    app.add_option("--outdir", outdir, "Output directory");
    app.add_option("--size", size, "Image side length")->check(CLI::Range(16, 4096));
    CLI11_PARSE(app, argc, argv);

    try {
        std::filesystem::create_directories(outdir);
        const auto write = [&](const char* name, const ediz::Raster& img) {
            const std::string path = (std::filesystem::path(outdir) / name).string();
            ediz::save_image(img, path, ediz::ImageFormat::PpmP6);
            std::printf("wrote %s (%dx%d)\n", path.c_str(), img.width(), img.height());
        };
        write("terrain.ppm", make_terrain(size));
        write("bricks.ppm", make_bricks(size));
        write("waves.ppm", make_waves(size));
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
