// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <fstream>
#include <vector>

#include <doctest.h>

#include "ediz/image_io.hpp"
#include "oracles.hpp"

using ediz::ImageFormat;
using ediz::Raster;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "ediz_io_test") { fs::create_directories(path); }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::vector<unsigned char> slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const std::string& p, const std::string& bytes) {
    std::ofstream out(p, std::ios::binary);
    out.write(bytes.data(), std::streamsize(bytes.size()));
}

// 8-bit aligned raster so quantization is the identity
Raster quantized_random(oracle::Rng& rng, int w, int h, int c) {
    Raster r(w, h, c);
    for (double& s : r.samples())
        s = double(rng.next_u64() % 256) / 255.0;
    return r;
}

} // namespace

TEST_CASE("ppm p6 write grammar") {
    TempDir tmp;
    Raster img(2, 2, 3);
    img.set(0, 0, 0, 1.0);
    const std::string p = tmp.file("g.ppm");
    ediz::save_image(img, p, ImageFormat::PpmP6);
    const auto bytes = slurp(p);
    const std::string header = "P6\n2 2\n255\n";
    REQUIRE(bytes.size() == header.size() + 12);
    CHECK(std::string(bytes.begin(), bytes.begin() + std::ptrdiff_t(header.size())) == header);
    CHECK(bytes[header.size()] == 255);
    CHECK(bytes[header.size() + 1] == 0);
}

TEST_CASE("quantization clamps and rounds") {
    TempDir tmp;
    Raster img(3, 1, 1);
    img.set(0, 0, 0, 1.5);   // clamps to 255
    img.set(1, 0, 0, -0.2);  // clamps to 0
    img.set(2, 0, 0, 0.5);   // 127.5 rounds to 128
    const std::string p = tmp.file("q.pgm");
    ediz::save_image(img, p, ImageFormat::PpmP5);
    const auto bytes = slurp(p);
    const std::size_t off = std::string("P5\n3 1\n255\n").size();
    CHECK(bytes[off] == 255);
    CHECK(bytes[off + 1] == 0);
    CHECK(bytes[off + 2] == 128);
}

TEST_CASE("save then load recovers quantized samples exactly") {
    TempDir tmp;
    oracle::Rng rng(701);
    for (int channels : {1, 3}) {
        const Raster img = quantized_random(rng, 9, 7, channels);
        const std::string p = tmp.file(channels == 3 ? "rt.ppm" : "rt.pgm");
        ediz::save_image(img, p);
        const Raster back = ediz::load_image(p);
        CHECK(back.channels() == channels);
        CHECK(oracle::bitwise_equal(back, img));
    }
}

TEST_CASE("save-load-save is byte stable") {
    TempDir tmp;
    oracle::Rng rng(709);
    Raster img(16, 16, 3);
    for (double& s : img.samples())
        s = rng.next01() * 1.2 - 0.1; // out-of-range values quantize once
    const std::string p1 = tmp.file("s1.ppm");
    const std::string p2 = tmp.file("s2.ppm");
    ediz::save_image(ediz::clamp01(img), p1);
    ediz::save_image(ediz::load_image(p1), p2);
    CHECK(slurp(p1) == slurp(p2));
}

TEST_CASE("ppm reader accepts comments and whitespace") {
    TempDir tmp;
    const std::string p = tmp.file("c.ppm");
    spit(p, "P6 # comment\n# another\n 2\t1 #w\n255\nabcabc");
    const Raster img = ediz::load_image(p);
    CHECK(img.width() == 2);
    CHECK(img.height() == 1);
    CHECK(img.channels() == 3);
    CHECK(img.at(0, 0, 0) == doctest::Approx('a' / 255.0));
}

TEST_CASE("ppm reader rejects malformed files with byte offsets") {
    TempDir tmp;

    SUBCASE("truncated payload") {
        const std::string p = tmp.file("t.ppm");
        spit(p, "P6\n2 2\n255\nabc");
        try {
            ediz::load_image(p);
            FAIL("expected CodecError");
        } catch (const ediz::CodecError& e) {
            CHECK(e.byte_offset() == 14); // file size
            CHECK(std::string(e.what()).find("truncated") != std::string::npos);
        }
    }

    SUBCASE("unsupported maxval") {
        const std::string p = tmp.file("m.ppm");
        spit(p, "P6\n2 2\n65535\n");
        try {
            ediz::load_image(p);
            FAIL("expected CodecError");
        } catch (const ediz::CodecError& e) {
            CHECK(std::string(e.what()).find("bit depth") != std::string::npos);
            CHECK(e.byte_offset() == 12);
        }
    }

    SUBCASE("garbage header") {
        const std::string p = tmp.file("g.ppm");
        spit(p, "P6\nxx yy\n255\n");
        CHECK_THROWS_AS(ediz::load_image(p), ediz::CodecError);
    }

    SUBCASE("unknown magic") {
        const std::string p = tmp.file("u.ppm");
        spit(p, "BM000000");
        CHECK_THROWS_AS(ediz::load_image(p), ediz::CodecError);
    }

    SUBCASE("missing file") {
        CHECK_THROWS_AS(ediz::load_image(tmp.file("nope.ppm")), ediz::CodecError);
    }
}

TEST_CASE("png round-trip") {
    TempDir tmp;
    oracle::Rng rng(719);
    for (int channels : {1, 3}) {
        const Raster img = quantized_random(rng, 12, 9, channels);
        const std::string p = tmp.file("rt.png");
        ediz::save_image(img, p, ImageFormat::Png8);
        const Raster back = ediz::load_image(p);
        CHECK(back.channels() == channels);
        CHECK(oracle::bitwise_equal(back, img));
    }
}

TEST_CASE("png rejects malformed streams") {
    TempDir tmp;
    const std::string p = tmp.file("bad.png");
    spit(p, std::string("\x89PNG\r\n\x1a\n", 8) + "garbagegarbage");
    CHECK_THROWS_AS(ediz::load_image(p), ediz::CodecError);
}

TEST_CASE("signed rasters need the visualize path") {
    TempDir tmp;
    Raster err(2, 2, 1, true);
    err.set(0, 0, 0, -0.2);
    err.set(1, 1, 0, 0.1);
    CHECK_THROWS_AS(ediz::save_image(err, tmp.file("e.pgm"), ImageFormat::PpmP5),
                    std::invalid_argument);

    const std::string p = tmp.file("v.pgm");
    const double scale = ediz::save_signed_visualized(err, p, ImageFormat::PpmP5);
    CHECK(scale == 0.2);
    const Raster vis = ediz::load_image(p);
    CHECK(vis.at(0, 0) == doctest::Approx(0.0));   // -max maps to black
    CHECK(vis.at(1, 0) == doctest::Approx(0.5).epsilon(0.01)); // zero maps to mid-gray
    CHECK(vis.at(1, 1) == doctest::Approx(0.75).epsilon(0.01));

    // all-zero error field: scale falls back to 1, all mid-gray
    Raster zero(2, 2, 1, true);
    const double zscale = ediz::save_signed_visualized(zero, tmp.file("z.pgm"));
    CHECK(zscale == 1.0);
    const Raster zvis = ediz::load_image(tmp.file("z.pgm"));
    for (double s : zvis.samples())
        CHECK(s == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("quantized8 matches the file round-trip") {
    TempDir tmp;
    oracle::Rng rng(727);
    ediz::Raster img(8, 8, 3);
    for (double& s : img.samples())
        s = rng.next01() * 1.4 - 0.2;
    const std::string p = tmp.file("q8.ppm");
    ediz::save_image(ediz::clamp01(img), p);
    CHECK(oracle::bitwise_equal(ediz::quantized8(img), ediz::load_image(p)));
    // idempotent
    CHECK(oracle::bitwise_equal(ediz::quantized8(ediz::quantized8(img)), ediz::quantized8(img)));
}

TEST_CASE("format_for_path") {
    CHECK(ediz::format_for_path("x.ppm") == ImageFormat::PpmP6);
    CHECK(ediz::format_for_path("x.PNM") == ImageFormat::PpmP6);
    CHECK(ediz::format_for_path("x.pgm") == ImageFormat::PpmP5);
    CHECK(ediz::format_for_path("dir/y.png") == ImageFormat::Png8);
    CHECK_THROWS_AS(ediz::format_for_path("x.jpg"), std::invalid_argument);
    CHECK_THROWS_AS(ediz::format_for_path("noext"), std::invalid_argument);
}

TEST_CASE("format constraints") {
    TempDir tmp;
    const Raster gray = oracle::constant_raster(4, 4, 1, 0.5);
    const Raster rgb = oracle::constant_raster(4, 4, 3, 0.5);
    CHECK_THROWS_AS(ediz::save_image(gray, tmp.file("g.ppm"), ImageFormat::PpmP6),
                    std::invalid_argument);
    CHECK_THROWS_AS(ediz::save_image(rgb, tmp.file("c.pgm"), ImageFormat::PpmP5),
                    std::invalid_argument);
    // extension-driven save degrades .ppm to P5 for grayscale
    ediz::save_image(gray, tmp.file("g2.ppm"));
    CHECK(slurp(tmp.file("g2.ppm"))[1] == '5');
}
