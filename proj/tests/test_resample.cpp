// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <doctest.h>

#include "ediz/resample.hpp"
#include "oracles.hpp"

using ediz::Kernel;
using ediz::Raster;
using ediz::WeightTable;

TEST_CASE("build_weights rejects bad parameters") {
    CHECK_THROWS_AS(ediz::build_weights(8, 1, Kernel::cubic()), std::invalid_argument);
    CHECK_THROWS_AS(ediz::build_weights(8, 0, Kernel::cubic()), std::invalid_argument);
    CHECK_THROWS_AS(ediz::build_weights(0, 2, Kernel::cubic()), std::invalid_argument);
}

TEST_CASE("phase 0 is the single unit tap") {
    for (const Kernel& k : {Kernel::cubic(-0.5), Kernel::lanczos(2), Kernel::lanczos(3)}) {
        for (int n : {2, 3, 4, 5}) {
            const WeightTable t = ediz::build_weights(64, n, k);
            const auto taps = t.phase(0);
            REQUIRE(taps.size() == 1);
            CHECK(taps[0].offset == 0);
            CHECK(taps[0].weight == 1.0);
        }
    }
}

TEST_CASE("cubic half-phase weights") {
    const WeightTable t = ediz::build_weights(64, 2, Kernel::cubic(-0.5));
    const auto taps = t.phase(1);
    REQUIRE(taps.size() == 4);
    CHECK(taps[0].offset == -1);
    CHECK(taps[1].offset == 0);
    CHECK(taps[2].offset == 1);
    CHECK(taps[3].offset == 2);
    CHECK(taps[0].weight == -0.0625);
    CHECK(taps[1].weight == 0.5625);
    CHECK(taps[2].weight == 0.5625);
    CHECK(taps[3].weight == -0.0625);
}

TEST_CASE("every phase sums to one") {
    for (const Kernel& k : {Kernel::cubic(-0.5), Kernel::lanczos(3)}) {
        for (int n : {2, 3, 4, 6}) {
            const WeightTable t = ediz::build_weights(64, n, k);
            for (int p = 0; p < n; ++p) {
                double sum = 0.0;
                for (const auto& tap : t.phase(p))
                    sum += tap.weight;
                CHECK(std::abs(sum - 1.0) <= 1e-12);
            }
        }
    }
}

TEST_CASE("unnormalized lanczos phases drift") {
    const WeightTable t = ediz::detail::build_weights_impl(64, 4, Kernel::lanczos(3), false);
    double worst = 0.0;
    for (int p = 0; p < 4; ++p) {
        double sum = 0.0;
        for (const auto& tap : t.phase(p))
            sum += tap.weight;
        worst = std::max(worst, std::abs(sum - 1.0));
    }
    CHECK(worst > 1e-4);
}

TEST_CASE("upsample preserves constants") {
    for (const Kernel& k : {Kernel::cubic(-0.5), Kernel::lanczos(3)}) {
        for (int n : {2, 4}) {
            const Raster in = oracle::constant_raster(7, 5, 3, 0.42);
            const Raster out = ediz::upsample(in, n, k);
            CHECK(out.width() == 7 * n);
            CHECK(out.height() == 5 * n);
            for (double s : out.samples())
                CHECK(std::abs(s - 0.42) <= 1e-9);
        }
    }
}

TEST_CASE("1x1 upsample replicates the sample") {
    Raster in(1, 1, 1);
    in.set(0, 0, 0, 0.6371);
    const Raster out = ediz::upsample(in, 2, Kernel::cubic(-0.5));
    REQUIRE(out.width() == 2);
    REQUIRE(out.height() == 2);
    for (double s : out.samples())
        CHECK(s == doctest::Approx(0.6371).epsilon(1e-12));
}

TEST_CASE("separable passes match the direct 2-D oracle") {
    oracle::Rng rng(401);
    for (const Kernel& k : {Kernel::cubic(-0.5), Kernel::lanczos(3)}) {
        for (int n : {2, 4}) {
            for (int rep = 0; rep < 3; ++rep) {
                const Raster in = oracle::random_raster(rng, 8, 8);
                const Raster fast = ediz::upsample(in, n, k);
                const Raster direct = oracle::upsample_2d(in, n, k);
                CHECK(oracle::max_abs_diff(fast, direct) <= 1e-6);
            }
        }
    }
}

TEST_CASE("retained sites reproduce the input exactly") {
    oracle::Rng rng(419);
    for (const Kernel& k : {Kernel::cubic(-0.5), Kernel::lanczos(3)}) {
        for (int n : {2, 3, 4}) {
            const Raster in = oracle::random_raster(rng, 9, 6, 3);
            const Raster out = ediz::upsample(in, n, k);
            for (int y = 0; y < in.height(); ++y)
                for (int x = 0; x < in.width(); ++x)
                    for (int c = 0; c < 3; ++c)
                        CHECK(out.at(x * n, y * n, c) == in.at(x, y, c));
        }
    }
}

TEST_CASE("subsample decimates at offset zero") {
    Raster in(4, 4, 1);
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 4; ++x)
            in.set(x, y, 0, y * 4 + x);
    const Raster out = ediz::subsample(in, 2);
    REQUIRE(out.width() == 2);
    REQUIRE(out.height() == 2);
    CHECK(out.at(0, 0) == 0.0);
    CHECK(out.at(1, 0) == 2.0);
    CHECK(out.at(0, 1) == 8.0);
    CHECK(out.at(1, 1) == 10.0);

    const Raster c = oracle::constant_raster(6, 6, 1, 0.3);
    const Raster cs = ediz::subsample(c, 3);
    for (double s : cs.samples())
        CHECK(s == 0.3);
}

TEST_CASE("subsample rejects non-divisible dimensions naming the axis") {
    CHECK_THROWS_WITH_AS(ediz::subsample(Raster(5, 4, 1), 2),
                         doctest::Contains("width"), ediz::ShapeError);
    CHECK_THROWS_WITH_AS(ediz::subsample(Raster(4, 5, 1), 2),
                         doctest::Contains("height"), ediz::ShapeError);
}

TEST_CASE("subsample inverts upsample") {
    oracle::Rng rng(433);
    for (const Kernel& k : {Kernel::cubic(-0.5), Kernel::lanczos(3)}) {
        for (int n : {2, 4}) {
            const Raster in = oracle::random_raster(rng, 16, 16);
            const Raster back = ediz::subsample(ediz::upsample(in, n, k), n);
            CHECK(oracle::max_abs_diff(back, in) <= 1e-6);
        }
    }
}

TEST_CASE("decimation offset hook shifts the grid") {
    Raster in(4, 2, 1);
    for (int y = 0; y < 2; ++y)
        for (int x = 0; x < 4; ++x)
            in.set(x, y, 0, y * 4 + x);
    const Raster shifted = ediz::detail::subsample_offset(in, 2, 1);
    CHECK(shifted.at(0, 0) == 5.0);
    CHECK(shifted.at(1, 0) == 7.0);
}

TEST_CASE("upsample is linear") {
    oracle::Rng rng(443);
    const Raster a = oracle::random_raster(rng, 10, 8);
    const Raster b = oracle::random_raster(rng, 10, 8);
    const double alpha = 0.7;
    const double beta = -0.2;
    for (const Kernel& k : {Kernel::cubic(-0.5), Kernel::lanczos(3)}) {
        Raster mix(10, 8, 1, true);
        for (std::size_t i = 0; i < mix.sample_count(); ++i)
            mix.data()[i] = alpha * a.data()[i] + beta * b.data()[i];
        const Raster left = ediz::upsample(mix, 2, k);
        const Raster ua = ediz::upsample(a, 2, k);
        const Raster ub = ediz::upsample(b, 2, k);
        for (std::size_t i = 0; i < left.sample_count(); ++i)
            CHECK(std::abs(left.data()[i] - (alpha * ua.data()[i] + beta * ub.data()[i])) <=
                  1e-9);
    }
}

TEST_CASE("signed flag propagates through resampling") {
    oracle::Rng rng(449);
    const Raster err = oracle::random_raster(rng, 8, 8, 1, true);
    CHECK(ediz::upsample(err, 2, Kernel::cubic()).is_signed());
    CHECK(ediz::subsample(err, 2).is_signed());
    CHECK_FALSE(ediz::upsample(oracle::random_raster(rng, 8, 8), 2, Kernel::cubic()).is_signed());
}
