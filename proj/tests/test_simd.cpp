// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include <doctest.h>

#include "ediz/pipeline.hpp"
#include "ediz/resample.hpp"
#include "ediz/simd.hpp"
#include "oracles.hpp"

using ediz::simd::Backend;
using ediz::simd::Ops;

namespace {

struct ScopedBackend {
    explicit ScopedBackend(Backend b) { ediz::simd::select(b); }
    ~ScopedBackend() { ediz::simd::select(Backend::Auto); }
};

std::vector<double> random_vec(oracle::Rng& rng, std::size_t n) {
    std::vector<double> v(n);
    for (double& x : v)
        x = rng.next01() * 2.0 - 1.0;
    return v;
}

} // namespace

TEST_CASE("scalar backend is always available") {
    const auto backends = ediz::simd::available_backends();
    REQUIRE(!backends.empty());
    CHECK(backends.front() == &ediz::simd::scalar_ops());
}

TEST_CASE("vector backends match the scalar reference") {
    const Ops& ref = ediz::simd::scalar_ops();
    oracle::Rng rng(801);

    // lengths straddling every remainder path
    const std::size_t lengths[] = {1, 2, 3, 4, 5, 7, 8, 9, 12, 31, 64, 100, 1023};

    for (const Ops* ops : ediz::simd::available_backends()) {
        CAPTURE(ops->name);
        for (std::size_t n : lengths) {
            const auto a = random_vec(rng, n);
            const auto b = random_vec(rng, n);
            const double w = rng.next01() * 4.0 - 2.0;

            std::vector<double> want(n), got(n);

            ref.scale(want.data(), a.data(), w, n);
            ops->scale(got.data(), a.data(), w, n);
            CHECK(want == got);

            want = b;
            got = b;
            ref.axpy(want.data(), a.data(), w, n);
            ops->axpy(got.data(), a.data(), w, n);
            CHECK(want == got);

            ref.add(want.data(), a.data(), b.data(), n);
            ops->add(got.data(), a.data(), b.data(), n);
            CHECK(want == got);

            ref.sub(want.data(), a.data(), b.data(), n);
            ops->sub(got.data(), a.data(), b.data(), n);
            CHECK(want == got);

            ref.add_scaled(want.data(), a.data(), b.data(), w, n);
            ops->add_scaled(got.data(), a.data(), b.data(), w, n);
            CHECK(want == got);

            // reduction may reassociate; allow an ulp-scale deviation
            const double want_ssd = ref.ssd(a.data(), b.data(), n);
            const double got_ssd = ops->ssd(a.data(), b.data(), n);
            CHECK(std::abs(want_ssd - got_ssd) <= 1e-12 * (1.0 + want_ssd));
        }
    }
}

TEST_CASE("backend selection") {
    CHECK(ediz::simd::select(Backend::Scalar));
    CHECK(&ediz::simd::active_ops() == &ediz::simd::scalar_ops());
    CHECK(ediz::simd::select(Backend::Auto));

    // unavailable backends are refused and leave the selection alone
#if !defined(__aarch64__)
    const Ops& before = ediz::simd::active_ops();
    CHECK_FALSE(ediz::simd::select(Backend::Neon));
    CHECK(&ediz::simd::active_ops() == &before);
#endif
}

TEST_CASE("whole pipeline is backend-invariant") {
    oracle::Rng rng(809);
    const ediz::Raster in = oracle::random_raster(rng, 24, 16, 3);

    ediz::EdizConfig cfg;
    cfg.factor = 4;
    cfg.kernel = ediz::Kernel::lanczos(3);

    ediz::Raster up_scalar(1, 1, 1), out_scalar(1, 1, 1);
    {
        ScopedBackend guard(Backend::Scalar);
        up_scalar = ediz::upsample(in, 4, cfg.kernel);
        out_scalar = ediz::ediz_zoom(in, cfg).i_out;
    }

    for (const Ops* ops : ediz::simd::available_backends()) {
        if (ops == &ediz::simd::scalar_ops())
            continue;
        CAPTURE(ops->name);
        ScopedBackend guard(ops->name == std::string("avx2") ? Backend::Avx2 : Backend::Neon);
        // elementwise ops only, so the resampled images must be bit-identical
        CHECK(oracle::bitwise_equal(ediz::upsample(in, 4, cfg.kernel), up_scalar));
        CHECK(oracle::bitwise_equal(ediz::ediz_zoom(in, cfg).i_out, out_scalar));
    }
}
