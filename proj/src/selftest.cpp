// SPDX-License-Identifier: Apache-2.0

#include "ediz/selftest.hpp"

#include <cmath>
#include <cstring>
#include <vector>

#include "ediz/kernels.hpp"
#include "ediz/pipeline.hpp"
#include "ediz/raster.hpp"
#include "ediz/resample.hpp"

namespace ediz {

namespace {

// splitmix64; self-contained so the printed report is identical across
// standard libraries.
struct Rng {
    std::uint64_t state;

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double next01() { return double(next_u64() >> 11) * 0x1.0p-53; }
};

Raster random_raster(Rng& rng, int w, int h, int c = 1) {
    Raster r(w, h, c);
    for (double& s : r.samples())
        s = rng.next01();
    return r;
}

// Direct 2-D tensor-product zoom evaluated per output pixel, with per-axis
// weight normalization and edge clamping. Deliberately shares nothing with
// the separable two-pass implementation.
Raster direct_zoom_2d(const Raster& in, int n, const Kernel& kernel) {
    const double support = kernel.support();
    Raster out(in.width() * n, in.height() * n, in.channels(), in.is_signed());
    std::vector<double> wx, wy;
    std::vector<int> ix, iy;
    for (int oy = 0; oy < out.height(); ++oy) {
        const double ys = double(oy) / n;
        iy.clear();
        wy.clear();
        double sum_y = 0.0;
        for (int v = int(std::floor(ys - support)) + 1; v <= int(std::ceil(ys + support)) - 1;
             ++v) {
            const double w = kernel(ys - v);
            if (w != 0.0) {
                iy.push_back(std::min(std::max(v, 0), in.height() - 1));
                wy.push_back(w);
                sum_y += w;
            }
        }
        for (int ox = 0; ox < out.width(); ++ox) {
            const double xs = double(ox) / n;
            ix.clear();
            wx.clear();
            double sum_x = 0.0;
            for (int u = int(std::floor(xs - support)) + 1;
                 u <= int(std::ceil(xs + support)) - 1; ++u) {
                const double w = kernel(xs - u);
                if (w != 0.0) {
                    ix.push_back(std::min(std::max(u, 0), in.width() - 1));
                    wx.push_back(w);
                    sum_x += w;
                }
            }
            for (int c = 0; c < in.channels(); ++c) {
                double acc = 0.0;
                for (std::size_t a = 0; a < iy.size(); ++a)
                    for (std::size_t b = 0; b < ix.size(); ++b)
                        acc += (wy[a] / sum_y) * (wx[b] / sum_x) * in.at(ix[b], iy[a], c);
                out.set(ox, oy, c, acc);
            }
        }
    }
    return out;
}

double max_abs_diff(const Raster& a, const Raster& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.sample_count(); ++i)
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

struct Harness {
    std::ostream& out;
    SelftestResult result;
    bool kernel_sign_flip;
    bool normalize_tables;
    int decimation_offset;
    Rng rng;

    double eval(const Kernel& k, double x) const {
        const double v = k(x);
        return kernel_sign_flip ? -v : v;
    }

    void report(const char* name, bool passed) {
        ++result.checks_run;
        if (!passed)
            ++result.checks_failed;
        out << (passed ? "PASS " : "FAIL ") << name << "\n";
    }
};

std::vector<Kernel> test_kernels() {
    return {Kernel::cubic(-0.5), Kernel::lanczos(3)};
}

void check_kernel_symmetry(Harness& h) {
    bool ok = true;
    for (const Kernel& k : test_kernels()) {
        for (int i = 0; i < 1000; ++i) {
            const double x = (h.rng.next01() * 2.0 - 1.0) * k.support();
            if (h.eval(k, x) != h.eval(k, -x))
                ok = false;
        }
    }
    h.report("kernel-symmetry", ok);
}

void check_kernel_support(Harness& h) {
    bool ok = true;
    for (const Kernel& k : test_kernels()) {
        const double s = k.support();
        for (double x : {s, s + 0.25, s + 1.0, 10.0})
            if (h.eval(k, x) != 0.0 || h.eval(k, -x) != 0.0)
                ok = false;
    }
    h.report("kernel-support", ok);
}

void check_kernel_interpolating(Harness& h) {
    bool ok = true;
    for (const Kernel& k : test_kernels()) {
        if (h.eval(k, 0.0) != 1.0)
            ok = false;
        for (int m = 1; m < int(k.support()); ++m)
            if (h.eval(k, double(m)) != 0.0 || h.eval(k, double(-m)) != 0.0)
                ok = false;
    }
    h.report("kernel-interpolating", ok);
}

void check_cubic_partition_of_unity(Harness& h) {
    const Kernel k = Kernel::cubic(-0.5);
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        const double x = h.rng.next01();
        const double sum =
            h.eval(k, x - 2.0) + h.eval(k, x - 1.0) + h.eval(k, x) + h.eval(k, x + 1.0);
        if (std::abs(sum - 1.0) > 1e-9)
            ok = false;
    }
    h.report("cubic-partition-of-unity", ok);
}

void check_weight_normalization(Harness& h) {
    bool ok = true;
    for (const Kernel& k : test_kernels()) {
        for (int n : {2, 4}) {
            const WeightTable t = detail::build_weights_impl(64, n, k, h.normalize_tables);
            for (int p = 0; p < n; ++p) {
                double sum = 0.0;
                for (const Tap& tap : t.phase(p))
                    sum += tap.weight;
                if (std::abs(sum - 1.0) > 1e-12)
                    ok = false;
            }
        }
    }
    h.report("weight-normalization", ok);
}

void check_separability_oracle(Harness& h) {
    bool ok = true;
    for (const Kernel& k : test_kernels()) {
        for (int n : {2, 4}) {
            for (int rep = 0; rep < 2; ++rep) {
                const Raster in = random_raster(h.rng, 8, 8);
                if (max_abs_diff(upsample(in, n, k), direct_zoom_2d(in, n, k)) > 1e-6)
                    ok = false;
            }
        }
    }
    h.report("separability-oracle", ok);
}

void check_decimation_zoom_identity(Harness& h) {
    bool ok = true;
    for (const Kernel& k : test_kernels()) {
        for (int n : {2, 4}) {
            const Raster in = random_raster(h.rng, 16, 16);
            const Raster back =
                detail::subsample_offset(upsample(in, n, k), n, h.decimation_offset);
            if (max_abs_diff(back, in) > 1e-6)
                ok = false;
        }
    }
    h.report("decimation-zoom-identity", ok);
}

void check_constant_fixed_point(Harness& h) {
    bool ok = true;
    for (int n : {2, 4}) {
        Raster c(12, 12, 1);
        for (double& s : c.samples())
            s = 0.37;
        EdizConfig cfg;
        cfg.factor = n;
        cfg.kernel = Kernel::cubic(-0.5);
        const EdizTrace trace = ediz_zoom(c, cfg);
        if (max_abs_diff(trace.i_out, trace.i_in_zoom) > 1e-9)
            ok = false;
        for (double s : trace.error_e.samples())
            if (std::abs(s) > 1e-9)
                ok = false;
    }
    h.report("ediz-constant-fixed-point", ok);
}

void check_ramp_identity(Harness& h) {
    Raster ramp(32, 32, 1);
    for (int y = 0; y < 32; ++y)
        for (int x = 0; x < 32; ++x)
            ramp.set(x, y, 0, double(x) / 31.0);
    EdizConfig cfg;
    cfg.factor = 2;
    cfg.kernel = Kernel::cubic(-0.5);
    const Raster err = reconstruction_error(ramp, cfg);
    bool ok = true;
    for (int y = 0; y < 32; ++y)
        for (int x = 4; x < 28; ++x)
            if (std::abs(err.at(x, y)) > 1e-6)
                ok = false;
    h.report("ediz-ramp-identity", ok);
}

void check_gain_zero(Harness& h) {
    const Raster in = random_raster(h.rng, 8, 8, 3);
    EdizConfig cfg;
    cfg.factor = 2;
    cfg.kernel = Kernel::lanczos(3);
    cfg.error_gain = 0.0;
    const EdizTrace trace = ediz_zoom(in, cfg);
    const bool ok = std::memcmp(trace.i_out.data(), trace.i_in_zoom.data(),
                                trace.i_out.sample_count() * sizeof(double)) == 0;
    h.report("ediz-gain-zero", ok);
}

} // namespace

SelftestResult run_selftest(const SelftestOptions& options, std::ostream& out) {
    Harness h{out,
              SelftestResult{},
              options.fault == SelftestFault::KernelSignFlip,
              options.fault != SelftestFault::SkipNormalization,
              options.fault == SelftestFault::DecimationOffset ? 1 : 0,
              Rng{options.seed}};

    check_kernel_symmetry(h);
    check_kernel_support(h);
    check_kernel_interpolating(h);
    check_cubic_partition_of_unity(h);
    check_weight_normalization(h);
    check_separability_oracle(h);
    check_decimation_zoom_identity(h);
    check_constant_fixed_point(h);
    check_ramp_identity(h);
    check_gain_zero(h);

    out << "selftest: " << (h.result.checks_run - h.result.checks_failed) << " passed, "
        << h.result.checks_failed << " failed (seed " << options.seed << ")\n";
    return h.result;
}

} // namespace ediz
