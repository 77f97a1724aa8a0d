// SPDX-License-Identifier: Apache-2.0

#include "ediz/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ediz/simd.hpp"

namespace ediz {

namespace {

constexpr int kSsimWindow = 8;
const double kC1 = 0.01 * 0.01;
const double kC2 = 0.03 * 0.03;

void require_same_shape(const Raster& a, const Raster& b, const char* op) {
    if (a.width() != b.width() || a.height() != b.height() || a.channels() != b.channels())
        throw ShapeError(std::string(op) + ": shape mismatch (" + std::to_string(a.width()) + "x" +
                         std::to_string(a.height()) + "x" + std::to_string(a.channels()) +
                         " vs " + std::to_string(b.width()) + "x" + std::to_string(b.height()) +
                         "x" + std::to_string(b.channels()) + ")");
}

// (W+1) x (H+1) summed-area table of f(a[i], b[i]).
template <typename F>
std::vector<double> integral(const Raster& a, const Raster& b, F f) {
    const int w = a.width();
    const int h = a.height();
    std::vector<double> s(std::size_t(w + 1) * (h + 1), 0.0);
    for (int y = 0; y < h; ++y) {
        const double* ra = a.row_ptr(y);
        const double* rb = b.row_ptr(y);
        double run = 0.0;
        const double* above = s.data() + std::size_t(y) * (w + 1);
        double* cur = s.data() + std::size_t(y + 1) * (w + 1);
        for (int x = 0; x < w; ++x) {
            run += f(ra[x], rb[x]);
            cur[x + 1] = above[x + 1] + run;
        }
    }
    return s;
}

double window_sum(const std::vector<double>& s, int stride, int x, int y, int win) {
    const auto at = [&](int xx, int yy) { return s[std::size_t(yy) * stride + xx]; };
    return at(x + win, y + win) - at(x, y + win) - at(x + win, y) + at(x, y);
}

} // namespace

double mse(const Raster& a, const Raster& b) {
    require_same_shape(a, b, "mse");
    const double ssd = simd::active_ops().ssd(a.data(), b.data(), a.sample_count());
    return ssd / double(a.sample_count());
}

double psnr(const Raster& a, const Raster& b) {
    const double m = mse(a, b);
    if (m == 0.0)
        return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(1.0 / m);
}

double ssim(const Raster& a, const Raster& b) {
    require_same_shape(a, b, "ssim");
    const Raster ya = to_luma(a);
    const Raster yb = to_luma(b);
    const int w = ya.width();
    const int h = ya.height();
    if (w < kSsimWindow || h < kSsimWindow)
        throw std::invalid_argument("ssim: image " + std::to_string(w) + "x" + std::to_string(h) +
                                    " smaller than the " + std::to_string(kSsimWindow) + "x" +
                                    std::to_string(kSsimWindow) + " window");

    const auto sa = integral(ya, yb, [](double x, double) { return x; });
    const auto sb = integral(ya, yb, [](double, double y) { return y; });
    const auto saa = integral(ya, yb, [](double x, double) { return x * x; });
    const auto sbb = integral(ya, yb, [](double, double y) { return y * y; });
    const auto sab = integral(ya, yb, [](double x, double y) { return x * y; });

    const int stride = w + 1;
    const double inv_area = 1.0 / (kSsimWindow * kSsimWindow);
    double total = 0.0;
    std::size_t windows = 0;
    for (int y = 0; y + kSsimWindow <= h; ++y) {
        for (int x = 0; x + kSsimWindow <= w; ++x) {
            const double mu_a = window_sum(sa, stride, x, y, kSsimWindow) * inv_area;
            const double mu_b = window_sum(sb, stride, x, y, kSsimWindow) * inv_area;
            const double var_a =
                window_sum(saa, stride, x, y, kSsimWindow) * inv_area - mu_a * mu_a;
            const double var_b =
                window_sum(sbb, stride, x, y, kSsimWindow) * inv_area - mu_b * mu_b;
            const double cov =
                window_sum(sab, stride, x, y, kSsimWindow) * inv_area - mu_a * mu_b;
            const double num = (2.0 * mu_a * mu_b + kC1) * (2.0 * cov + kC2);
            const double den = (mu_a * mu_a + mu_b * mu_b + kC1) * (var_a + var_b + kC2);
            total += num / den;
            ++windows;
        }
    }
    return total / double(windows);
}

double hf_energy(const Raster& img) {
    const Raster y = to_luma(img);
    const int w = y.width();
    const int h = y.height();
    if (w < 3 || h < 3)
        throw std::invalid_argument("hf_energy: image " + std::to_string(w) + "x" +
                                    std::to_string(h) + " smaller than the 3x3 Laplacian");
    double total = 0.0;
    for (int yy = 1; yy < h - 1; ++yy) {
        const double* above = y.row_ptr(yy - 1);
        const double* row = y.row_ptr(yy);
        const double* below = y.row_ptr(yy + 1);
        for (int x = 1; x < w - 1; ++x) {
            const double r = (above[x] + below[x]) + (row[x - 1] + row[x + 1]) - 4.0 * row[x];
            total += r * r;
        }
    }
    return total / (double(w - 2) * double(h - 2));
}

namespace {

MetricRow metric_row(const Raster& img, const Raster& reference) {
    MetricRow row;
    row.mse = mse(img, reference);
    row.psnr = psnr(img, reference);
    row.ssim = ssim(img, reference);
    row.hf_energy = hf_energy(img);
    return row;
}

} // namespace

QualityReport measure_quality(const Raster& img, const Raster& reference) {
    require_same_shape(img, reference, "measure_quality");
    QualityReport report;
    if (img.channels() == 1) {
        report.luma = metric_row(img, reference);
        report.channel = {report.luma};
        return report;
    }
    for (int c = 0; c < img.channels(); ++c)
        report.channel.push_back(metric_row(channel_plane(img, c), channel_plane(reference, c)));
    report.luma = metric_row(to_luma(img), to_luma(reference));
    return report;
}

} // namespace ediz
