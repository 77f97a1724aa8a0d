// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "ediz/image_io.hpp"
#include "ediz/kernels.hpp"
#include "ediz/metrics.hpp"
#include "ediz/pipeline.hpp"
#include "ediz/report.hpp"
#include "ediz/resample.hpp"
#include "ediz/selftest.hpp"

namespace ediz::cli {

namespace {

Kernel kernel_from_name(const std::string& name) {
    if (name == "cubic")
        return Kernel::cubic();
    if (name == "lanczos3")
        return Kernel::lanczos(3);
    throw std::invalid_argument("unknown kernel '" + name + "' (use cubic or lanczos3)");
}

int fail_io(const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
}

} // namespace

int run_zoom(const ZoomOptions& opts) {
    if (!opts.emit_error.empty() && !opts.use_ediz) {
        std::cerr << "error: --emit-error requires --ediz\n";
        return 2;
    }
    try {
        const Kernel kernel = kernel_from_name(opts.kernel);
        const Raster input = load_image(opts.input);

        if (opts.use_ediz) {
            EdizConfig cfg;
            cfg.factor = opts.factor;
            cfg.kernel = kernel;
            cfg.error_gain = opts.gain;
            cfg.divisibility = opts.pad ? EdizConfig::Divisibility::PadReplicate
                                        : EdizConfig::Divisibility::Strict;
            const EdizTrace trace = ediz_zoom(input, cfg);
            save_image(trace.i_out, opts.output);
            if (!opts.emit_error.empty()) {
                const double scale = save_signed_visualized(trace.estimated_error, opts.emit_error);
                std::printf("error map %s scale: [-%.17g, %.17g] -> [0, 1]\n",
                            opts.emit_error.c_str(), scale, scale);
            }
            std::printf("wrote %s (%dx%d, ediz, %s, factor %d, gain %.17g)\n",
                        opts.output.c_str(), trace.i_out.width(), trace.i_out.height(),
                        kernel.name().c_str(), opts.factor, opts.gain);
        } else {
            const Raster out = upsample(input, opts.factor, kernel);
            save_image(out, opts.output);
            std::printf("wrote %s (%dx%d, plain, %s, factor %d)\n", opts.output.c_str(),
                        out.width(), out.height(), kernel.name().c_str(), opts.factor);
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        return fail_io(e);
    }
}

int run_compare(const CompareOptions& opts) {
    try {
        const Kernel kernel = kernel_from_name(opts.kernel);
        const int n = opts.factor;
        const Raster gt = load_image(opts.ground_truth);

        Raster work = gt;
        if (gt.width() % n != 0 || gt.height() % n != 0) {
            if (!opts.pad) {
                std::cerr << "error: ground truth " << gt.width() << "x" << gt.height()
                          << " is not divisible by factor " << n
                          << "; pass --pad to replicate-pad the edges\n";
                return 1;
            }
            const int rw = gt.width() % n;
            const int rh = gt.height() % n;
            work = pad_replicate(gt, rw ? n - rw : 0, rh ? n - rh : 0);
        }

        const Raster lr = subsample(work, n);

        EdizConfig cfg;
        cfg.factor = n;
        cfg.kernel = kernel;
        cfg.error_gain = opts.gain;
        cfg.divisibility = opts.pad ? EdizConfig::Divisibility::PadReplicate
                                    : EdizConfig::Divisibility::Strict;

        Raster plain_out = upsample(lr, n, kernel);
        const EdizTrace trace = ediz_zoom(lr, cfg);
        Raster ediz_out = trace.i_out;
        Raster error_map = trace.estimated_error;
        if (plain_out.width() != gt.width() || plain_out.height() != gt.height()) {
            plain_out = crop_top_left(plain_out, gt.width(), gt.height());
            ediz_out = crop_top_left(ediz_out, gt.width(), gt.height());
            error_map = crop_top_left(error_map, gt.width(), gt.height());
        }

        namespace fs = std::filesystem;
        fs::create_directories(opts.outdir);
        const std::string ext = gt.channels() == 3 ? ".ppm" : ".pgm";
        const auto out_path = [&](const std::string& stem) {
            return (fs::path(opts.outdir) / (stem + ext)).string();
        };

        CompareReport report;
        report.kernel_name = opts.kernel;
        report.factor = n;
        report.gain = opts.gain;

        const std::string lr_path = out_path("lr");
        const std::string plain_path = out_path("plain");
        const std::string ediz_path = out_path("ediz");
        const std::string error_path = out_path("error_map");
        const std::string diff_plain_path = out_path("diff_plain");
        const std::string diff_ediz_path = out_path("diff_ediz");

        save_image(lr, lr_path);
        save_image(clamp01(plain_out), plain_path);
        save_image(clamp01(ediz_out), ediz_path);
        const double err_scale = save_signed_visualized(error_map, error_path);
        const double dp_scale = save_signed_visualized(subtract(gt, plain_out), diff_plain_path);
        const double de_scale = save_signed_visualized(subtract(gt, ediz_out), diff_ediz_path);

        // metrics are taken on the quantized outputs, so the numbers
        // describe exactly what the artifact files contain
        report.plain = measure_quality(quantized8(plain_out), gt);
        report.ediz = measure_quality(quantized8(ediz_out), gt);
        report.artifacts = {lr_path,         plain_path,      ediz_path,
                            error_path,      diff_plain_path, diff_ediz_path};

        const std::string report_txt = (fs::path(opts.outdir) / "report.txt").string();
        report.artifacts.push_back(report_txt);
        std::string json_path;
        if (opts.json) {
            json_path = (fs::path(opts.outdir) / "report.json").string();
            report.artifacts.push_back(json_path);
        }

        const std::string text = to_text(report);
        std::ofstream(report_txt) << text;
        if (opts.json)
            std::ofstream(json_path) << to_json(report).dump(2) << "\n";

        std::fputs(text.c_str(), stdout);
        std::printf("error_map scale: %.17g\n", err_scale);
        std::printf("diff_plain scale: %.17g\n", dp_scale);
        std::printf("diff_ediz scale: %.17g\n", de_scale);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        return fail_io(e);
    }
}

int run_selftest(const SelftestCliOptions& opts) {
    SelftestOptions options;
    options.seed = opts.seed;
    if (opts.inject.empty())
        options.fault = SelftestFault::None;
    else if (opts.inject == "kernel-sign")
        options.fault = SelftestFault::KernelSignFlip;
    else if (opts.inject == "no-normalize")
        options.fault = SelftestFault::SkipNormalization;
    else if (opts.inject == "decimation-offset")
        options.fault = SelftestFault::DecimationOffset;
    else {
        std::cerr << "error: unknown fault '" << opts.inject
                  << "' (kernel-sign, no-normalize, decimation-offset)\n";
        return 2;
    }
    const SelftestResult result = run_selftest(options, std::cout);
    return result.all_passed() ? 0 : 1;
}

} // namespace ediz::cli
