// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"ediz - image zooming with error-feedback detail restoration"};
    app.require_subcommand(1);

    ediz::cli::ZoomOptions zoom_opts;
    auto* zoom = app.add_subcommand("zoom", "Upscale an image by an integer factor");
    zoom->add_option("--in", zoom_opts.input, "Input image (.ppm/.pgm/.png)")->required();
    zoom->add_option("--out", zoom_opts.output, "Output image")->required();
    zoom->add_option("--factor", zoom_opts.factor, "Integer zoom factor (>= 2)")
        ->required()
        ->check(CLI::Range(2, 64));
    zoom->add_option("--kernel", zoom_opts.kernel, "Interpolation kernel")
        ->required()
        ->check(CLI::IsMember({"cubic", "lanczos3"}));
    zoom->add_flag("--ediz", zoom_opts.use_ediz, "Add the estimated-error detail correction");
    zoom->add_option("--gain", zoom_opts.gain, "Error correction gain (default 1)")
        ->check(CLI::NonNegativeNumber);
    zoom->add_flag("--pad", zoom_opts.pad,
                   "Replicate-pad non-divisible dimensions instead of failing");
    zoom->add_option("--emit-error", zoom_opts.emit_error,
                     "Also write the visualized error map (requires --ediz)");

    ediz::cli::CompareOptions cmp_opts;
    auto* compare = app.add_subcommand(
        "compare", "Decimate a ground truth, zoom it back plain and ediz, and score both");
    compare->add_option("--gt", cmp_opts.ground_truth, "Ground-truth image")->required();
    compare->add_option("--factor", cmp_opts.factor, "Integer zoom factor (>= 2)")
        ->required()
        ->check(CLI::Range(2, 64));
    compare->add_option("--kernel", cmp_opts.kernel, "Interpolation kernel")
        ->required()
        ->check(CLI::IsMember({"cubic", "lanczos3"}));
    compare->add_option("--gain", cmp_opts.gain, "Error correction gain (default 1)")
        ->check(CLI::NonNegativeNumber);
    compare->add_option("--outdir", cmp_opts.outdir, "Directory for outputs and reports")
        ->required();
    compare->add_flag("--json", cmp_opts.json, "Also write report.json");
    compare->add_flag("--pad", cmp_opts.pad,
                      "Replicate-pad non-divisible dimensions instead of failing");

    ediz::cli::SelftestCliOptions st_opts;
    auto* selftest = app.add_subcommand("selftest", "Run the built-in invariant suite");
    selftest->add_option("--seed", st_opts.seed, "RNG seed for the randomized checks");
    selftest->add_option("--inject", st_opts.inject,
                         "Testing hook: run with a deliberate fault "
                         "(kernel-sign, no-normalize, decimation-offset)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (zoom->parsed())
        return ediz::cli::run_zoom(zoom_opts);
    if (compare->parsed())
        return ediz::cli::run_compare(cmp_opts);
    return ediz::cli::run_selftest(st_opts);
}
