// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ediz/metrics.hpp"

namespace ediz {

/// A/B result of one compare run: the plain zoom and the error-feedback
/// zoom measured against the same ground truth. Delta rows (ediz minus
/// plain) are recomputed at serialization time, never stored.
struct CompareReport {
    std::string kernel_name; // CLI spelling: "cubic" or "lanczos3"
    int factor = 0;
    double gain = 1.0;

    QualityReport plain;
    QualityReport ediz;

    std::vector<std::string> artifacts;
};

/// Luma headline rows only:
/// {config, plain: {mse, psnr, ssim, hf_energy}, ediz: {...}, delta: {...},
///  artifacts: [...]}. Infinite PSNR serializes as the string "inf".
nlohmann::json to_json(const CompareReport& report);

/// Parses to_json output back (per-channel detail is not part of the wire
/// format, so the result carries luma rows only).
CompareReport compare_report_from_json(const nlohmann::json& j);

/// Flat key = value text block, one metric per line.
std::string to_text(const CompareReport& report);

} // namespace ediz
