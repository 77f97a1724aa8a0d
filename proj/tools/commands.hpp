// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

namespace ediz::cli {

struct ZoomOptions {
    std::string input;
    std::string output;
    int factor = 2;
    std::string kernel = "cubic";
    bool use_ediz = false;
    double gain = 1.0;
    bool pad = false;
    std::string emit_error; // empty = off
};

struct CompareOptions {
    std::string ground_truth;
    int factor = 2;
    std::string kernel = "cubic";
    double gain = 1.0;
    std::string outdir;
    bool json = false;
    bool pad = false;
};

struct SelftestCliOptions {
    std::uint64_t seed = 20260101;
    std::string inject; // empty = no fault
};

int run_zoom(const ZoomOptions& opts);
int run_compare(const CompareOptions& opts);
int run_selftest(const SelftestCliOptions& opts);

} // namespace ediz::cli
