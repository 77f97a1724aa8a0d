// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace ediz {

/// Deliberate defects the self-check must catch; used to verify that the
/// checks have teeth. None is the production configuration.
enum class SelftestFault {
    None,
    KernelSignFlip,   // kernel evaluation negated
    SkipNormalization,// weight-table phases left unnormalized
    DecimationOffset, // decimation samples at offset 1 instead of 0
};

struct SelftestOptions {
    std::uint64_t seed = 20260101;
    SelftestFault fault = SelftestFault::None;
};

struct SelftestResult {
    int checks_run = 0;
    int checks_failed = 0;
    bool all_passed() const noexcept { return checks_failed == 0; }
};

/// Runs the invariant suite (kernel symmetry/support/interpolation,
/// partition of unity, weight normalization, separability against a direct
/// 2-D oracle, decimation/upsample identity, constant and ramp pipeline
/// identities) and prints one PASS/FAIL line per property. Output is a
/// pure function of the options, so identical seeds give identical text.
SelftestResult run_selftest(const SelftestOptions& options, std::ostream& out);

} // namespace ediz
