// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "ediz/kernels.hpp"
#include "ediz/raster.hpp"

namespace ediz {

class WeightTable;

namespace detail {

// Table construction with the normalization step exposed, for self-check
// fault injection. Public build_weights always normalizes.
WeightTable build_weights_impl(int len_in, int factor, const Kernel& kernel, bool normalize);

// Decimation with a sampling offset in [0, factor). Public subsample uses
// offset 0.
Raster subsample_offset(const Raster& img, int factor, int offset);

} // namespace detail

/// Out-of-range source indices are clamped to the edge sample.
struct BoundaryPolicy {
    enum class Mode { Replicate };
    Mode mode = Mode::Replicate;
};

struct Tap {
    int offset;    // source index relative to floor(j / factor)
    double weight; // normalized
};

/// Precomputed per-phase tap weights for one axis of integer-factor
/// upsampling. Output index j maps to source coordinate j / factor
/// (corner-aligned), so all outputs with the same j mod factor share
/// weights. Each phase's weights are normalized to sum to 1; taps whose
/// raw kernel weight is exactly zero are dropped, which leaves phase 0
/// with the single tap {0, 1.0}.
class WeightTable {
public:
    int factor() const noexcept { return factor_; }
    int len_in() const noexcept { return len_in_; }

    std::span<const Tap> phase(int p) const noexcept {
        return {taps_.data() + begin_[p], taps_.data() + begin_[p + 1]};
    }

private:
    friend WeightTable detail::build_weights_impl(int, int, const Kernel&, bool);

    int factor_ = 0;
    int len_in_ = 0;
    std::vector<Tap> taps_;
    std::vector<std::size_t> begin_; // factor + 1 entries
};

/// Builds the phase weight table for upsampling rows of length len_in by
/// an integer factor >= 2.
WeightTable build_weights(int len_in, int factor, const Kernel& kernel);

/// Integer-factor upsampling by two separable 1-D passes (horizontal then
/// vertical). Corner-aligned: output site (factor*i, factor*j) reproduces
/// input sample (i, j) exactly. The signed flag propagates.
Raster upsample(const Raster& img, int factor, const Kernel& kernel,
                BoundaryPolicy boundary = {});

/// Decimation: out(i, j) = in(factor*i, factor*j). Both dimensions must be
/// divisible by the factor.
Raster subsample(const Raster& img, int factor);

} // namespace ediz
