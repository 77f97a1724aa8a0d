// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace ediz {

/// 1-D interpolation kernel descriptor. Two families:
///
///   Cubic   — piecewise cubic convolution with free parameter a < 0
///             (a = -0.5 is the third-order-accurate choice), support 2.
///   Lanczos — sinc(x) * sinc(x/a) windowed sinc with a lobes (2, 3 or 4),
///             support a.
///
/// Both families interpolate: eval is exactly 1 at 0 and exactly 0 at every
/// other integer inside the support (the closed forms guarantee it, so
/// integer offsets are answered without going through sin()).
class Kernel {
public:
    enum class Family { Cubic, Lanczos };

    static Kernel cubic(double a = -0.5);
    static Kernel lanczos(int lobes = 3);

    Family family() const noexcept { return family_; }
    double param_a() const noexcept { return param_a_; }

    /// Support radius: 2 for cubic, the lobe count for Lanczos.
    double support() const noexcept;

    /// Kernel weight at offset x (in source-sample units). Total and even:
    /// eval(x) == eval(-x), zero for |x| >= support().
    double operator()(double x) const noexcept;

    std::string name() const;

private:
    Kernel(Family family, double param_a) : family_(family), param_a_(param_a) {}

    Family family_;
    double param_a_;
};

} // namespace ediz
