// SPDX-License-Identifier: Apache-2.0

#include "ediz/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ediz {

namespace {

double sinc(double x) {
    if (x == 0.0)
        return 1.0;
    const double px = std::numbers::pi * x;
    return std::sin(px) / px;
}

} // namespace

Kernel Kernel::cubic(double a) {
    if (!(a < 0.0))
        throw std::invalid_argument("cubic kernel parameter must be negative, got " +
                                    std::to_string(a));
    return Kernel(Family::Cubic, a);
}

Kernel Kernel::lanczos(int lobes) {
    if (lobes < 2 || lobes > 4)
        throw std::invalid_argument("lanczos lobe count must be 2, 3 or 4, got " +
                                    std::to_string(lobes));
    return Kernel(Family::Lanczos, double(lobes));
}

double Kernel::support() const noexcept {
    return family_ == Family::Cubic ? 2.0 : param_a_;
}

double Kernel::operator()(double x) const noexcept {
    const double ax = std::abs(x);
    if (ax >= support())
        return 0.0;
    // Integer offsets: both families interpolate, exactly.
    if (ax == std::floor(ax))
        return ax == 0.0 ? 1.0 : 0.0;
    if (family_ == Family::Cubic) {
        const double a = param_a_;
        if (ax <= 1.0)
            return ((a + 2.0) * ax - (a + 3.0)) * ax * ax + 1.0;
        return a * (((ax - 5.0) * ax + 8.0) * ax - 4.0);
    }
    return sinc(ax) * sinc(ax / param_a_);
}

std::string Kernel::name() const {
    if (family_ == Family::Cubic)
        return "cubic(a=" + std::to_string(param_a_) + ")";
    return "lanczos" + std::to_string(int(param_a_));
}

} // namespace ediz
