#include "cusp/branch.hpp"

#include <cmath>

#include "cusp/errors.hpp"

namespace cusp {

namespace {
constexpr double kImTol = 1e-12;  // relative slack below the real axis
}

bool in_closed_half_plane(cx z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    if (z.imag() >= 0.0) return true;
    return -z.imag() <= kImTol * std::hypot(z.real(), z.imag());
}

double branch_arg(cx z) {
    if (z == cx(0.0, 0.0)) throw ZeroArgument("branch_arg at 0");
    if (!in_closed_half_plane(z)) throw OutOfDomain("branch_arg below the real axis");
    double im = z.imag() < 0.0 ? 0.0 : z.imag();
    // atan2(+0, x<0) = pi, so the negative real axis lands on the upper edge
    // of the cut, which is the branch we want.
    return std::atan2(im, z.real());
}

cx branch_log(cx z) {
    double a = branch_arg(z);
    double m = std::hypot(z.real(), z.imag());
    return {std::log(m), a};
}

}  // namespace cusp
