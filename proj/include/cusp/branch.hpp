#pragma once

#include <complex>

namespace cusp {

using cx = std::complex<double>;

// Complex logarithm on the closed upper half-plane with arg in [0, pi].
// branch_log(i) = i*pi/2, branch_log(-1) = i*pi; continuous on the closed
// half-plane minus the origin. Points with im(z) slightly below zero
// (|im| <= 1e-12*|z|) are treated as real; further below throws OutOfDomain.
cx branch_log(cx z);

// arg(z) in [0, pi] under the same convention and tolerance.
double branch_arg(cx z);

// True when z lies in the tolerated closed upper half-plane.
bool in_closed_half_plane(cx z);

}  // namespace cusp
