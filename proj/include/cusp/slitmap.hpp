#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "cusp/branch.hpp"
#include "cusp/series.hpp"

namespace cusp {

// Parameters of the explicit half-plane -> half-plane-minus-circular-arc map
//   1/f(z) = (1/2pi) [ log((z+alpha)/z) + (2pi-alpha)/(z+alpha) ].
// The arc sits on the unit circle centered at i; its endpoint angle phi0 is
// only an annotation (no closed form ties it to alpha).
struct CircularArc {
    double alpha;
    std::optional<double> phi0_note = std::nullopt;
};

// f(z) for z != 0, z != -alpha, im(z) >= 0, logs branched as branch_log.
cx chr_eval(const CircularArc& p, cx z);

// f expressed through L = log z, for points too deep for doubles
// (z = e^L underflows below |L| ~ 708; in that regime z + alpha == alpha).
cx chr_eval_logz(const CircularArc& p, cx L);

// Expansion of f into the log-power form: a = 1 and c_nk = [z^k] h(z)^n with
// h(z) = log(z+alpha) + (2pi-alpha)/(z+alpha), by truncated series arithmetic.
LogSeries chr_expand(const CircularArc& p, int n_max, int k_max);

// max over samples of |f_series(z) - f_closed(z)| / |f_closed(z)|.
double chr_series_consistency(const CircularArc& p, const std::vector<cx>& z_samples);

}  // namespace cusp
