#include "cusp/slitmap.hpp"

#include <cmath>

#include "cusp/errors.hpp"

namespace cusp {

namespace {

void require_alpha(const CircularArc& p) {
    if (!(p.alpha > 0.0) || !std::isfinite(p.alpha))
        throw NonpositiveRadius("alpha must be a positive real");
}

}  // namespace

cx chr_eval(const CircularArc& p, cx z) {
    require_alpha(p);
    if (z == cx(0.0, 0.0)) throw ZeroArgument("arc map at 0");
    if (z == cx(-p.alpha, 0.0)) throw PoleArgument("arc map at -alpha");
    if (!in_closed_half_plane(z)) throw OutOfDomain("arc map below the real axis");
    // log((z+alpha)/z) must be split into the two branch-correct logs: the
    // quotient can cross the cut even when both factors stay on it.
    cx inv = (branch_log(z + p.alpha) - branch_log(z) +
              (2.0 * M_PI - p.alpha) / (z + p.alpha)) /
             (2.0 * M_PI);
    return 1.0 / inv;
}

cx chr_eval_logz(const CircularArc& p, cx L) {
    require_alpha(p);
    if (!std::isfinite(L.real()) || !std::isfinite(L.imag()))
        throw OutOfDomain("log z must be finite");
    // z = e^L; below the double underflow threshold z + alpha collapses to
    // alpha, which is exactly the deep-cusp regime this entry point serves.
    cx z = L.real() < -700.0 ? cx(0.0, 0.0) : std::exp(L);
    cx inv = (branch_log(z + p.alpha) - L + (2.0 * M_PI - p.alpha) / (z + p.alpha)) /
             (2.0 * M_PI);
    return 1.0 / inv;
}

LogSeries chr_expand(const CircularArc& p, int n_max, int k_max) {
    require_alpha(p);
    if (n_max < 1 || k_max < 0) throw IndexOutOfRange("n_max >= 1 and k_max >= 0 required");
    const double alpha = p.alpha;
    const std::size_t kk = (std::size_t)k_max + 1;

    // Taylor rows about 0:  log(z+alpha) = log alpha + sum (-1)^(k+1) z^k/(k alpha^k),
    // (2pi-alpha)/(z+alpha) = (2pi-alpha) sum (-1)^k z^k / alpha^(k+1).
    std::vector<double> h(kk, 0.0);
    h[0] = std::log(alpha) + (2.0 * M_PI - alpha) / alpha;
    double apow = alpha;
    for (int k = 1; k <= k_max; ++k) {
        double sign = (k % 2 == 0) ? -1.0 : 1.0;
        h[(std::size_t)k] = sign / ((double)k * apow) - sign * (2.0 * M_PI - alpha) / (apow * alpha);
        apow *= alpha;
    }

    LogSeries s = LogSeries::zeros(1.0, n_max, k_max);
    std::vector<double> pw = h;  // h^n, truncated
    s.c[0] = pw;
    for (int n = 2; n <= n_max; ++n) {
        std::vector<double> nx(kk, 0.0);
        for (std::size_t i = 0; i < kk; ++i) {
            if (pw[i] == 0.0) continue;
            for (std::size_t j = 0; i + j < kk; ++j) nx[i + j] += pw[i] * h[j];
        }
        pw = std::move(nx);
        s.c[(std::size_t)(n - 1)] = pw;
    }
    return s;
}

double chr_series_consistency(const CircularArc& p, const std::vector<cx>& z_samples) {
    if (z_samples.empty()) throw EmptyGrid("no consistency samples");
    LogSeries s = chr_expand(p, 8, 16);
    double worst = 0.0;
    for (cx z : z_samples) {
        cx closed = chr_eval(p, z);
        cx series = f_eval(s, z);
        worst = std::max(worst, std::abs(series - closed) / std::abs(closed));
    }
    return worst;
}

}  // namespace cusp
