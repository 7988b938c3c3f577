#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "cusp/series.hpp"

namespace cusp {

// One traced boundary point: parameter x on the real axis and the image
// coordinates u + iv = f(x).
struct CurveSample {
    double x;
    double u;
    double v;
};

enum class CurveSide { negative_axis, positive_axis };

// Sampled boundary trace near the cusp. Negative-side traces carry the curve
// in the open half-plane (v > 0); positive-side traces stay on the real axis.
struct CuspCurve {
    std::vector<CurveSample> samples;
    CurveSide side = CurveSide::negative_axis;
};

struct MonotonicityReport {
    bool pass = false;
    double worst_margin = 0.0;  // smallest |quantity| that had to keep its sign
    double worst_x = 0.0;
    std::string detail;
};

struct TangencyEstimate {
    double order_d = 0.0;
    double coefficient = 0.0;
    std::pair<double, double> fit_window{0.0, 0.0};  // (|x| low, |x| high)
    double residual = 0.0;
};

// Traces f over the given abscissae (all one sign, sorted by |x| descending,
// inside the trust radius). Negative side evaluates with log x = log|x| + i*pi.
CuspCurve trace_boundary(const LogSeries& s, const std::vector<double>& xs);

// Checks the one-to-one parametrization claims on a sampled window:
// f' > 0 on positive windows; v > 0 and u' < 0 on negative windows.
MonotonicityReport monotonicity_check(const LogSeries& s, double x_min, double x_max,
                                      int n_samples);

// Cusp curvature from r_j = 2 v_j / u_j^2 extrapolated quadratically in
// s = 1/log|x|; returns the intercept.
double curvature_estimate(const CuspCurve& curve);

// Trace of the d-th power transform: each f(x) is mapped through w^(1/d)
// with the branch continuous from positive reals.
CuspCurve power_curve(const LogSeries& s, double d, const std::vector<double>& xs);

// Log-log fit of v against u: slope 1+d and coefficient a/(2d) of the
// tangency law v = (a/2d) u^(1+d).
TangencyEstimate tangency_order_estimate(const CuspCurve& curve);

// Log-spaced |x| grid from hi down to lo (descending magnitude), negated
// when side is the negative axis.
std::vector<double> log_spaced_abscissae(double lo, double hi, int n, CurveSide side);

// Segment-sweep test used by the simplicity checks and the oracle input
// validation. Vertices are consecutive polyline points.
bool polyline_self_intersects(const std::vector<std::complex<double>>& pts);

}  // namespace cusp
