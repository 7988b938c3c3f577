#include "cusp/curve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cusp/errors.hpp"
#include "cusp/fit.hpp"

namespace cusp {

std::vector<double> log_spaced_abscissae(double lo, double hi, int n, CurveSide side) {
    if (!(lo > 0.0) || !(hi > lo)) throw NonpositiveRadius("need 0 < lo < hi");
    if (n < 2) throw InsufficientSamples("need at least two abscissae");
    std::vector<double> xs((std::size_t)n);
    double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i) {
        double t = (double)i / (double)(n - 1);
        double mag = std::exp(lhi + t * (llo - lhi));  // descending |x|
        xs[(std::size_t)i] = side == CurveSide::negative_axis ? -mag : mag;
    }
    return xs;
}

CuspCurve trace_boundary(const LogSeries& s, const std::vector<double>& xs) {
    if (xs.empty()) throw EmptyGrid("no trace abscissae");
    bool neg = xs.front() < 0.0;
    for (double x : xs) {
        if (x == 0.0 || (x < 0.0) != neg) throw MixedSigns();
    }
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (std::fabs(xs[i]) >= std::fabs(xs[i - 1]))
            throw MapError("trace abscissae must be sorted by |x| descending");
    CuspCurve curve;
    curve.side = neg ? CurveSide::negative_axis : CurveSide::positive_axis;
    curve.samples.reserve(xs.size());
    for (double x : xs) {
        cx w = f_eval(s, cx(x, 0.0));
        curve.samples.push_back({x, w.real(), w.imag()});
    }
    return curve;
}

MonotonicityReport monotonicity_check(const LogSeries& s, double x_min, double x_max,
                                      int n_samples) {
    if (n_samples < 2) throw InsufficientSamples();
    if (!(x_min < x_max) || x_min == 0.0 || x_max == 0.0 || (x_min < 0.0) != (x_max < 0.0))
        throw MixedSigns("window must lie on one side of 0");

    bool neg = x_max < 0.0;
    double lo = neg ? -x_max : x_min;
    double hi = neg ? -x_min : x_max;
    auto xs = log_spaced_abscissae(lo, hi, n_samples,
                                   neg ? CurveSide::negative_axis : CurveSide::positive_axis);

    MonotonicityReport rep;
    rep.pass = true;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    for (double x : xs) {
        cx d = f_real_deriv(s, x);
        if (!neg) {
            double fp = d.real();
            if (fp < rep.worst_margin) {
                rep.worst_margin = fp;
                rep.worst_x = x;
            }
            if (fp <= 0.0) rep.pass = false;
        } else {
            double v = f_eval(s, cx(x, 0.0)).imag();
            double up = d.real();
            double margin = std::min(v, -up);
            if (margin < rep.worst_margin) {
                rep.worst_margin = margin;
                rep.worst_x = x;
            }
            if (v <= 0.0 || up >= 0.0) rep.pass = false;
        }
    }
    rep.detail = neg ? "v > 0 and u' < 0 on the negative side" : "f' > 0 on the positive side";
    return rep;
}

namespace {

void require_negative_trace(const CuspCurve& curve, std::size_t min_samples) {
    if (curve.side != CurveSide::negative_axis)
        throw MixedSigns("estimator needs a negative-side trace");
    if (curve.samples.size() < min_samples) throw InsufficientSamples();
}

}  // namespace

double curvature_estimate(const CuspCurve& curve) {
    require_negative_trace(curve, 8);
    double lo = std::fabs(curve.samples.front().x), hi = lo;
    std::vector<double> ss, w;
    std::vector<double> r;
    for (const auto& p : curve.samples) {
        double ax = std::fabs(p.x);
        lo = std::min(lo, ax);
        hi = std::max(hi, ax);
        if (p.u == 0.0) throw NonpositiveCoordinates("u = 0 in curvature window");
        double s = 1.0 / std::log(ax);
        ss.push_back(s);
        r.push_back(2.0 * p.v / (p.u * p.u));
        w.push_back(1.0 / (s * s));
    }
    if (hi / lo < 1e4) throw InsufficientSamples("curvature window under four decades");
    auto fit = polyfit_weighted(ss, r, w, 2);
    return fit.coeff[0].real();
}

CuspCurve power_curve(const LogSeries& s, double d, const std::vector<double>& xs) {
    if (!(d > 0.0) || !std::isfinite(d)) throw OutOfDomain("power order d must be positive");
    CuspCurve base = trace_boundary(s, xs);
    CuspCurve out;
    out.side = base.side;
    out.samples.reserve(base.samples.size());
    for (const auto& p : base.samples) {
        cx w(p.u, p.v);
        if (w == cx(0.0, 0.0)) throw BranchAmbiguity("w^(1/d) at w = 0");
        cx root = std::exp(branch_log(w) / d);  // 1^(1/d) = 1 on this branch
        out.samples.push_back({p.x, root.real(), root.imag()});
    }
    return out;
}

TangencyEstimate tangency_order_estimate(const CuspCurve& curve) {
    require_negative_trace(curve, 8);
    TangencyEstimate est;
    double lo = std::fabs(curve.samples.front().x), hi = lo;
    std::vector<double> lu, lv, w;
    for (const auto& p : curve.samples) {
        if (p.u <= 0.0 || p.v <= 0.0)
            throw NonpositiveCoordinates("tangency fit needs u > 0 and v > 0");
        double ax = std::fabs(p.x);
        lo = std::min(lo, ax);
        hi = std::max(hi, ax);
        double s = 1.0 / std::log(ax);
        lu.push_back(std::log(p.u));
        lv.push_back(std::log(p.v));
        w.push_back(1.0 / (s * s));  // deeper samples carry the asymptotic signal
    }
    auto fit = polyfit_weighted(lu, lv, w, 1);
    est.order_d = fit.coeff[1].real() - 1.0;
    est.coefficient = std::exp(fit.coeff[0].real());
    est.fit_window = {lo, hi};
    est.residual = fit.rms;
    return est;
}

namespace {

// Orientation sign of the triangle (a, b, c); 0 when collinear.
int orient(std::complex<double> a, std::complex<double> b, std::complex<double> c) {
    double cr = (b.real() - a.real()) * (c.imag() - a.imag()) -
                (b.imag() - a.imag()) * (c.real() - a.real());
    double scale = std::abs(b - a) * std::abs(c - a);
    if (std::fabs(cr) <= 1e-14 * scale) return 0;
    return cr > 0.0 ? 1 : -1;
}

bool on_segment(std::complex<double> a, std::complex<double> b, std::complex<double> p) {
    return std::min(a.real(), b.real()) <= p.real() && p.real() <= std::max(a.real(), b.real()) &&
           std::min(a.imag(), b.imag()) <= p.imag() && p.imag() <= std::max(a.imag(), b.imag());
}

bool segments_cross(std::complex<double> a, std::complex<double> b,
                    std::complex<double> c, std::complex<double> d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

}  // namespace

bool polyline_self_intersects(const std::vector<std::complex<double>>& pts) {
    const std::size_t n = pts.size();
    if (n < 3) return false;
    // Adjacent segments share an endpoint by construction, so the inner loop
    // starts two segments ahead.
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 2; j + 1 < n; ++j)
            if (segments_cross(pts[i], pts[i + 1], pts[j], pts[j + 1])) return true;
    return false;
}

}  // namespace cusp
