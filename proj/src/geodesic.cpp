#include "cusp/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cusp/curve.hpp"
#include "cusp/errors.hpp"

namespace cusp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Near-cusp polyline depth: the first arc sample sits at |w| ~ 2pi/600.
constexpr double kDepthNear = 600.0;
// Far-side cut for the closed-circle case (alpha = 2pi) and a floor for
// almost-closed arcs; see arc_polyline in the header.
constexpr double kDepthFarCut = -10.0;

double real_sign(double y) { return std::signbit(y) ? -1.0 : 1.0; }

// Forward push of an interior point through one stage (Moebius, then unzip
// on the branch with nonnegative imaginary part).
cx push_forward(const GeodesicStage& st, cx z) {
    if (!st.vertical) z = z * st.b / (st.b - z);
    cx v = std::sqrt(z * z + st.h * st.h);
    return v.imag() < 0.0 ? -v : v;
}

// Forward push of a boundary point. Signed zeros select the slit side at the
// base; the point at infinity passes through the Moebius part as -b.
double push_forward_real(const GeodesicStage& st, double y) {
    if (!st.vertical) {
        if (std::isinf(y))
            y = -st.b;
        else if (y == st.b)
            y = kInf;
        else
            y = y * st.b / (st.b - y);
    }
    if (std::isinf(y)) return y;
    return real_sign(y) * std::sqrt(y * y + st.h * st.h);
}

cx apply_normalization(const GeodesicMap& m, cx z) {
    if (!m.normalized) return z;
    if (std::isinf(m.p_inf)) return m.lambda * z + m.p_plus;
    return (m.p_inf * m.lambda * z + m.p_plus) / (m.lambda * z + 1.0);
}

double apply_normalization_real(const GeodesicMap& m, double y) {
    if (!m.normalized) return y;
    if (std::isinf(m.p_inf)) return m.lambda * y + m.p_plus;
    if (std::isinf(y)) return m.p_inf;
    double den = m.lambda * y + 1.0;
    if (den == 0.0) return kInf;
    return (m.p_inf * m.lambda * y + m.p_plus) / den;
}

}  // namespace

GeodesicMap fit_geodesic(const SlitPolyline& slit) {
    const auto& vs = slit.vertices;
    if (vs.size() < 2) throw DegenerateSegment("need at least two vertices");
    if (vs.front() != cx(0.0, 0.0)) throw OutOfDomain("polyline must start at the origin");
    for (std::size_t i = 1; i < vs.size(); ++i) {
        if (!(vs[i].imag() > 0.0))
            throw OutOfDomain("polyline vertices after the origin need im > 0");
        if (vs[i] == vs[i - 1]) throw DegenerateSegment();
    }
    if (polyline_self_intersects(vs)) throw SelfIntersectingInput();

    GeodesicMap m;
    const std::size_t n = vs.size() - 1;
    m.stages.reserve(n);
    m.tip_preimage.assign(n, 0.0);

    std::vector<cx> rest(vs.begin() + 1, vs.end());  // current coordinates
    double pp = 0.0, pm = -0.0, pinf = kInf;

    for (std::size_t k = 0; k < n; ++k) {
        cx a = rest[k];
        if (!(a.imag() > 0.0))
            throw SelfIntersectingInput("segment folded onto the boundary during fitting");
        GeodesicStage st;
        st.vertical = std::fabs(a.real()) <= 1e-14 * std::abs(a);
        st.b = st.vertical ? 0.0 : std::norm(a) / a.real();
        st.h = std::norm(a) / a.imag();  // = im(Moebius(a)) exactly
        m.stages.push_back(st);

        for (std::size_t j = k + 1; j < n; ++j) rest[j] = push_forward(st, rest[j]);
        pp = push_forward_real(st, pp);
        pm = push_forward_real(st, pm);
        pinf = push_forward_real(st, pinf);
        for (std::size_t j = 0; j < k; ++j)
            m.tip_preimage[j] = push_forward_real(st, m.tip_preimage[j]);
        m.tip_preimage[k] = 0.0;  // the just-opened tip lands at the origin
    }

    if (!std::isfinite(pp) || !std::isfinite(pm))
        throw MapError("slit prevertex tracking overflowed; refine or shorten the polyline");
    m.p_plus = pp;
    m.p_minus = pm;
    m.p_inf = pinf;
    return m;
}

namespace {

// Inverse of one stage on the complex path: factored square root on the
// nonnegative-imaginary branch, then the inverse Moebius.
cx pull_back(const GeodesicStage& st, cx w) {
    cx v = std::sqrt(w - st.h) * std::sqrt(w + st.h);
    if (v.imag() < 0.0) v = -v;
    if (!st.vertical) v = v * st.b / (st.b + v);
    return v;
}

}  // namespace

cx eval_geodesic(const GeodesicMap& m, cx z) {
    if (!in_closed_half_plane(z)) throw OutOfDomain("evaluation below the real axis");

    if (z.imag() <= 0.0 || m.stages.empty()) {
        // Boundary evaluation runs on the real line until (and unless) the
        // point enters a slit interval, then continues on the complex path.
        if (z.imag() <= 0.0) {
            double y = apply_normalization_real(m, z.real());
            if (y == m.p_plus || y == m.p_minus)
                throw SingularPoint("evaluation at a slit-base prevertex");
            cx w;
            bool real_path = true;
            for (std::size_t k = m.stages.size(); k-- > 0;) {
                const auto& st = m.stages[k];
                if (real_path) {
                    if (std::isinf(y)) {
                        if (st.vertical) continue;
                        y = st.b;
                        continue;
                    }
                    double ay = std::fabs(y);
                    if (ay >= st.h) {
                        y = real_sign(y) * std::sqrt((ay - st.h) * (ay + st.h));
                        if (!st.vertical) {
                            if (y == -st.b) throw SingularPoint("evaluation at a stage pole");
                            y = y * st.b / (st.b + y);
                        }
                    } else {
                        // Enters the two-sided slit: lift off the axis.
                        w = cx(0.0, std::sqrt((st.h - y) * (st.h + y)));
                        if (!st.vertical) w = w * st.b / (st.b + w);
                        real_path = false;
                    }
                } else {
                    w = pull_back(st, w);
                }
            }
            return real_path ? cx(y, 0.0) : w;
        }
        return apply_normalization(m, z);
    }

    cx w = apply_normalization(m, z);
    for (std::size_t k = m.stages.size(); k-- > 0;) w = pull_back(m.stages[k], w);
    return w;
}

double calibrate(GeodesicMap& m, cx z_ref, cx w_ref) {
    double sigma = 1.0;
    if (!std::isinf(m.p_inf)) sigma = m.p_inf >= m.p_plus ? 1.0 : -1.0;

    auto objective = [&](double log_lam) {
        m.normalized = true;
        m.lambda = sigma * std::pow(10.0, log_lam);
        return std::abs(eval_geodesic(m, z_ref) - w_ref);
    };

    // Coarse bracket over 40 decades of scale, then golden-section refine.
    double best_s = 0.0, best_v = kInf;
    const int coarse = 161;
    for (int i = 0; i < coarse; ++i) {
        double s = -20.0 + 40.0 * (double)i / (double)(coarse - 1);
        double v = objective(s);
        if (v < best_v) {
            best_v = v;
            best_s = s;
        }
    }
    double lo = best_s - 40.0 / (coarse - 1), hi = best_s + 40.0 / (coarse - 1);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
    double fc = objective(c), fd = objective(d);
    for (int it = 0; it < 120 && hi - lo > 1e-13; ++it) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = objective(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = objective(d);
        }
    }
    double mid = 0.5 * (lo + hi);
    double res = objective(mid);
    if (res > best_v) {  // golden section assumed unimodality; keep the best seen
        res = objective(best_s);
    }
    return res;
}

double arc_depth(const CircularArc& p, double x) {
    if (!(x > -p.alpha) || !(x < 0.0)) throw OutOfDomain("depth needs x in (-alpha, 0)");
    return std::log((x + p.alpha) / -x) + (2.0 * M_PI - p.alpha) / (x + p.alpha);
}

namespace {

// Arc tip: minimizer of the depth over y = x + alpha in (0, alpha) by
// golden section (the two cusp channels force a single interior minimum).
double tip_y(const CircularArc& p) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = p.alpha * 1e-12, hi = p.alpha * (1.0 - 1e-12);
    auto depth_y = [&](double y) {
        return std::log(y / (p.alpha - y)) + (2.0 * M_PI - p.alpha) / y;
    };
    double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
    double fc = depth_y(c), fd = depth_y(d);
    for (int it = 0; it < 300 && hi - lo > 1e-15 * p.alpha; ++it) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = depth_y(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = depth_y(d);
        }
    }
    return 0.5 * (lo + hi);
}

bool full_circle(const CircularArc& p) { return std::fabs(p.alpha - 2.0 * M_PI) < 1e-12; }

}  // namespace

double x_from_depth(const CircularArc& p, double A) {
    if (full_circle(p)) {
        // A = log((x+2pi)/|x|) solves in closed form on the whole circle.
        if (A <= 0.0) return -2.0 * M_PI / (1.0 + std::exp(A));
        double e = std::exp(-A);
        return -2.0 * M_PI * e / (1.0 + e);
    }
    double x_tip = tip_y(p) - p.alpha;
    double a_tip = arc_depth(p, x_tip);
    if (A < a_tip) throw OutOfDomain("depth below the arc tip");
    // Bisection in u = log|x|: depth decreases from +inf to the tip value as
    // |x| grows along the near branch.
    double u_lo = -700.0, u_hi = std::log(-x_tip);
    if (arc_depth(p, -std::exp(u_hi)) > A) return x_tip;  // rounding at the tip
    for (int it = 0; it < 200; ++it) {
        double u = 0.5 * (u_lo + u_hi);
        if (arc_depth(p, -std::exp(u)) > A)
            u_lo = u;
        else
            u_hi = u;
    }
    return -std::exp(0.5 * (u_lo + u_hi));
}

SlitPolyline arc_polyline(const CircularArc& p, int n_vertices) {
    if (n_vertices < 2) throw DegenerateSegment("need at least two vertices");
    double a_end;
    if (full_circle(p)) {
        a_end = kDepthFarCut;
    } else {
        a_end = std::max(arc_depth(p, tip_y(p) - p.alpha), kDepthFarCut);
    }
    // Uniform steps in psi = arctan(A/pi) place the vertices uniformly in
    // arc angle on the circle (the arc point is 2pi/(A - i pi)).
    double psi_near = std::atan(kDepthNear / M_PI);
    double psi_end = std::atan(a_end / M_PI);
    SlitPolyline slit;
    slit.vertices.reserve((std::size_t)n_vertices);
    slit.vertices.push_back(cx(0.0, 0.0));
    const int steps = std::max(1, n_vertices - 2);
    for (int i = 0; i < n_vertices - 1; ++i) {
        double psi = psi_near + (psi_end - psi_near) * (double)i / (double)steps;
        double A = M_PI * std::tan(psi);
        double x = x_from_depth(p, A);
        slit.vertices.push_back(chr_eval(p, cx(x, 0.0)));
    }
    return slit;
}

std::vector<cx> default_compare_points() {
    std::vector<cx> pts;
    for (int i = 0; i < 6; ++i) {
        double r = std::pow(10.0, -6.0 + (double)i);
        for (double th : {M_PI / 6.0, M_PI_2, 5.0 * M_PI / 6.0}) pts.push_back(std::polar(r, th));
    }
    return pts;
}

double compare_with_explicit(const CircularArc& p, int n_vertices,
                             const std::vector<cx>& test_points) {
    if (test_points.empty()) throw EmptyGrid("no comparison points");
    for (cx z : test_points) {
        double r = std::abs(z);
        if (!(z.imag() > 0.0) || r < 1e-6 * (1.0 - 1e-9) || r > 1e-1 * (1.0 + 1e-9))
            throw OutOfDomain("comparison points must have im > 0 and |z| in [1e-6, 1e-1]");
    }
    GeodesicMap m = fit_geodesic(arc_polyline(p, n_vertices));
    calibrate(m, cx(0.0, 1.0), chr_eval(p, cx(0.0, 1.0)));
    double worst = 0.0;
    for (cx z : test_points) {
        cx ref = chr_eval(p, z);
        worst = std::max(worst, std::abs(eval_geodesic(m, z) - ref) / std::abs(ref));
    }
    return worst;
}

}  // namespace cusp
