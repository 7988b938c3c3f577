#include "cusp/limits.hpp"

#include <cmath>
#include <string>

#include "cusp/errors.hpp"
#include "cusp/fit.hpp"

namespace cusp {

namespace {

std::vector<double> descending_log_grid(double t_min, double t_max, int n) {
    if (!(t_min > 0.0) || !(t_max > t_min)) throw OutOfDomain("need 0 < t_min < t_max");
    if (n < 2) throw InsufficientSamples("need at least two path points");
    std::vector<double> ts((std::size_t)n);
    double lo = std::log(t_min), hi = std::log(t_max);
    for (int i = 0; i < n; ++i)
        ts[(std::size_t)i] = std::exp(hi + (lo - hi) * (double)i / (double)(n - 1));
    return ts;
}

}  // namespace

ApproachPath ApproachPath::vertical(double t_min, double t_max, int n) {
    ApproachPath p;
    p.kind = Kind::vertical;
    p.theta = M_PI_2;
    p.t_values = descending_log_grid(t_min, t_max, n);
    return p;
}

ApproachPath ApproachPath::ray(double theta, double t_min, double t_max, int n) {
    if (!(theta > 0.0) || !(theta < M_PI))
        throw OutOfDomain("ray angle must lie in (0, pi)");
    ApproachPath p;
    p.kind = Kind::ray;
    p.theta = theta;
    p.t_values = descending_log_grid(t_min, t_max, n);
    return p;
}

ApproachPath ApproachPath::custom(std::vector<cx> pts) {
    ApproachPath p;
    p.kind = Kind::custom;
    p.points = std::move(pts);
    p.t_values.reserve(p.points.size());
    double prev = std::numeric_limits<double>::infinity();
    for (cx z : p.points) {
        if (!(z.imag() > 0.0)) throw OutOfDomain("custom path point not in the open half-plane");
        double t = std::abs(z);
        if (!(t < prev)) throw OutOfDomain("custom path |z| must strictly decrease");
        prev = t;
        p.t_values.push_back(t);
    }
    return p;
}

cx ApproachPath::point(std::size_t i) const {
    if (i >= t_values.size()) throw IndexOutOfRange("path point index");
    if (kind == Kind::custom) return points[i];
    return std::polar(t_values[i], theta);
}

std::pair<cx, double> extrapolate(const std::vector<std::pair<double, cx>>& samples,
                                  int degree) {
    if ((int)samples.size() < degree + 2)
        throw SingularFit("need at least degree + 2 samples");
    std::vector<double> ss, w;
    std::vector<cx> ys;
    for (const auto& [t, y] : samples) {
        if (!(t > 0.0) || t == 1.0) throw SingularFit("t must be positive and != 1");
        double s = 1.0 / std::log(t);
        ss.push_back(s);
        ys.push_back(y);
        w.push_back(1.0 / (s * s));
    }
    auto fit = polyfit_weighted(ss, ys, w, degree);
    return {fit.coeff[0], fit.rms};
}

namespace {

LimitEstimate ratio_against(const MapEvaluator& map_eval, const ApproachPath& path,
                            const std::function<double(double)>& normalizer) {
    if (path.size() < 5) throw InsufficientSamples("need at least five path points");
    LimitEstimate est;
    est.ratios.reserve(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
        cx z = path.point(i);
        cx g;
        try {
            g = map_eval(z);
        } catch (const MapError& e) {
            throw EvaluatorFailure("evaluator failed at z = (" + std::to_string(z.real()) +
                                   ", " + std::to_string(z.imag()) + "): " + e.what());
        }
        est.ratios.emplace_back(path.t_values[i], g / normalizer(std::abs(z)));
    }

    std::vector<double> ss, w;
    std::vector<cx> ys;
    for (const auto& [t, y] : est.ratios) {
        double s = 1.0 / std::log(t);
        ss.push_back(s);
        ys.push_back(y);
        w.push_back(1.0 / (s * s));
    }
    auto fit3 = polyfit_weighted(ss, ys, w, 3);
    auto fit2 = polyfit_weighted(ss, ys, w, 2);
    est.extrapolated = fit3.coeff[0];
    est.fit_residual = std::max(fit3.intercept_se, std::abs(fit3.coeff[0] - fit2.coeff[0]));

    // Leading correction exponent: slope of log|ratio - limit| vs log|s|,
    // ignoring samples already at rounding level.
    std::vector<double> lx, ly, lw;
    for (std::size_t i = 0; i < ss.size(); ++i) {
        double dev = std::abs(ys[i] - est.extrapolated);
        if (dev > 1e-13 * std::abs(est.extrapolated)) {
            lx.push_back(std::log(std::fabs(ss[i])));
            ly.push_back(std::log(dev));
            lw.push_back(1.0);
        }
    }
    if (lx.size() >= 3) {
        auto ofit = polyfit_weighted(lx, ly, lw, 1);
        est.order_estimate = ofit.coeff[1].real();
    }
    return est;
}

}  // namespace

LimitEstimate ratio_theorem1(const MapEvaluator& map_eval, double a,
                             const ApproachPath& path) {
    if (!(a > 0.0)) throw OutOfDomain("scale a must be positive");
    return ratio_against(map_eval, path, [a](double t) { return -2.0 * M_PI / (a * std::log(t)); });
}

LimitEstimate ratio_theorem2(const MapEvaluator& map_eval, double a, double d,
                             const ApproachPath& path) {
    if (!(a > 0.0) || !(d > 0.0)) throw OutOfDomain("a and d must be positive");
    if (d == 1.0) return ratio_theorem1(map_eval, a, path);  // bit-identical reduction
    if (d > 1.0) {
        double sector = M_PI / d;
        for (std::size_t i = 0; i < path.size(); ++i) {
            double th = branch_arg(path.point(i));
            if (!(th > 0.0) || !(th < sector))
                throw PathOutsideSector("arg z must stay in (0, pi/d) for d > 1");
        }
    }
    double inv_d = 1.0 / d;
    return ratio_against(map_eval, path, [a, d, inv_d](double t) {
        // The normalizer is positive real for t < 1, so the d-th root is the
        // plain real one (branch 1^(1/d) = 1).
        return std::pow(-2.0 * M_PI / (d * a * std::log(t)), inv_d);
    });
}

LimitEstimate kaiser_ratio(const MapEvaluator& map_eval, double a_kaiser, double d,
                           const ApproachPath& path) {
    if (!(a_kaiser > 0.0) || !(d > 0.0)) throw OutOfDomain("a_kaiser and d must be positive");
    double inv_d = 1.0 / d;
    return ratio_against(map_eval, path, [a_kaiser, d, inv_d](double t) {
        return std::pow(-M_PI / (d * a_kaiser * std::log(t)), inv_d);
    });
}

MapEvaluator power_transform(MapEvaluator f, double d) {
    if (!(d > 0.0) || !std::isfinite(d)) throw OutOfDomain("power order d must be positive");
    return [f = std::move(f), d](cx z) {
        cx zd = std::exp(d * branch_log(z));
        cx w = f(zd);
        if (w == cx(0.0, 0.0)) throw BranchAmbiguity("w^(1/d) at w = 0");
        return std::exp(branch_log(w) / d);
    };
}

}  // namespace cusp
