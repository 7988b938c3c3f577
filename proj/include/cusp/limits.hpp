#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "cusp/branch.hpp"

namespace cusp {

using MapEvaluator = std::function<cx(cx)>;

// Path of half-plane points approaching 0, parametrized by strictly
// decreasing positive t. Rays use z = t e^{i theta}; vertical is theta=pi/2;
// custom paths carry their own points (t kept as |z|).
struct ApproachPath {
    enum class Kind { vertical, ray, custom } kind = Kind::vertical;
    double theta = M_PI_2;
    std::vector<double> t_values;
    std::vector<cx> points;

    static ApproachPath vertical(double t_min, double t_max, int n);
    static ApproachPath ray(double theta, double t_min, double t_max, int n);
    static ApproachPath custom(std::vector<cx> pts);

    cx point(std::size_t i) const;
    std::size_t size() const { return t_values.size(); }
};

// Ratio samples along a path with the extrapolated limit. fit_residual is
// the extrapolation uncertainty: the larger of the intercept standard error
// and the degree-3 vs degree-2 intercept shift.
struct LimitEstimate {
    std::vector<std::pair<double, cx>> ratios;  // (t, ratio)
    cx extrapolated{0.0, 0.0};
    double order_estimate = 0.0;  // leading correction exponent in 1/log t
    double fit_residual = 0.0;
};

// Weighted least squares of the samples against powers of 1/log t up to
// `degree` (weights 1/s^2, s = 1/log t); returns the constant term and the
// weighted RMS residual.
std::pair<cx, double> extrapolate(const std::vector<std::pair<double, cx>>& samples,
                                  int degree);

// Ratio g(z) / (-2pi / (a log|z|)) along the path, extrapolated to 0.
LimitEstimate ratio_theorem1(const MapEvaluator& map_eval, double a,
                             const ApproachPath& path);

// Ratio g(z) / (-2pi / (d a log|z|))^(1/d); for d > 1 the path must stay in
// arg z in (0, pi/d). d = 1 runs the identical theorem-1 code path.
LimitEstimate ratio_theorem2(const MapEvaluator& map_eval, double a, double d,
                             const ApproachPath& path);

// Same machinery against the reference normalizer -pi / (d a_kaiser log|z|).
LimitEstimate kaiser_ratio(const MapEvaluator& map_eval, double a_kaiser, double d,
                           const ApproachPath& path);

// g(z) = f^(1/d)(z^d) built from a series evaluator; the branch of w^(1/d)
// fixes 1^(1/d) = 1.
MapEvaluator power_transform(MapEvaluator f, double d);

}  // namespace cusp
