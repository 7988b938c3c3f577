#pragma once

#include <complex>
#include <limits>
#include <vector>

#include "cusp/branch.hpp"

namespace cusp {

// Truncated coefficient data for maps of the form
//   f(z) = (-2*pi / (a*log z)) * (1 + sum_{n>=1} Phi_n(z) / log^n z),
//   Phi_n(z) = sum_{k>=0} c_nk z^k,
// with a > 0 and real c_nk. Rows are n = 1..n_max, columns k = 0..k_max.
struct LogSeries {
    double a = 1.0;
    int n_max = 1;
    int k_max = 0;
    std::vector<std::vector<double>> c;  // c[n-1][k]

    // Largest |z| at which evaluation is trusted; callers set it from an
    // admissibility report. Infinite until assigned.
    double trust_radius = std::numeric_limits<double>::infinity();

    static LogSeries zeros(double a, int n_max, int k_max);
    double at(int n, int k) const;         // c_nk, throws IndexOutOfRange
    void set(int n, int k, double value);  // throws IndexOutOfRange
};

struct ConditionVerdict {
    bool pass = false;
    double bound = 0.0;
};

// Numeric verdicts for the four admissibility conditions on a truncation:
// (i)  coefficient growth |c_nk|^(1/k) stays geometric in k (fitted rate
//      recorded as bound), (ii) sup |Phi_n(z)|^(1/n) over the grid,
// (iii) sup |Phi_n'(z)|^(1/n) over the grid, (iv) c_10 != 0.
struct AdmissibilityReport {
    ConditionVerdict cond_i;    // bound = fitted geometric rate M
    ConditionVerdict cond_ii;   // bound = sup over grid and n
    ConditionVerdict cond_iii;  // bound = sup over grid and n
    ConditionVerdict cond_iv;   // bound = |c_10|
    double radius = 0.0;        // grid radius the sups were taken over
    double conv_radius = 0.0;   // |z| below which the n-series is safely geometric
    bool all_pass() const
    {
        return cond_i.pass && cond_ii.pass && cond_iii.pass && cond_iv.pass;
    }
};

struct GridSpec {
    int n_radial = 24;
    int n_angular = 33;  // includes both real half-axes (theta = 0 and pi)
};

// Tolerance separating a structural zero of c_10 from rounding noise.
inline constexpr double kC10Tol = 1e-10;

// Phi_n(z) by Horner. n is 1-based; n outside [1, n_max] throws IndexOutOfRange.
cx phi_eval(const LogSeries& s, int n, cx z);

// Phi_n'(z) = sum_k k c_nk z^(k-1), same conventions.
cx phi_deriv_eval(const LogSeries& s, int n, cx z);

// Evaluates f(z). Requires z != 0, im(z) >= 0, |z| < trust_radius.
// When tail_bound is given it receives a geometric estimate of the dropped
// n-tail relative to the returned value.
cx f_eval(const LogSeries& s, cx z, double* tail_bound = nullptr);

// Derivative along the real axis by the closed formula
//   f'(x) = (2*pi/(a log^2 x)) [ 1/x + sum (n+1) Phi_n / (x log^n x)
//                                    - sum Phi_n' / log^(n-1) x ].
// For x > 0 the value is real (imaginary part is returned as rounding noise);
// for x < 0, log x = log|x| + i*pi and the real/imaginary parts are the
// boundary-trace derivatives (u'(x), v'(x)).
cx f_real_deriv(const LogSeries& s, double x);

// Evaluates the four admissibility conditions on a half-disk grid of the
// given radius and estimates the convergence radius of the n-series.
AdmissibilityReport check_admissibility(const LogSeries& s, double radius,
                                        const GridSpec& grid = {});

}  // namespace cusp
