#pragma once

#include <complex>
#include <vector>

namespace cusp {

// Weighted polynomial least squares for complex-valued samples over real
// abscissae. Solved by normal equations with column scaling; degree stays
// tiny (<= 3) in every caller, so a dense solve is plenty.
struct PolyFit {
    std::vector<std::complex<double>> coeff;  // coeff[j] multiplies x^j
    double rms = 0.0;                         // weighted RMS residual
    double intercept_se = 0.0;                // standard error of coeff[0]
};

// Throws SingularFit on a rank-deficient design matrix (duplicate abscissae
// or degree too high for the sample count).
PolyFit polyfit_weighted(const std::vector<double>& x,
                         const std::vector<std::complex<double>>& y,
                         const std::vector<double>& w, int degree);

// Real-valued convenience overload (imaginary parts zero).
PolyFit polyfit_weighted(const std::vector<double>& x,
                         const std::vector<double>& y,
                         const std::vector<double>& w, int degree);

}  // namespace cusp
