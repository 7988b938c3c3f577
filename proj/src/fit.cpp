#include "cusp/fit.hpp"

#include <cmath>
#include <cstddef>

#include "cusp/errors.hpp"

namespace cusp {

namespace {

// Gaussian elimination with partial pivoting on an (p x p) system in long
// double. Returns false when a pivot collapses.
bool solve_inplace(std::vector<std::vector<long double>>& m,
                   std::vector<std::vector<long double>>& rhs) {
    const std::size_t p = m.size();
    for (std::size_t col = 0; col < p; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < p; ++r)
            if (std::fabs((double)m[r][col]) > std::fabs((double)m[piv][col])) piv = r;
        if (m[piv][col] == 0.0L) return false;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = 0; r < p; ++r) {
            if (r == col) continue;
            long double f = m[r][col] / m[col][col];
            if (f == 0.0L) continue;
            for (std::size_t c = col; c < p; ++c) m[r][c] -= f * m[col][c];
            for (std::size_t c = 0; c < rhs[r].size(); ++c) rhs[r][c] -= f * rhs[col][c];
        }
    }
    for (std::size_t r = 0; r < p; ++r)
        for (std::size_t c = 0; c < rhs[r].size(); ++c) rhs[r][c] /= m[r][r];
    return true;
}

}  // namespace

PolyFit polyfit_weighted(const std::vector<double>& x,
                         const std::vector<std::complex<double>>& y,
                         const std::vector<double>& w, int degree) {
    const std::size_t n = x.size();
    const std::size_t p = (std::size_t)degree + 1;
    if (degree < 0 || y.size() != n || w.size() != n)
        throw SingularFit("inconsistent fit input sizes");
    if (n < p) throw SingularFit("fewer samples than coefficients");

    // Column scaling keeps the normal equations well conditioned when the
    // abscissae are small (powers of 1/log x span many magnitudes).
    std::vector<double> scale(p, 0.0);
    std::vector<std::vector<double>> basis(n, std::vector<double>(p));
    for (std::size_t i = 0; i < n; ++i) {
        double v = 1.0;
        for (std::size_t j = 0; j < p; ++j) {
            basis[i][j] = v;
            scale[j] = std::max(scale[j], std::fabs(v));
            v *= x[i];
        }
    }
    for (auto& s : scale)
        if (s == 0.0) s = 1.0;

    // Normal equations A^T W A c = A^T W y on the scaled basis; two real
    // right-hand sides carry the complex data.
    std::vector<std::vector<long double>> ata(p, std::vector<long double>(p, 0.0L));
    std::vector<std::vector<long double>> rhs(p, std::vector<long double>(2, 0.0L));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
            long double bj = basis[i][j] / scale[j];
            for (std::size_t k = j; k < p; ++k)
                ata[j][k] += (long double)w[i] * bj * (basis[i][k] / scale[k]);
            rhs[j][0] += (long double)w[i] * bj * y[i].real();
            rhs[j][1] += (long double)w[i] * bj * y[i].imag();
        }
    }
    for (std::size_t j = 0; j < p; ++j)
        for (std::size_t k = 0; k < j; ++k) ata[j][k] = ata[k][j];

    // The inverse of A^T W A (for the intercept variance) rides along as
    // extra right-hand-side columns.
    auto m = ata;
    for (std::size_t j = 0; j < p; ++j) {
        rhs[j].resize(2 + p, 0.0L);
        rhs[j][2 + j] = 1.0L;
    }
    if (!solve_inplace(m, rhs)) throw SingularFit();

    PolyFit out;
    out.coeff.resize(p);
    for (std::size_t j = 0; j < p; ++j)
        out.coeff[j] = std::complex<double>((double)(rhs[j][0] / scale[j]),
                                            (double)(rhs[j][1] / scale[j]));

    long double wrss = 0.0L, wsum = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        std::complex<double> fit = 0.0;
        double v = 1.0;
        for (std::size_t j = 0; j < p; ++j) {
            fit += out.coeff[j] * v;
            v *= x[i];
        }
        auto r = y[i] - fit;
        wrss += (long double)w[i] * (long double)std::norm(r);
        wsum += (long double)w[i];
    }
    out.rms = std::sqrt((double)(wrss / wsum));

    // Per-component residual variance; the intercept column of the inverse
    // is in scaled coordinates, undo the scaling squared.
    double dof = (double)n - (double)p;
    double sigma2 = dof > 0.0 ? (double)wrss / dof / 2.0 : 0.0;
    double inv00 = (double)rhs[0][2] / (scale[0] * scale[0]);
    out.intercept_se = std::sqrt(std::max(0.0, 2.0 * sigma2 * inv00));
    return out;
}

PolyFit polyfit_weighted(const std::vector<double>& x,
                         const std::vector<double>& y,
                         const std::vector<double>& w, int degree) {
    std::vector<std::complex<double>> yc(y.begin(), y.end());
    return polyfit_weighted(x, yc, w, degree);
}

}  // namespace cusp
