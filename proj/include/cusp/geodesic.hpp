#pragma once

#include <complex>
#include <vector>

#include "cusp/branch.hpp"
#include "cusp/slitmap.hpp"

namespace cusp {

// Discretized slit: vertices in the closed upper half-plane, first vertex at
// the origin (the cusp point), the rest strictly above the real axis.
struct SlitPolyline {
    std::vector<cx> vertices;
};

// One elementary map of the geodesic composition: a Moebius rotation
// z -> z b / (b - z) followed by the square-root unzip sqrt(z^2 + h^2).
// Vertical stages (segment orthogonal to R) skip the Moebius part.
struct GeodesicStage {
    double b = 0.0;
    double h = 0.0;
    bool vertical = false;
};

// Composition of stages plus prevertex bookkeeping in the final unzipped
// plane. The slit is two-sided: p_minus / p_plus are the left and right
// preimages of the slit base, p_inf the preimage of the boundary point at
// infinity. tip_preimage[j] locates vertex j+1 of the input polyline.
// The normalization T(z) = (p_inf lambda z + p_plus) / (lambda z + 1) sends
// 0 to the base and infinity to infinity; lambda scales the half-plane and
// is pinned by matching a reference interior point. Until calibrate() the
// map evaluates raw (T = identity).
struct GeodesicMap {
    std::vector<GeodesicStage> stages;
    double p_plus = 0.0;
    double p_minus = 0.0;
    double p_inf = 0.0;
    std::vector<double> tip_preimage;
    bool normalized = false;
    double lambda = 1.0;
};

// Fits the stage composition interpolating the polyline vertices.
// Throws DegenerateSegment on zero-length segments and
// SelfIntersectingInput when the polyline crosses itself.
GeodesicMap fit_geodesic(const SlitPolyline& slit);

// Applies the normalization (when calibrated) and the inverse stages;
// half-plane points map into the slit domain, real points onto its boundary.
// Throws SingularPoint when z lands exactly on a tracked prevertex.
cx eval_geodesic(const GeodesicMap& m, cx z);

// Pins lambda so that eval_geodesic(m, z_ref) reproduces w_ref; returns the
// residual |g(z_ref) - w_ref| at the optimum.
double calibrate(GeodesicMap& m, cx z_ref, cx w_ref);

// Boundary samples of the circular-arc map as a slit polyline with
// n_vertices vertices (origin included). Vertices are uniformly spaced in
// the arc angle; the trace runs from depth parameter A ~ 600 near the cusp
// down the far side. For alpha = 2pi the arc closes into a full circle and
// the far tail is cut at A = -10: the missing piece sits deep in the far
// cusp channel where its influence on the test region decays exponentially,
// while resolving it would blow up the unzipped-plane scale past double
// precision (the interior pocket crowds the coordinates out).
SlitPolyline arc_polyline(const CircularArc& p, int n_vertices);

// Fits the polyline for the given alpha, calibrates against chr_eval at
// z = i, and returns the max relative deviation over the test points
// (open half-plane, |z| in [1e-6, 1e-1]).
double compare_with_explicit(const CircularArc& p, int n_vertices,
                             const std::vector<cx>& test_points);

// The default comparison grid: |z| log-spaced over [1e-6, 1e-1], three rays.
std::vector<cx> default_compare_points();

// Depth parameter of the boundary point x in (-alpha, 0):
// A(x) = log((x+alpha)/|x|) + (2pi-alpha)/(x+alpha); the arc point is
// 2pi/(A - i pi). Exposed for the polyline construction and tests.
double arc_depth(const CircularArc& p, double x);

// Inverse of arc_depth on the near branch (between the cusp and the arc
// tip). Closed form for alpha = 2pi, bisection in log|x| otherwise.
double x_from_depth(const CircularArc& p, double A);

}  // namespace cusp
