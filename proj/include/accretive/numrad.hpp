#pragma once

#include <vector>

#include "accretive/types.hpp"
#include "accretive/verdict.hpp"

namespace accretive {

/// Certified interval around the numerical radius: lo is an attained value
/// of the support function, hi a rigorous upper bound, hi - lo <= requested
/// width on return.
struct Enclosure {
    double lo = 0.0;
    double hi = 0.0;
    double width() const { return hi - lo; }
};

/// One boundary sample of the numerical range.
struct RangePoint {
    double theta = 0.0;
    cdouble z{};  // <A x, x> for the top eigenvector x of Re(e^{i theta} A)
};

/// f(theta) = lambda_max( Re(e^{i theta} A) ), the support function of the
/// numerical range in direction theta.
double rotated_real_max(const Matrix& a, double theta);

/// Certified enclosure of w(A) = max_theta f(theta) by branch and bound over
/// theta in [0, 2pi): 64 initial intervals; each interval carries the upper
/// potential min( max endpoint value + ||A||*halfwidth, support-corner bound )
/// -- both are rigorous upper bounds for a convex numerical range, and the
/// corner bound contracts quadratically so flat (disk-like) ranges terminate.
/// The interval with the largest potential is bisected (ties broken toward
/// the smaller left endpoint) until hi - lo <= eps * max(1, ||A||).
Enclosure numerical_radius(const Matrix& a, double eps = 1e-8);

/// count boundary samples at uniform angles theta_k = 2 pi k / count.
std::vector<RangePoint> range_samples(const Matrix& a, int count);

/// Unconditional bounds, each as its own scalar verdict:
///   ||A||/2 <= w(A),  w(A) <= ||A||,  ||Re A|| <= w(A),  ||Im A|| <= w(A).
/// Enclosure ends are consumed on the certified side (hi when w is the small
/// side, lo when it is the large side), so the pass band is eps + tol.
std::vector<Verdict> basic_bounds(const Matrix& a, const Tolerance& tol = {}, double eps = 1e-8);

}  // namespace accretive
