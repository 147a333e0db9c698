#pragma once

#include <vector>

#include "accretive/linalg.hpp"
#include "accretive/types.hpp"
#include "accretive/verdict.hpp"

namespace accretive {

/// An interval 0 < m < M. Construction validates positivity and ordering.
struct Window {
    double m = 0.0;
    double M = 0.0;

    Window() = default;
    Window(double m_, double M_);
};

/// Scalar constants attached to a window. K is the condition-style ratio
/// (M+m)/(2 sqrt(Mm)) >= 1 and low_k = 1/K its reciprocal; c1 = 1 - low_k and
/// c2 = (M-m)^2 / (2 sqrt(Mm)) are the defect constants; sq = 2Mm/(M+m)^2.
struct WindowConstants {
    double mu = 0.0;     // (M+m)/2, disk center
    double r = 0.0;      // (M-m)/2, disk radius
    double K = 0.0;      // (M+m)/(2 sqrt(Mm))
    double low_k = 0.0;  // 2 sqrt(Mm)/(M+m)
    double diff = 0.0;   // M-m
    double c1 = 0.0;     // (sqrt(M)-sqrt(m))^2/(M+m)
    double c2 = 0.0;     // (M-m)^2/(2 sqrt(Mm))
    double sq = 0.0;     // 2Mm/(M+m)^2
};

WindowConstants window_constants(const Window& w);

/// C(A) = (M*I - A*) (A - m*I).
Matrix transform_C(const Matrix& a, const Window& w);

/// Re(A) >= 0 within tolerance; `strict` demands lambda_min > +tol band
/// instead (used by generators to certify interior instances).
bool is_accretive(const Matrix& a, const Tolerance& tol = {}, bool strict = false);
/// Im(A) >= 0 within tolerance.
bool is_dissipative(const Matrix& a, const Tolerance& tol = {}, bool strict = false);

/// Disk form of accretivity of the transform:
/// Re C(A) >= 0  iff  ||A - mu*I|| <= r. Checked as <= r + tol.rel*max(1,r).
bool accretive_via_disk(const Matrix& a, const Window& w, const Tolerance& tol = {});

/// || Re C(A) + |A - mu*I|^2 - r^2*I ||, which is exactly zero in exact
/// arithmetic for every A and window.
double identity_residual(const Matrix& a, const Window& w);

/// Structural checks tied to the transform, ids prop.1 .. prop.7:
///  1 identity C*(A) - C(A*) = |A*|^2 - |A|^2 (so both vanish iff A normal)
///  2 ||C(A) - C*(A)|| = (M-m) ||A - A*||
///  3 C(|A|) accretive iff the singular values of A lie in [m, M]
///  4 Re C(A) <= r^2 I and Re C(iA*) <= r^2 I, unconditionally
///  5 Im C(A) = (M-m) Im A
///  6 C(A) accretive implies A accretive
///  7 C(A) accretive-dissipative implies A accretive-dissipative
/// Items 3, 6, 7 are one-sided or equivalence checks: instances within the
/// tolerance dead-band of a predicate boundary report hypothesis_not_met.
std::vector<Verdict> prop_checks(const Matrix& a, const Window& w, const Tolerance& tol = {});

}  // namespace accretive
