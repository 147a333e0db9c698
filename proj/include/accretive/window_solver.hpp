#pragma once

#include <string>

#include "accretive/transform.hpp"
#include "accretive/types.hpp"

namespace accretive {

/// Which image of A a hypothesis constrains:
///   A        : C(A) accretive
///   IAstar   : C(iA*) accretive
///   IA       : C(iA) accretive
///   Ainv     : C(A^{-1}) accretive (A invertible)
///   AbsA     : C(|A|) accretive, i.e. singular values of A in [m, M]
///   AbsIAstar: C(|iA*|) accretive; |iA*| = |A*| shares A's singular values
enum class Variant { A, IAstar, IA, Ainv, AbsA, AbsIAstar };

const char* variant_name(Variant v);
Variant parse_variant(const std::string& name);

/// The matrix the variant constrains. Ainv inverts (throws if singular).
Matrix variant_image(const Matrix& a, Variant v);

/// g(mu) = ||A - mu*I||, the distance of A to the scalar mu in operator norm.
double center_distance(const Matrix& a, double mu);

/// Does the window satisfy the variant's hypothesis for A?
/// Disk variants check ||X - mu*I|| <= r + tol band; the Abs* variants check
/// m - band <= sigma_min and sigma_max <= M + band. The Ainv variant refuses
/// (returns false) when the condition number estimate exceeds 1e12.
bool feasible_window(const Matrix& a, Variant v, const Window& w, const Tolerance& tol = {});

/// Joint feasibility of the pair used by bi-accretive hypotheses.
/// partner = IAstar: C(A) and C(iA*) accretive (disks around mu and i*mu);
/// partner = IA:     C(A) and C(iA)  accretive (disks around mu and -i*mu).
struct BiaccretiveResult {
    bool feasible = false;
    bool disk_a = false;
    bool disk_partner = false;
};
BiaccretiveResult biaccretive_feasible(const Matrix& a, const Window& w, const Tolerance& tol = {},
                                       Variant partner = Variant::IAstar);

enum class WindowObjective { Kantorovich, Width };

enum class WindowStatus { Ok, Degenerate, Infeasible };

struct WindowSearchResult {
    bool feasible = false;
    WindowStatus status = WindowStatus::Infeasible;
    Window window{};     // valid only when feasible
    double K = 0.0;      // objective value K((m+M)/2) at the optimum
    double mu_star = 0.0;
    double g_star = 0.0; // g(mu_star)
};

/// Minimizes K(mu) = mu / sqrt(mu^2 - g(mu)^2) (objective Kantorovich) or
/// g(mu) itself (objective Width) over feasible mu by golden-section search
/// on [tol.rel, 2*||X||+1], X = variant_image(A). Feasible means
/// mu - g(mu) > 0; infeasible searches report feasible=false. The returned
/// window is (mu* - r, mu* + r) with r = g(mu*) * (1 + pad); a collapsed
/// window (M - m < 1e-9 * max(1, mu*)) reports Degenerate.
WindowSearchResult optimal_window(const Matrix& a, Variant v, double pad = 1e-6,
                                  const Tolerance& tol = {},
                                  WindowObjective objective = WindowObjective::Kantorovich);

}  // namespace accretive
