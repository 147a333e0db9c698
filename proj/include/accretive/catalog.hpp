#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "accretive/linalg.hpp"
#include "accretive/numrad.hpp"
#include "accretive/rng.hpp"
#include "accretive/transform.hpp"
#include "accretive/types.hpp"
#include "accretive/verdict.hpp"
#include "accretive/window_solver.hpp"

namespace accretive {

/// Unital positive linear maps used by the square-root inequality checks.
///   VectorState: T -> <T x, x> as a 1x1 matrix (x a unit vector)
///   Compression: T -> P* T P for an isometry P (n x k, orthonormal columns)
///   NormalizedTrace: T -> tr(T)/n as a 1x1 matrix
struct PositiveMapSpec {
    enum class Kind { VectorState, Compression, NormalizedTrace };
    Kind kind = Kind::NormalizedTrace;
    std::vector<cdouble> x;  // VectorState
    Matrix p;                // Compression, n x k packed as rows() x cols()
    int p_rows = 0;
    int p_cols = 0;

    static PositiveMapSpec normalized_trace();
    static PositiveMapSpec vector_state(std::vector<cdouble> x);
    static PositiveMapSpec compression(const Matrix& iso_cols, int rows, int cols);
};

/// Apply the map to a Hermitian argument; result dimension is 1 or k.
HermitianMatrix apply_positive_map(const PositiveMapSpec& phi, const HermitianMatrix& t);

/// Convex-combination weight t in [0, 1].
struct TradeParam {
    double t = 0.5;
};

enum class CommutatorForm { Minus, Plus };

// --- checks -----------------------------------------------------------
// Each check gates on its hypothesis through the same predicates the
// window-solver exposes, then evaluates its inequality. Loewner slacks are
// lambda_min(RHS-LHS); scalar checks consume numerical-radius enclosures on
// the certified side, widening the pass band by the enclosure widths.

/// |X| <= K Re X for X = A (v=A), |A*| <= K Im A (v=IAstar),
/// |A^{-1}| <= K Re A^{-1} (v=Ainv). Details carry the intermediate bound
/// (M+m) Re X >= Mm I + |X|^2.
Verdict check_abs_vs_real(const Matrix& a, const Window& w, Variant v, const Tolerance& tol = {});

/// (M+m) Re A >= Mm I + |A|^2 under C(A) accretive (equivalent to the
/// hypothesis itself; slack is lambda_min(Re C(A))).
Verdict check_intermediate(const Matrix& a, const Window& w, const Tolerance& tol = {});

/// ||S|| + ||T|| + | ||S|| - ||T|| | <= K ||S + T|| under C([[0,S],[T*,0]])
/// accretive. No positive window admits the hypothesis (the transformed
/// block has a diagonal block <= -Mm I), so instances report
/// hypothesis_not_met and the inequality value is kept in details.
Verdict check_block_reverse_triangle(const Matrix& s, const Matrix& t, const Window& w,
                                     const Tolerance& tol = {});

/// |X| - H <= c1 ||X|| I with (X,H) = (A, Re A) for v=A, (iA*, Im A) for
/// v=IAstar, (A^{-1}, Re A^{-1}) for v=Ainv; |X| - H here means
/// abs(X) - hermitian_part(X). The scalar companion 0 <= |z| - Re z does not
/// lift to the Loewner order (triangular counterexamples satisfy the window
/// hypothesis), so lambda_min(|X| - H) travels in details only.
Verdict check_abs_minus_real(const Matrix& a, const Window& w, Variant v, const Tolerance& tol = {});

/// (1-t)|A*| + t|A| <= K ((1-t) Im A + t Re A) under joint accretivity of
/// C(A) and C(iA*).
Verdict check_convex_combo(const Matrix& a, const Window& w, TradeParam t, const Tolerance& tol = {});

/// |X|^2 <= K^2 (Re-or-Im X)^2 per variant, same images as check_abs_vs_real.
/// Details carry the scalar certificate f(t) = K^2 t^2 - (M+m) t + Mm
/// evaluated at the eigenvalues of the real part (f >= 0 there, with root
/// 2Mm/(M+m)).
Verdict check_squared(const Matrix& a, const Window& w, Variant v, const Tolerance& tol = {});

/// |A|(Re A)^{-1} + (Re A)^{-1}|A| <= (M+m)/sqrt(Mm) I, both as stated and
/// with the operator absolute value on the left (v=A; v=IAstar swaps in
/// |A*| and Im A). Details include the chain endpoint
/// (Re A)^2 >= (2 sqrt(Mm)/(M+m))^2 |A|^2 as a sub-verdict.
Verdict check_anticommutator(const Matrix& a, const Window& w, Variant v, const Tolerance& tol = {});

/// The chain endpoint as its own case: (Re A)^2 >= low_k^2 |A|^2 under C(A)
/// accretive with Re A invertible. The intermediate norm links of the chain
/// are evaluated informationally in details.
Verdict check_sandwich(const Matrix& a, const Window& w, const Tolerance& tol = {});

/// sqrt(Phi(|A|^2)) <= K Phi(|A|) under C(|A|) accretive.
Verdict check_positive_map(const Matrix& a, const Window& w, const PositiveMapSpec& phi,
                           const Tolerance& tol = {});

/// sqrt(Phi(|A|^2)) >= Phi(|A|), unconditional.
Verdict check_positive_map_reverse(const Matrix& a, const PositiveMapSpec& phi,
                                   const Tolerance& tol = {});

/// Re A <= K |A| (v=A), Im A <= K |A*| (v=IAstar), Re A^{-1} <= K |A^{-1}|
/// (v=Ainv); hypothesis is the singular-value band of the variant image.
Verdict check_reverse(const Matrix& a, const Window& w, Variant v, const Tolerance& tol = {});

/// Re A - |A| <= c2 ||A|| I with c2 = (M-m)^2/(2 sqrt(Mm)) (v=A; v=IAstar
/// uses Im A - |A*|). Details also evaluate the sharper constant
/// (sqrt(M)-sqrt(m))^2/(2 sqrt(Mm)) informationally.
Verdict check_real_minus_abs(const Matrix& a, const Window& w, Variant v, const Tolerance& tol = {});

/// Folded verdicts for the radius/real-part bounds under C(A) accretive:
///   w.vs_real:  w(A) <= K ||Re A||  and  w(A) - ||Re A|| <= c1 w(A)
///   norm.vs_w:  ||A|| <= K w(A)     and  ||A|| - w(A)    <= c1 ||A||
std::vector<Verdict> check_w_bounds(const Matrix& a, const Window& w, const Tolerance& tol = {},
                                    double eps = 1e-8);

/// Fold of the unconditional radius bounds (case w.basic_bounds).
Verdict check_w_basic(const Matrix& a, const Tolerance& tol = {}, double eps = 1e-8);

/// w(A) <= K sqrt(||Re A|| ||Im A||) under joint accretivity of C(A) and
/// C(iA*). Details carry the pointwise mixed Schwarz probe used in its proof.
Verdict check_w_geo_mean(const Matrix& a, const Window& w, const Tolerance& tol = {},
                         double eps = 1e-8, uint64_t seed = 0x5EEDULL);

/// (2Mm/(M+m)^2) || |A|^2 + |A*|^2 || <= w(A)^2 under C(A) accretive.
/// Details carry the improvement flag sq > 1/4 iff M/m < 3 + 2 sqrt(2).
Verdict check_w_lower_sq(const Matrix& a, const Window& w, const Tolerance& tol = {},
                         double eps = 1e-8);

/// w(AB) <= K_A K_B w(A) w(B) under accretivity of C_{M,m}(A) and
/// C_{N,n}(B). Details carry the improvement flag K_A K_B < 4, equivalent to
/// (sqrt(MN)-sqrt(mn))^2 + (sqrt(Mn)-sqrt(Nm))^2 <= 12 sqrt(MNmn).
Verdict check_w_product(const Matrix& a, const Matrix& b, const Window& wa, const Window& wb,
                        const Tolerance& tol = {}, double eps = 1e-8);

/// Minus: w(AB - BA*) <= (M-m) w(B) under C(A) accretive.
/// Plus:  w(AB + BA*) <= (M-m) w(B) under C(iA) accretive.
/// Details report the unconditional baseline 2||A|| w(B) and its margin.
Verdict check_w_commutator(const Matrix& a, const Matrix& b, const Window& w, CommutatorForm form,
                           const Tolerance& tol = {}, double eps = 1e-8);

/// w(AB) + |w(AB + BA*) - w(AB - BA*)|/2 <= (M-m) w(B) under joint
/// accretivity of C(A) and C(iA).
Verdict check_final_corollary(const Matrix& a, const Matrix& b, const Window& w,
                              const Tolerance& tol = {}, double eps = 1e-8);

/// Pointwise mixed Schwarz bound |<A x, x>| <= sqrt(<|A|x,x> <|A*|x,x>) on
/// `vectors` seeded random unit vectors; slack is the smallest margin.
Verdict check_mixed_schwarz(const Matrix& a, const Tolerance& tol = {}, uint64_t seed = 0x5EEDULL,
                            int vectors = 100);

/// ||X Y|| <= ||X + Y||^2 / 4 for PSD X, Y.
Verdict check_norm_product(const HermitianMatrix& x, const HermitianMatrix& y,
                           const Tolerance& tol = {});

/// Two-sided agreement case for: X <= alpha Y iff ||X^{1/2} Y^{-1/2}|| <=
/// sqrt(alpha) (id lem.sqrt_equiv); boundary draws report hypothesis_not_met.
Verdict check_sqrt_equiv_case(const HermitianMatrix& x, const HermitianMatrix& y, double alpha,
                              const Tolerance& tol = {});

// --- registry ----------------------------------------------------------

struct SweepSettings {
    Tolerance tol{};
    double eps = 1e-8;
    double fill = 0.9;
};

/// One catalog entry: a stable id plus a deterministic trial runner that
/// draws a hypothesis-compatible instance and evaluates the check.
struct CaseInfo {
    std::string id;
    std::string description;
    std::function<Verdict(SplitMix64&, int /*dim*/, const SweepSettings&)> run_trial;
};

const std::vector<CaseInfo>& catalog_registry();
const CaseInfo* find_case(const std::string& id);

}  // namespace accretive
