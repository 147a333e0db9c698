#include "accretive/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <utility>

#include "accretive/generators.hpp"

namespace accretive {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

const char* variant_suffix(Variant v) {
    switch (v) {
        case Variant::A: return "a";
        case Variant::IAstar: return "iastar";
        case Variant::IA: return "ia";
        case Variant::Ainv: return "ainv";
        case Variant::AbsA: return "absa";
        case Variant::AbsIAstar: return "absiastar";
    }
    return "?";
}

double hermitian_norm(const HermitianMatrix& h) {
    const std::vector<double> ev = eigvals_hermitian(h);
    return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

/// Fold sub-checks into one verdict: the binding (smallest normalized slack)
/// part supplies the numbers; pass requires the hypothesis and every part.
Verdict fold_verdict(const std::string& id, bool hyp, const std::vector<Verdict>& parts,
                     const std::string& extra = "") {
    size_t best = 0;
    bool all_pass = true;
    std::string detail;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].slack_norm < parts[best].slack_norm) best = i;
        all_pass = all_pass && parts[i].pass;
        if (!detail.empty()) detail += "; ";
        detail += parts[i].case_id + " slack_norm=" + fmt(parts[i].slack_norm);
    }
    Verdict out = parts[best];
    out.case_id = id;
    out.hypothesis_met = hyp;
    out.pass = hyp && all_pass;
    out.details = extra.empty() ? detail : extra + "; " + detail;
    return out;
}

/// Singular values of z within [m - band, M + band].
bool sigma_band_ok(const Matrix& z, const Window& w, const Tolerance& tol) {
    const std::vector<double> sv = singular_values(z);
    const double band = tol.rel * std::max(1.0, w.M);
    return sv.front() >= w.m - band && sv.back() <= w.M + band;
}

}  // namespace

PositiveMapSpec PositiveMapSpec::normalized_trace() {
    PositiveMapSpec s;
    s.kind = Kind::NormalizedTrace;
    return s;
}

PositiveMapSpec PositiveMapSpec::vector_state(std::vector<cdouble> x) {
    PositiveMapSpec s;
    s.kind = Kind::VectorState;
    s.x = std::move(x);
    return s;
}

PositiveMapSpec PositiveMapSpec::compression(const Matrix& iso_cols, int rows, int cols) {
    if (rows < 1 || cols < 1 || cols > rows || rows > iso_cols.n())
        throw std::invalid_argument("PositiveMapSpec::compression: bad shape");
    PositiveMapSpec s;
    s.kind = Kind::Compression;
    s.p = iso_cols;
    s.p_rows = rows;
    s.p_cols = cols;
    return s;
}

HermitianMatrix apply_positive_map(const PositiveMapSpec& phi, const HermitianMatrix& t) {
    const int n = t.n();
    switch (phi.kind) {
        case PositiveMapSpec::Kind::NormalizedTrace: {
            double tr = 0.0;
            for (int i = 0; i < n; ++i) tr += t(i, i).real();
            Matrix out(1);
            out(0, 0) = tr / n;
            return HermitianMatrix(out);
        }
        case PositiveMapSpec::Kind::VectorState: {
            if (static_cast<int>(phi.x.size()) != n)
                throw std::invalid_argument("apply_positive_map: vector dimension mismatch");
            cdouble z = 0.0;
            for (int i = 0; i < n; ++i) {
                cdouble row = 0.0;
                for (int j = 0; j < n; ++j) row += t(i, j) * phi.x[static_cast<size_t>(j)];
                z += std::conj(phi.x[static_cast<size_t>(i)]) * row;
            }
            Matrix out(1);
            out(0, 0) = z.real();
            return HermitianMatrix(out);
        }
        case PositiveMapSpec::Kind::Compression: {
            if (phi.p_rows != n)
                throw std::invalid_argument("apply_positive_map: isometry dimension mismatch");
            const int k = phi.p_cols;
            Matrix out(k);
            for (int al = 0; al < k; ++al) {
                for (int be = 0; be < k; ++be) {
                    cdouble z = 0.0;
                    for (int i = 0; i < n; ++i) {
                        cdouble row = 0.0;
                        for (int j = 0; j < n; ++j) row += t(i, j) * phi.p(j, be);
                        z += std::conj(phi.p(i, al)) * row;
                    }
                    out(al, be) = z;
                }
            }
            return HermitianMatrix(out);
        }
    }
    throw std::invalid_argument("apply_positive_map: bad kind");
}

Verdict check_abs_vs_real(const Matrix& a, const Window& w, Variant v, const Tolerance& tol) {
    const std::string id = std::string("thm.abs_real.") + variant_suffix(v);
    const WindowConstants c = window_constants(w);
    const bool hyp = feasible_window(a, v, w, tol);
    const Matrix x = variant_image(a, v);

    const HermitianMatrix absx = abs_op(x);
    const HermitianMatrix re = hermitian_part(x);
    Verdict main = loewner_leq(absx, c.K * re, tol, "abs<=K*re");

    // Intermediate form (M+m) Re X >= Mm I + |X|^2, with |X|^2 = X*X exact.
    const HermitianMatrix sq = HermitianMatrix(adjoint(x) * x);
    const double inter = lambda_min((w.M + w.m) * re - add_scaled_identity(sq, w.M * w.m));
    return fold_verdict(id, hyp, {main}, "intermediate_slack=" + fmt(inter));
}

Verdict check_intermediate(const Matrix& a, const Window& w, const Tolerance& tol) {
    const bool hyp = accretive_via_disk(a, w, tol);
    const HermitianMatrix re = hermitian_part(a);
    const HermitianMatrix sq = HermitianMatrix(adjoint(a) * a);
    Verdict main = loewner_leq(add_scaled_identity(sq, w.M * w.m), (w.M + w.m) * re, tol, "lhs<=rhs");
    return fold_verdict("eq.intermediate", hyp, {main},
                        "equivalent to Re C(A) >= 0; disk_margin=" +
                            fmt(window_constants(w).r - center_distance(a, window_constants(w).mu)));
}

Verdict check_block_reverse_triangle(const Matrix& s, const Matrix& t, const Window& w,
                                     const Tolerance& tol) {
    const Matrix g = block_off_diag(s, t);
    const bool hyp = accretive_via_disk(g, w, tol);
    const double ns = spectral_norm(s);
    const double nt = spectral_norm(t);
    const double lhs = ns + nt + std::abs(ns - nt);
    const double rhs = window_constants(w).K * spectral_norm(s + t);
    Verdict vd = scalar_verdict("thm.block_triangle", lhs, rhs, tol.rel, hyp);
    vd.details = std::string("hypothesis is empty for positive windows ") +
                 "(Re C has a diagonal block <= -Mm I); informational holds=" +
                 (lhs <= rhs + tol.rel * std::max(1.0, rhs) ? "1" : "0");
    return vd;
}

Verdict check_abs_minus_real(const Matrix& a, const Window& w, Variant v, const Tolerance& tol) {
    const std::string id = std::string("cor.abs_minus_real.") + variant_suffix(v);
    const WindowConstants c = window_constants(w);
    const bool hyp = feasible_window(a, v, w, tol);
    const Matrix x = variant_image(a, v);

    // Only the upper bound lifts to the operator order; the scalar fact
    // 0 <= |z| - Re z has no Loewner analogue (fails for triangular X even
    // with the window hypothesis intact), so lambda_min(|X| - Re X) is
    // reported informationally and kept out of the pass decision.
    const HermitianMatrix diff = abs_op(x) - hermitian_part(x);
    Verdict upper = loewner_leq(diff, HermitianMatrix::scaled_identity(x.n(), c.c1 * spectral_norm(x)),
                                tol, "abs-re<=c1*norm");
    const double inf_eig = lambda_min(diff);
    return fold_verdict(id, hyp, {upper}, "inf_eig(abs-re)=" + fmt(inf_eig));
}

Verdict check_convex_combo(const Matrix& a, const Window& w, TradeParam t, const Tolerance& tol) {
    if (t.t < 0.0 || t.t > 1.0) throw std::invalid_argument("check_convex_combo: t outside [0,1]");
    const WindowConstants c = window_constants(w);
    const BiaccretiveResult bi = biaccretive_feasible(a, w, tol, Variant::IAstar);

    const HermitianMatrix lhs = (1.0 - t.t) * abs_adjoint(a) + t.t * abs_op(a);
    const HermitianMatrix rhs =
        c.K * ((1.0 - t.t) * imaginary_part(a) + t.t * hermitian_part(a));
    Verdict main = loewner_leq(lhs, rhs, tol, "combo<=K*parts");
    return fold_verdict("thm.convex_combo", bi.feasible, {main},
                        "t=" + fmt(t.t) + "; disk_a=" + (bi.disk_a ? "1" : "0") +
                            " disk_iastar=" + (bi.disk_partner ? "1" : "0"));
}

Verdict check_squared(const Matrix& a, const Window& w, Variant v, const Tolerance& tol) {
    const std::string id = std::string("thm.squared.") + variant_suffix(v);
    const WindowConstants c = window_constants(w);
    const bool hyp = feasible_window(a, v, w, tol);
    const Matrix x = variant_image(a, v);

    const HermitianMatrix lhs = HermitianMatrix(adjoint(x) * x);
    const Matrix h = hermitian_part(x).mat();
    const HermitianMatrix rhs = HermitianMatrix((c.K * c.K) * (h * h));
    Verdict main = loewner_leq(lhs, rhs, tol, "abs2<=K2*re2");

    // Scalar certificate: f(t) = K^2 t^2 - (M+m) t + Mm = K^2 (t - 2Mm/(M+m))^2
    // is nonnegative on the spectrum of Re X.
    double fmin = std::numeric_limits<double>::infinity();
    for (const double lam : eigvals_hermitian(hermitian_part(x)))
        fmin = std::min(fmin, c.K * c.K * lam * lam - (w.M + w.m) * lam + w.M * w.m);
    return fold_verdict(id, hyp, {main}, "certificate_min=" + fmt(fmin));
}

Verdict check_anticommutator(const Matrix& a, const Window& w, Variant v, const Tolerance& tol) {
    if (v != Variant::A && v != Variant::IAstar)
        throw std::invalid_argument("check_anticommutator: variant must be A or iAstar");
    const std::string id = std::string("cor.anticommutator.") + variant_suffix(v);
    const WindowConstants c = window_constants(w);
    bool hyp = feasible_window(a, v, w, tol);
    const Matrix x = variant_image(a, v);

    const HermitianMatrix re = hermitian_part(x);
    const double scale = std::max(1.0, spectral_norm(x));
    if (lambda_min(re) <= 1e-12 * scale) {
        Verdict vd;
        vd.case_id = id;
        vd.relation = "scalar";
        vd.hypothesis_met = false;
        vd.details = "real part numerically singular";
        return vd;
    }
    const Matrix rinv = inverse(re.mat());
    const Matrix p = abs_op(x).mat();
    const HermitianMatrix s = HermitianMatrix(p * rinv + rinv * p);
    const std::vector<double> ev = eigvals_hermitian(s);
    const double bound = 2.0 * c.K;  // (M+m)/sqrt(Mm)

    Verdict stated = scalar_verdict("anticomm<=2K", ev.back(), bound, tol.rel);
    Verdict absform = scalar_verdict("abs(anticomm)<=2K",
                                     std::max(std::abs(ev.front()), std::abs(ev.back())), bound,
                                     tol.rel);
    // Chain endpoint (Re X)^2 >= low_k^2 |X|^2 as a sub-verdict.
    const double endpoint =
        lambda_min(HermitianMatrix(re.mat() * re.mat()) -
                   (c.low_k * c.low_k) * HermitianMatrix(adjoint(x) * x));
    return fold_verdict(id, hyp, {stated, absform},
                        "lam_min=" + fmt(ev.front()) + " lam_max=" + fmt(ev.back()) +
                            " endpoint_slack=" + fmt(endpoint));
}

Verdict check_sandwich(const Matrix& a, const Window& w, const Tolerance& tol) {
    const WindowConstants c = window_constants(w);
    const bool hyp = accretive_via_disk(a, w, tol);
    const HermitianMatrix re = hermitian_part(a);
    const Matrix h = re.mat();

    Verdict main = loewner_leq((c.low_k * c.low_k) * HermitianMatrix(adjoint(a) * a),
                               HermitianMatrix(h * h), tol, "lowk2*abs2<=re2");

    // Chain links evaluated informationally: the middle norm comparisons do
    // not hold for arbitrary PSD pairs, only the endpoint is normative.
    std::string extra = "chain: n/a";
    const double scale = std::max(1.0, spectral_norm(a));
    if (lambda_min(re) > 1e-12 * scale) {
        const Matrix rinv = inverse(h);
        const Matrix p = abs_op(a).mat();
        const double anti = spectral_norm(p * rinv + rinv * p);
        const double twice = 2.0 * spectral_norm(rinv * p);
        extra = "chain ||PR1+R1P||=" + fmt(anti) + " 2||R1P||=" + fmt(twice) +
                " 2K=" + fmt(2.0 * c.K);
    }
    return fold_verdict("rem.sandwich", hyp, {main}, extra);
}

Verdict check_positive_map(const Matrix& a, const Window& w, const PositiveMapSpec& phi,
                           const Tolerance& tol) {
    const WindowConstants c = window_constants(w);
    const bool hyp = feasible_window(a, Variant::AbsA, w, tol);
    const HermitianMatrix p2 = HermitianMatrix(adjoint(a) * a);
    const HermitianMatrix lhs = sqrt_psd(apply_positive_map(phi, p2), tol);
    const HermitianMatrix rhs = c.K * apply_positive_map(phi, abs_op(a));
    Verdict main = loewner_leq(lhs, rhs, tol, "sqrt(phi(abs2))<=K*phi(abs)");
    return fold_verdict("lem.posmap", hyp, {main});
}

Verdict check_positive_map_reverse(const Matrix& a, const PositiveMapSpec& phi,
                                   const Tolerance& tol) {
    const HermitianMatrix p2 = HermitianMatrix(adjoint(a) * a);
    const HermitianMatrix lhs = apply_positive_map(phi, abs_op(a));
    const HermitianMatrix rhs = sqrt_psd(apply_positive_map(phi, p2), tol);
    Verdict main = loewner_leq(lhs, rhs, tol, "phi(abs)<=sqrt(phi(abs2))");
    return fold_verdict("ineq.posmap_reverse", true, {main});
}

Verdict check_reverse(const Matrix& a, const Window& w, Variant v, const Tolerance& tol) {
    if (v != Variant::A && v != Variant::IAstar && v != Variant::Ainv)
        throw std::invalid_argument("check_reverse: variant must be A, iAstar, or Ainv");
    const std::string id = std::string("thm.reverse.") + variant_suffix(v);
    const WindowConstants c = window_constants(w);

    if (v == Variant::Ainv) {
        const std::vector<double> sv = singular_values(a);
        if (!(sv.front() > 0.0) || sv.back() / sv.front() > 1e12) {
            Verdict vd;
            vd.case_id = id;
            vd.relation = "loewner";
            vd.details = "matrix numerically singular";
            return vd;
        }
    }
    const Matrix z = variant_image(a, v);
    const bool hyp = sigma_band_ok(z, w, tol);
    Verdict main = loewner_leq(hermitian_part(z), c.K * abs_op(z), tol, "re<=K*abs");
    return fold_verdict(id, hyp, {main});
}

Verdict check_real_minus_abs(const Matrix& a, const Window& w, Variant v, const Tolerance& tol) {
    if (v != Variant::A && v != Variant::IAstar)
        throw std::invalid_argument("check_real_minus_abs: variant must be A or iAstar");
    const std::string id = std::string("cor.real_minus_abs.") + variant_suffix(v);
    const WindowConstants c = window_constants(w);
    const Matrix z = variant_image(a, v);
    const bool hyp = sigma_band_ok(z, w, tol);

    const HermitianMatrix diff = hermitian_part(z) - abs_op(z);
    const double norm_a = spectral_norm(a);
    Verdict main = loewner_leq(diff, HermitianMatrix::scaled_identity(z.n(), c.c2 * norm_a), tol,
                               "re-abs<=c2*norm");

    // Sharper constant (sqrt(M)-sqrt(m))^2 / (2 sqrt(Mm)) = K - 1, informational.
    const double sharper_slack = (c.K - 1.0) * norm_a - lambda_max(diff);
    return fold_verdict(id, hyp, {main}, "sharper_slack=" + fmt(sharper_slack));
}

std::vector<Verdict> check_w_bounds(const Matrix& a, const Window& w, const Tolerance& tol,
                                    double eps) {
    const WindowConstants c = window_constants(w);
    const bool hyp = accretive_via_disk(a, w, tol);
    const Enclosure wa = numerical_radius(a, eps);
    const double re_norm = hermitian_norm(hermitian_part(a));
    const double norm = spectral_norm(a);
    const double band = tol.rel + 2.0 * eps;

    std::vector<Verdict> out;
    {
        Verdict p1 = scalar_verdict("w<=K*re", wa.hi, c.K * re_norm, band);
        Verdict p2 = scalar_verdict("w-re<=c1*w", wa.hi - re_norm, c.c1 * wa.lo, band);
        out.push_back(fold_verdict("w.vs_real", hyp, {p1, p2}, "w=[" + fmt(wa.lo) + "," + fmt(wa.hi) + "]"));
    }
    {
        Verdict p1 = scalar_verdict("norm<=K*w", norm, c.K * wa.lo, band);
        Verdict p2 = scalar_verdict("norm-w<=c1*norm", norm - wa.lo, c.c1 * norm, band);
        out.push_back(fold_verdict("norm.vs_w", hyp, {p1, p2}, "norm=" + fmt(norm)));
    }
    return out;
}

Verdict check_w_basic(const Matrix& a, const Tolerance& tol, double eps) {
    return fold_verdict("w.basic_bounds", true, basic_bounds(a, tol, eps));
}

Verdict check_w_geo_mean(const Matrix& a, const Window& w, const Tolerance& tol, double eps,
                         uint64_t seed) {
    const WindowConstants c = window_constants(w);
    const BiaccretiveResult bi = biaccretive_feasible(a, w, tol, Variant::IAstar);
    const Enclosure wa = numerical_radius(a, eps);
    const double re_norm = hermitian_norm(hermitian_part(a));
    const double im_norm = hermitian_norm(imaginary_part(a));
    Verdict main = scalar_verdict("w<=K*sqrt(re*im)", wa.hi, c.K * std::sqrt(re_norm * im_norm),
                                  tol.rel + 2.0 * eps);

    // Pointwise probe behind the proof: |<Ax,x>| <= sqrt(<|A|x,x><|A*|x,x>).
    SplitMix64 rng(seed);
    const Matrix p = abs_op(a).mat();
    const Matrix q = abs_adjoint(a).mat();
    double min_margin = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 16; ++k) {
        const std::vector<cdouble> x = random_unit_vector(rng, a.n());
        cdouble az = 0.0;
        double pz = 0.0, qz = 0.0;
        for (int i = 0; i < a.n(); ++i) {
            cdouble ra = 0.0, rp = 0.0, rq = 0.0;
            for (int j = 0; j < a.n(); ++j) {
                ra += a(i, j) * x[static_cast<size_t>(j)];
                rp += p(i, j) * x[static_cast<size_t>(j)];
                rq += q(i, j) * x[static_cast<size_t>(j)];
            }
            az += std::conj(x[static_cast<size_t>(i)]) * ra;
            pz += (std::conj(x[static_cast<size_t>(i)]) * rp).real();
            qz += (std::conj(x[static_cast<size_t>(i)]) * rq).real();
        }
        min_margin = std::min(min_margin,
                              std::sqrt(std::max(0.0, pz) * std::max(0.0, qz)) - std::abs(az));
    }
    return fold_verdict("w.geo_mean", bi.feasible, {main},
                        "schwarz_min_margin=" + fmt(min_margin));
}

Verdict check_w_lower_sq(const Matrix& a, const Window& w, const Tolerance& tol, double eps) {
    const WindowConstants c = window_constants(w);
    const bool hyp = accretive_via_disk(a, w, tol);
    const Enclosure wa = numerical_radius(a, eps);
    const HermitianMatrix sum = HermitianMatrix(adjoint(a) * a + a * adjoint(a));
    const double lhs = c.sq * lambda_max(sum);
    const double lo = std::max(0.0, wa.lo);
    Verdict main = scalar_verdict("sq*||abs2sum||<=w^2", lhs, lo * lo, tol.rel + 5.0 * eps);

    const double ratio = w.M / w.m;
    const double thresh = 3.0 + 2.0 * std::sqrt(2.0);
    std::string flag = "boundary";
    if (std::abs(c.sq - 0.25) > 1e-12)
        flag = (c.sq > 0.25) == (ratio < thresh) ? "agree" : "MISMATCH";
    return fold_verdict("w.lower_sq", hyp, {main},
                        "improves_quarter=" + std::string(c.sq > 0.25 ? "1" : "0") +
                            " flag_check=" + flag);
}

Verdict check_w_product(const Matrix& a, const Matrix& b, const Window& wa, const Window& wb,
                        const Tolerance& tol, double eps) {
    const WindowConstants ca = window_constants(wa);
    const WindowConstants cb = window_constants(wb);
    const bool hyp = accretive_via_disk(a, wa, tol) && accretive_via_disk(b, wb, tol);
    const Enclosure wab = numerical_radius(a * b, eps);
    const Enclosure ra = numerical_radius(a, eps);
    const Enclosure rb = numerical_radius(b, eps);
    Verdict main = scalar_verdict("w(AB)<=KK*w(A)w(B)", wab.hi,
                                  ca.K * cb.K * std::max(0.0, ra.lo) * std::max(0.0, rb.lo),
                                  tol.rel + 8.0 * eps);

    // Improvement over the unconditional 4 w(A) w(B): K_A K_B < 4 iff
    // (sqrt(MN)-sqrt(mn))^2 + (sqrt(Mn)-sqrt(Nm))^2 <= 12 sqrt(MNmn).
    const double prod = ca.K * cb.K;
    const double lhs_alg = std::pow(std::sqrt(wa.M * wb.M) - std::sqrt(wa.m * wb.m), 2) +
                           std::pow(std::sqrt(wa.M * wb.m) - std::sqrt(wb.M * wa.m), 2);
    const double rhs_alg = 12.0 * std::sqrt(wa.M * wb.M * wa.m * wb.m);
    std::string flag = "boundary";
    if (std::abs(prod - 4.0) > 1e-12) flag = (prod < 4.0) == (lhs_alg <= rhs_alg) ? "agree" : "MISMATCH";
    return fold_verdict("w.product", hyp, {main},
                        "KK=" + fmt(prod) + " flag_check=" + flag);
}

Verdict check_w_commutator(const Matrix& a, const Matrix& b, const Window& w, CommutatorForm form,
                           const Tolerance& tol, double eps) {
    const std::string id =
        form == CommutatorForm::Minus ? "w.commutator.minus" : "w.commutator.plus";
    const WindowConstants c = window_constants(w);
    const Variant hv = form == CommutatorForm::Minus ? Variant::A : Variant::IA;
    const bool hyp = feasible_window(a, hv, w, tol);

    const Matrix ab = a * b;
    const Matrix bas = b * adjoint(a);
    const Matrix comb = form == CommutatorForm::Minus ? ab - bas : ab + bas;
    const Enclosure wc = numerical_radius(comb, eps);
    const Enclosure wb = numerical_radius(b, eps);
    Verdict main =
        scalar_verdict("w(comb)<=(M-m)w(B)", wc.hi, c.diff * std::max(0.0, wb.lo), tol.rel + 4.0 * eps);

    const double baseline = 2.0 * spectral_norm(a) * wb.hi;
    return fold_verdict(id, hyp, {main},
                        "baseline_2normA_wB=" + fmt(baseline) + " bound=" + fmt(c.diff * wb.lo));
}

Verdict check_final_corollary(const Matrix& a, const Matrix& b, const Window& w,
                              const Tolerance& tol, double eps) {
    const WindowConstants c = window_constants(w);
    const BiaccretiveResult bi = biaccretive_feasible(a, w, tol, Variant::IA);
    const Matrix ab = a * b;
    const Matrix bas = b * adjoint(a);
    const Enclosure wab = numerical_radius(ab, eps);
    const Enclosure wp = numerical_radius(ab + bas, eps);
    const Enclosure wm = numerical_radius(ab - bas, eps);
    const Enclosure wb = numerical_radius(b, eps);

    // Largest value the left side can take inside the enclosures.
    const double gap = std::max({wp.hi - wm.lo, wm.hi - wp.lo, 0.0});
    const double lhs = wab.hi + 0.5 * gap;
    Verdict main = scalar_verdict("w(AB)+gap/2<=(M-m)w(B)", lhs, c.diff * std::max(0.0, wb.lo),
                                  tol.rel + 8.0 * eps);
    return fold_verdict("cor.final", bi.feasible, {main},
                        "w(AB)=" + fmt(wab.hi) + " w(AB+BA*)=" + fmt(wp.hi) +
                            " w(AB-BA*)=" + fmt(wm.hi));
}

Verdict check_mixed_schwarz(const Matrix& a, const Tolerance& tol, uint64_t seed, int vectors) {
    if (vectors < 1) throw std::invalid_argument("check_mixed_schwarz: vectors must be positive");
    SplitMix64 rng(seed);
    const Matrix p = abs_op(a).mat();
    const Matrix q = abs_adjoint(a).mat();
    const int n = a.n();

    double min_slack = std::numeric_limits<double>::infinity();
    double worst_lhs = 0.0, worst_rhs = 0.0;
    for (int k = 0; k < vectors; ++k) {
        const std::vector<cdouble> x = random_unit_vector(rng, n);
        cdouble az = 0.0;
        double pz = 0.0, qz = 0.0;
        for (int i = 0; i < n; ++i) {
            cdouble ra = 0.0, rp = 0.0, rq = 0.0;
            for (int j = 0; j < n; ++j) {
                ra += a(i, j) * x[static_cast<size_t>(j)];
                rp += p(i, j) * x[static_cast<size_t>(j)];
                rq += q(i, j) * x[static_cast<size_t>(j)];
            }
            az += std::conj(x[static_cast<size_t>(i)]) * ra;
            pz += (std::conj(x[static_cast<size_t>(i)]) * rp).real();
            qz += (std::conj(x[static_cast<size_t>(i)]) * rq).real();
        }
        const double lhs = std::abs(az);
        const double rhs = std::sqrt(std::max(0.0, pz) * std::max(0.0, qz));
        if (rhs - lhs < min_slack) {
            min_slack = rhs - lhs;
            worst_lhs = lhs;
            worst_rhs = rhs;
        }
    }
    Verdict vd = scalar_verdict("prop.mixed_schwarz", worst_lhs, worst_rhs, tol.rel);
    vd.details = "vectors=" + std::to_string(vectors);
    return vd;
}

Verdict check_norm_product(const HermitianMatrix& x, const HermitianMatrix& y,
                           const Tolerance& tol) {
    const bool hyp = is_psd(x, tol) && is_psd(y, tol);
    const double lhs = spectral_norm(x.mat() * y.mat());
    const double sum = hermitian_norm(x + y);
    Verdict vd = scalar_verdict("prop.norm_product", lhs, 0.25 * sum * sum, tol.rel, hyp);
    vd.details = "||X+Y||=" + fmt(sum);
    return vd;
}

Verdict check_sqrt_equiv_case(const HermitianMatrix& x, const HermitianMatrix& y, double alpha,
                              const Tolerance& tol) {
    const EquivalenceProbe probe = sqrt_leq_equiv(x, y, alpha, tol);
    Verdict vd;
    vd.case_id = "lem.sqrt_equiv";
    vd.relation = "equiv";
    vd.hypothesis_met = !probe.boundary;
    vd.lhs_summary = probe.lhs ? 1.0 : 0.0;
    vd.rhs_summary = probe.rhs ? 1.0 : 0.0;
    vd.slack = alpha - probe.critical;
    vd.slack_norm = vd.slack / std::max(1.0, probe.critical);
    vd.pass = vd.hypothesis_met && probe.agree;
    vd.details = std::string("order=") + (probe.lhs ? "1" : "0") + " norm=" +
                 (probe.rhs ? "1" : "0") + " critical=" + fmt(probe.critical) +
                 " alpha=" + fmt(alpha) + (probe.boundary ? " boundary" : "");
    return vd;
}

// --- registry -----------------------------------------------------------

namespace {

Window draw_window(SplitMix64& rng) {
    const double m = rng.log_uniform(0.1, 10.0);
    return Window(m, m * rng.log_uniform(1.05, 50.0));
}

/// Windows wide enough for the two-disk generators: r/mu in (1/sqrt(2), 1).
Window draw_bidisk_window(SplitMix64& rng) {
    const double mu = rng.log_uniform(0.2, 5.0);
    const double r = mu * rng.uniform(0.72, 0.98);
    return Window(mu - r, mu + r);
}

PositiveMapSpec draw_map(SplitMix64& rng, int n) {
    switch (rng.next() % 3) {
        case 0: return PositiveMapSpec::normalized_trace();
        case 1: return PositiveMapSpec::vector_state(random_unit_vector(rng, n));
        default: {
            const int k = 1 + static_cast<int>(rng.next() % static_cast<uint64_t>(n));
            return PositiveMapSpec::compression(random_isometry(rng, n, k), n, k);
        }
    }
}

/// A inside the window disk with Im A PSD, so C(A) is accretive-dissipative.
Matrix gen_accretive_dissipative(SplitMix64& rng, int n, const Window& w, double fill) {
    const WindowConstants c = window_constants(w);
    const Matrix h = random_hermitian(rng, n).mat();
    const Matrix p = random_psd(rng, n, 0.0, 2.0).mat();
    const Matrix b = h + cdouble(0.0, 1.0) * p;
    const double nb = spectral_norm(b);
    Matrix a = nb > 0.0 ? (fill * c.r / nb) * b : Matrix::zero(n);
    for (int i = 0; i < n; ++i) a(i, i) += c.mu;
    return a;
}

Verdict run_prop(int k, SplitMix64& rng, int dim, const SweepSettings& s) {
    const Window w = draw_window(rng);
    Matrix a = Matrix::zero(dim);
    switch (k) {
        case 3:
            a = (rng.next() & 1) ? gen_singular_band(rng, dim, w, s.fill)
                                 : gen_unrestricted(rng, dim);
            break;
        case 6: a = gen_disk(rng, dim, w, s.fill); break;
        case 7: a = gen_accretive_dissipative(rng, dim, w, s.fill); break;
        default: a = gen_unrestricted(rng, dim); break;
    }
    return prop_checks(a, w, s.tol)[static_cast<size_t>(k - 1)];
}

using Runner = std::function<Verdict(SplitMix64&, int, const SweepSettings&)>;

CaseInfo entry(std::string id, std::string description, Runner run) {
    CaseInfo info;
    info.id = std::move(id);
    info.description = std::move(description);
    info.run_trial = std::move(run);
    return info;
}

std::vector<CaseInfo> build_registry() {
    std::vector<CaseInfo> reg;

    const char* prop_desc[7] = {
        "C*(A) - C(A*) equals |A*|^2 - |A|^2",
        "||C(A) - C*(A)|| equals (M-m) ||A - A*||",
        "C(|A|) accretive iff singular values lie in [m, M]",
        "Re C(A) <= r^2 I and Re C(iA*) <= r^2 I",
        "Im C(A) equals (M-m) Im A",
        "C(A) accretive implies A accretive",
        "C(A) accretive-dissipative implies A accretive-dissipative",
    };
    for (int k = 1; k <= 7; ++k) {
        reg.push_back(entry("prop." + std::to_string(k), prop_desc[k - 1],
                            [k](SplitMix64& rng, int dim, const SweepSettings& s) {
                                return run_prop(k, rng, dim, s);
                            }));
    }

    const Variant disk_variants[3] = {Variant::A, Variant::IAstar, Variant::Ainv};
    const auto disk_instance = [](SplitMix64& rng, int dim, const SweepSettings& s, Variant v,
                                  Window& w) {
        w = draw_window(rng);
        Matrix a = gen_disk(rng, dim, w, s.fill);
        if (v == Variant::IAstar) a = cdouble(0.0, 1.0) * a;
        if (v == Variant::Ainv) a = inverse(a);
        return a;
    };

    for (const Variant v : disk_variants) {
        reg.push_back(entry(std::string("thm.abs_real.") + variant_suffix(v),
                            "|X| <= K Re X for the hypothesis image X",
                            [v, disk_instance](SplitMix64& rng, int dim, const SweepSettings& s) {
                                Window w;
                                const Matrix a = disk_instance(rng, dim, s, v, w);
                                return check_abs_vs_real(a, w, v, s.tol);
                            }));
    }

    reg.push_back(entry("eq.intermediate", "(M+m) Re A >= Mm I + |A|^2 under C(A) accretive",
                        [](SplitMix64& rng, int dim, const SweepSettings& s) {
                            const Window w = draw_window(rng);
                            return check_intermediate(gen_disk(rng, dim, w, s.fill), w, s.tol);
                        }));

    reg.push_back(entry("thm.block_triangle",
                        "reverse triangle bound for [[0,S],[T*,0]] (hypothesis empty)",
                        [](SplitMix64& rng, int dim, const SweepSettings& s) {
                            const Window w = draw_window(rng);
                            const Matrix st = gen_unrestricted(rng, dim);
                            const Matrix tt = gen_unrestricted(rng, dim);
                            return check_block_reverse_triangle(st, tt, w, s.tol);
                        }));

    for (const Variant v : disk_variants) {
        reg.push_back(entry(std::string("cor.abs_minus_real.") + variant_suffix(v),
                            "|X| - Re X <= c1 ||X|| I (lambda_min of the difference in details)",
                            [v, disk_instance](SplitMix64& rng, int dim, const SweepSettings& s) {
                                Window w;
                                const Matrix a = disk_instance(rng, dim, s, v, w);
                                return check_abs_minus_real(a, w, v, s.tol);
                            }));
    }

    reg.push_back(entry("thm.convex_combo",
                        "(1-t)|A*| + t|A| <= K ((1-t) Im A + t Re A), C(A) and C(iA*) accretive",
                        [](SplitMix64& rng, int dim, const SweepSettings& s) {
                            const Window w = draw_bidisk_window(rng);
                            const Matrix a = gen_bidisk(rng, dim, w, s.fill, Variant::IAstar);
                            return check_convex_combo(a, w, TradeParam{rng.uniform01()}, s.tol);
                        }));

    for (const Variant v : disk_variants) {
        reg.push_back(entry(std::string("thm.squared.") + variant_suffix(v),
                            "|X|^2 <= K^2 (Re X)^2",
                            [v, disk_instance](SplitMix64& rng, int dim, const SweepSettings& s) {
                                Window w;
                                const Matrix a = disk_instance(rng, dim, s, v, w);
                                return check_squared(a, w, v, s.tol);
                            }));
    }

    reg.push_back(entry("lem.sqrt_equiv",
                        "X <= alpha Y iff ||X^{1/2} Y^{-1/2}|| <= sqrt(alpha)",
                        [](SplitMix64& rng, int dim, const SweepSettings& s) {
                            const HermitianMatrix x = random_psd(rng, dim, 0.0, 2.0);
                            const HermitianMatrix y = random_psd(rng, dim, 0.2, 2.0);
                            const double crude = lambda_max(x) / lambda_min(y);
                            const double alpha = rng.log_uniform(0.02, 2.0) * std::max(crude, 1e-6);
                            return check_sqrt_equiv_case(x, y, alpha, s.tol);
                        }));

    const Variant anti_variants[2] = {Variant::A, Variant::IAstar};
    for (const Variant v : anti_variants) {
        reg.push_back(entry(std::string("cor.anticommutator.") + variant_suffix(v),
                            "|X| (Re X)^{-1} + (Re X)^{-1} |X| <= (M+m)/sqrt(Mm) I",
                            [v, disk_instance](SplitMix64& rng, int dim, const SweepSettings& s) {
                                Window w;
                                const Matrix a = disk_instance(rng, dim, s, v, w);
                                return check_anticommutator(a, w, v, s.tol);
                            }));
    }

    reg.push_back(entry("rem.sandwich", "(Re A)^2 >= low_k^2 |A|^2 under C(A) accretive",
                        [](SplitMix64& rng, int dim, const SweepSettings& s) {
                            const Window w = draw_window(rng);
                            return check_sandwich(gen_disk(rng, dim, w, s.fill), w, s.tol);
                        }));

    reg.push_back(entry("lem.posmap", "sqrt(Phi(|A|^2)) <= K Phi(|A|) under C(|A|) accretive",
                        [](SplitMix64& rng, int dim, const SweepSettings& s) {
                            const Window w = draw_window(rng);
                            const Matrix a = gen_singular_band(rng, dim, w, s.fill);
                            return check_positive_map(a, w, draw_map(rng, dim), s.tol);
                        }));

    reg.push_back(entry("ineq.posmap_reverse", "Phi(|A|) <= sqrt(Phi(|A|^2)), unconditional",
                        [](SplitMix64& rng, int dim, const SweepSettings& s) {
                            const Matrix a = gen_unrestricted(rng, dim);
                            return check_positive_map_reverse(a, draw_map(rng, dim), s.tol);
                        }));

    for (const Variant v : disk_variants) {
        reg.push_back(entry(std::string("thm.reverse.") + variant_suffix(v),
                            "Re X <= K |X| under the singular band of X",
                            [v](SplitMix64& rng, int dim, const SweepSettings& s) {
                                const Window w = draw_window(rng);
                                Matrix a = gen_singular_band(rng, dim, w, s.fill);
                                if (v == Variant::IAstar) a = cdouble(0.0, -1.0) * adjoint(a);
                                if (v == Variant::Ainv) a = inverse(a);
                                return check_reverse(a, w, v, s.tol);
                            }));
    }

    for (const Variant v : anti_variants) {
        reg.push_back(entry(std::string("cor.real_minus_abs.") + variant_suffix(v),
                            "Re X - |X| <= c2 ||A|| I under the singular band",
                            [v](SplitMix64& rng, int dim, const SweepSettings& s) {
                                const Window w = draw_window(rng);
                                Matrix a = gen_singular_band(rng, dim, w, s.fill);
                                if (v == Variant::IAstar) a = cdouble(0.0, -1.0) * adjoint(a);
                                return check_real_minus_abs(a, w, v, s.tol);
                            }));
    }

    reg.push_back(entry("w.basic_bounds", "||A||/2 <= w(A) <= ||A||, ||Re A||, ||Im A|| <= w(A)",
                        [](SplitMix64& rng, int dim, const SweepSettings& s) {
                            return check_w_basic(gen_unrestricted(rng, dim), s.tol, s.eps);
                        }));

    reg.push_back(entry("w.vs_real", "w(A) <= K ||Re A|| under C(A) accretive",
                        [](SplitMix64& rng, int dim, const SweepSettings& s) {
                            const Window w = draw_window(rng);
                            const Matrix a = gen_disk(rng, dim, w, s.fill);
                            return check_w_bounds(a, w, s.tol, s.eps)[0];
                        }));

    reg.push_back(entry("norm.vs_w", "||A|| <= K w(A) under C(A) accretive",
                        [](SplitMix64& rng, int dim, const SweepSettings& s) {
                            const Window w = draw_window(rng);
                            const Matrix a = gen_disk(rng, dim, w, s.fill);
                            return check_w_bounds(a, w, s.tol, s.eps)[1];
                        }));

    reg.push_back(entry("w.geo_mean",
                        "w(A) <= K sqrt(||Re A|| ||Im A||), C(A) and C(iA*) accretive",
                        [](SplitMix64& rng, int dim, const SweepSettings& s) {
                            const Window w = draw_bidisk_window(rng);
                            const Matrix a = gen_bidisk(rng, dim, w, s.fill, Variant::IAstar);
                            return check_w_geo_mean(a, w, s.tol, s.eps, rng.next());
                        }));

    reg.push_back(entry("w.lower_sq",
                        "(2Mm/(M+m)^2) || |A|^2 + |A*|^2 || <= w(A)^2 under C(A) accretive",
                        [](SplitMix64& rng, int dim, const SweepSettings& s) {
                            const Window w = draw_window(rng);
                            const Matrix a = gen_disk(rng, dim, w, s.fill);
                            return check_w_lower_sq(a, w, s.tol, s.eps);
                        }));

    reg.push_back(entry("w.product", "w(AB) <= K_A K_B w(A) w(B) under both disk hypotheses",
                        [](SplitMix64& rng, int dim, const SweepSettings& s) {
                            const Window wa = draw_window(rng);
                            const Window wb = draw_window(rng);
                            const Matrix a = gen_disk(rng, dim, wa, s.fill);
                            const Matrix b = gen_disk(rng, dim, wb, s.fill);
                            return check_w_product(a, b, wa, wb, s.tol, s.eps);
                        }));

    reg.push_back(entry("w.commutator.minus", "w(AB - BA*) <= (M-m) w(B) under C(A) accretive",
                        [](SplitMix64& rng, int dim, const SweepSettings& s) {
                            const Window w = draw_window(rng);
                            const Matrix a = gen_disk(rng, dim, w, s.fill);
                            const Matrix b = gen_unrestricted(rng, dim);
                            return check_w_commutator(a, b, w, CommutatorForm::Minus, s.tol, s.eps);
                        }));

    reg.push_back(entry("w.commutator.plus", "w(AB + BA*) <= (M-m) w(B) under C(iA) accretive",
                        [](SplitMix64& rng, int dim, const SweepSettings& s) {
                            const Window w = draw_window(rng);
                            const Matrix a = cdouble(0.0, -1.0) * gen_disk(rng, dim, w, s.fill);
                            const Matrix b = gen_unrestricted(rng, dim);
                            return check_w_commutator(a, b, w, CommutatorForm::Plus, s.tol, s.eps);
                        }));

    reg.push_back(entry("cor.final",
                        "w(AB) + |w(AB+BA*) - w(AB-BA*)|/2 <= (M-m) w(B), C(A) and C(iA) accretive",
                        [](SplitMix64& rng, int dim, const SweepSettings& s) {
                            const Window w = draw_bidisk_window(rng);
                            const Matrix a = gen_bidisk(rng, dim, w, s.fill, Variant::IA);
                            const Matrix b = gen_unrestricted(rng, dim);
                            return check_final_corollary(a, b, w, s.tol, s.eps);
                        }));

    reg.push_back(entry("prop.mixed_schwarz",
                        "|<Ax,x>| <= sqrt(<|A|x,x> <|A*|x,x>) pointwise",
                        [](SplitMix64& rng, int dim, const SweepSettings& s) {
                            const Matrix a = gen_unrestricted(rng, dim);
                            return check_mixed_schwarz(a, s.tol, rng.next(), 100);
                        }));

    reg.push_back(entry("prop.norm_product", "||X Y|| <= ||X + Y||^2 / 4 for PSD X, Y",
                        [](SplitMix64& rng, int dim, const SweepSettings& s) {
                            const HermitianMatrix x = random_psd(rng, dim, 0.0, 2.0);
                            const HermitianMatrix y = random_psd(rng, dim, 0.0, 2.0);
                            return check_norm_product(x, y, s.tol);
                        }));

    return reg;
}

}  // namespace

const std::vector<CaseInfo>& catalog_registry() {
    static const std::vector<CaseInfo> reg = build_registry();
    return reg;
}

const CaseInfo* find_case(const std::string& id) {
    for (const CaseInfo& info : catalog_registry()) {
        if (info.id == id) return &info;
    }
    return nullptr;
}

}  // namespace accretive
