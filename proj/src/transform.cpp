#include "accretive/transform.hpp"

#include <cmath>
#include <sstream>

namespace accretive {

Window::Window(double m_, double M_) : m(m_), M(M_) {
    if (!(m > 0.0) || !(M > m) || !std::isfinite(m) || !std::isfinite(M))
        throw std::invalid_argument("Window: need 0 < m < M (finite)");
}

WindowConstants window_constants(const Window& w) {
    WindowConstants c;
    const double sum = w.M + w.m;
    const double root = std::sqrt(w.M * w.m);
    c.mu = 0.5 * sum;
    c.r = 0.5 * (w.M - w.m);
    c.K = sum / (2.0 * root);
    c.low_k = 2.0 * root / sum;
    c.diff = w.M - w.m;
    c.c1 = 1.0 - c.low_k;
    c.c2 = c.diff * c.diff / (2.0 * root);
    c.sq = 2.0 * w.M * w.m / (sum * sum);
    return c;
}

Matrix transform_C(const Matrix& a, const Window& w) {
    const Matrix left = cdouble(-1.0) * adjoint(a) + w.M * Matrix::identity(a.n());
    return left * shift(a, cdouble(w.m));
}

bool is_accretive(const Matrix& a, const Tolerance& tol, bool strict) {
    const std::vector<double> vals = eigvals_hermitian(hermitian_part(a));
    const double scale = std::max({1.0, std::abs(vals.front()), std::abs(vals.back())});
    if (strict) return vals.front() > tol.rel * scale;
    return vals.front() >= -tol.rel * scale;
}

bool is_dissipative(const Matrix& a, const Tolerance& tol, bool strict) {
    const std::vector<double> vals = eigvals_hermitian(imaginary_part(a));
    const double scale = std::max({1.0, std::abs(vals.front()), std::abs(vals.back())});
    if (strict) return vals.front() > tol.rel * scale;
    return vals.front() >= -tol.rel * scale;
}

bool accretive_via_disk(const Matrix& a, const Window& w, const Tolerance& tol) {
    const WindowConstants c = window_constants(w);
    return spectral_norm(shift(a, cdouble(c.mu))) <= c.r + tol.rel * std::max(1.0, c.r);
}

double identity_residual(const Matrix& a, const Window& w) {
    const WindowConstants c = window_constants(w);
    const HermitianMatrix re_c = hermitian_part(transform_C(a, w));
    const Matrix shifted = shift(a, cdouble(c.mu));
    const HermitianMatrix dist2(adjoint(shifted) * shifted);
    const HermitianMatrix residual = add_scaled_identity(re_c + dist2, -c.r * c.r);
    const std::vector<double> vals = eigvals_hermitian(residual);
    return std::max(std::abs(vals.front()), std::abs(vals.back()));
}

namespace {

Matrix times_i_adjoint(const Matrix& a) { return cdouble(0.0, 1.0) * adjoint(a); }

Verdict residual_verdict(const std::string& id, double residual, double scale, double rel_tol) {
    Verdict v;
    v.case_id = id;
    v.hypothesis_met = true;
    v.relation = "scalar";
    v.lhs_summary = residual;
    v.rhs_summary = rel_tol * scale;
    v.slack = v.rhs_summary - residual;
    v.slack_norm = v.slack / std::max(1.0, v.rhs_summary);
    v.pass = residual <= rel_tol * scale;
    return v;
}

}  // namespace

std::vector<Verdict> prop_checks(const Matrix& a, const Window& w, const Tolerance& tol) {
    std::vector<Verdict> out;
    const WindowConstants c = window_constants(w);
    const Matrix astar = adjoint(a);
    const Matrix ca = transform_C(a, w);
    const Matrix ca_star = adjoint(ca);
    const double norm_a = spectral_norm(a);

    {
        // (1) C*(A) - C(A*) = |A*|^2 - |A|^2; both vanish exactly when A is normal.
        const Matrix lhs = ca_star - transform_C(astar, w);
        const Matrix rhs = a * astar - astar * a;
        const double scale = std::max(1.0, norm_a * norm_a);
        Verdict v = residual_verdict("prop.1", spectral_norm(lhs - rhs), scale, 1e-12);
        std::ostringstream os;
        os << "|C(A*)-C*(A)|=" << spectral_norm(lhs) << " |AA*-A*A|=" << spectral_norm(rhs);
        v.details = os.str();
        out.push_back(v);
    }
    {
        // (2) ||C(A) - C*(A)|| = (M-m) ||A - A*||.
        const double lhs = spectral_norm(ca - ca_star);
        const double rhs = c.diff * spectral_norm(a - astar);
        const double scale = std::max(1.0, rhs);
        out.push_back(residual_verdict("prop.2", std::abs(lhs - rhs), scale, 1e-12));
        out.back().lhs_summary = lhs;
        out.back().rhs_summary = rhs;
    }
    {
        // (3) C(|A|) accretive iff every singular value lies in [m, M].
        const std::vector<double> sv = singular_values(a);
        const double band = tol.rel * std::max(1.0, w.M);
        const bool band_side = sv.front() >= w.m - band && sv.back() <= w.M + band;
        const bool boundary = std::abs(sv.front() - w.m) <= 8.0 * band ||
                              std::abs(sv.back() - w.M) <= 8.0 * band;
        const bool accr = is_accretive(transform_C(abs_op(a).mat(), w), tol);
        Verdict v;
        v.case_id = "prop.3";
        v.relation = "scalar";
        v.hypothesis_met = !boundary;
        v.lhs_summary = accr ? 1.0 : 0.0;
        v.rhs_summary = band_side ? 1.0 : 0.0;
        v.slack = std::min(sv.front() - w.m, w.M - sv.back());
        v.slack_norm = v.slack / std::max(1.0, w.M);
        v.pass = v.hypothesis_met && accr == band_side;
        v.details = boundary ? "boundary" : (band_side ? "band" : "outside");
        out.push_back(v);
    }
    {
        // (4) Re C(A) <= r^2 I and Re C(iA*) <= r^2 I, unconditionally.
        const HermitianMatrix cap = HermitianMatrix::scaled_identity(a.n(), c.r * c.r);
        const Verdict v1 = loewner_leq(hermitian_part(ca), cap, tol, "prop.4");
        const Verdict v2 =
            loewner_leq(hermitian_part(transform_C(times_i_adjoint(a), w)), cap, tol, "prop.4");
        Verdict v = v1;
        if (v2.slack_norm < v.slack_norm) {
            v = v2;
            v.details = "binding:iA*";
        } else {
            v.details = "binding:A";
        }
        v.pass = v1.pass && v2.pass;
        out.push_back(v);
    }
    {
        // (5) Im C(A) = (M-m) Im A.
        const HermitianMatrix lhs = imaginary_part(ca);
        const HermitianMatrix rhs = c.diff * imaginary_part(a);
        const HermitianMatrix diff = lhs - rhs;
        const std::vector<double> vals = eigvals_hermitian(diff);
        const double resid = std::max(std::abs(vals.front()), std::abs(vals.back()));
        const double scale = std::max(1.0, c.diff * norm_a);
        out.push_back(residual_verdict("prop.5", resid, scale, 1e-12));
    }
    {
        // (6) C(A) accretive implies A accretive.
        const bool hyp = is_accretive(ca, tol);
        Verdict v;
        v.case_id = "prop.6";
        v.relation = "scalar";
        v.hypothesis_met = hyp;
        const double lam = lambda_min(hermitian_part(a));
        v.lhs_summary = 0.0;
        v.rhs_summary = lam;
        v.slack = lam;
        v.slack_norm = lam / std::max(1.0, norm_a);
        v.pass = hyp && is_accretive(a, tol);
        v.details = hyp ? "" : "transform not accretive";
        out.push_back(v);
    }
    {
        // (7) C(A) accretive and dissipative implies the same for A.
        const bool hyp = is_accretive(ca, tol) && is_dissipative(ca, tol);
        Verdict v;
        v.case_id = "prop.7";
        v.relation = "scalar";
        v.hypothesis_met = hyp;
        const double lam_re = lambda_min(hermitian_part(a));
        const double lam_im = lambda_min(imaginary_part(a));
        v.lhs_summary = 0.0;
        v.rhs_summary = std::min(lam_re, lam_im);
        v.slack = v.rhs_summary;
        v.slack_norm = v.slack / std::max(1.0, norm_a);
        v.pass = hyp && is_accretive(a, tol) && is_dissipative(a, tol);
        v.details = hyp ? "" : "transform not accretive-dissipative";
        out.push_back(v);
    }
    return out;
}

}  // namespace accretive
