#include "accretive/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace accretive {

namespace {

// In-place cyclic complex Jacobi on row-major Hermitian data. Rotations zero
// one off-diagonal pair at a time; a sweep visits every p<q. Converged when
// the off-diagonal Frobenius mass is below 1e-13 * max(1, initial ||X||_F).
// v, when present, accumulates the rotations (columns become eigenvectors).
void jacobi_iterate(std::vector<cdouble>& a, int n, std::vector<cdouble>* v) {
    double norm0 = 0.0;
    for (const cdouble& z : a) norm0 += std::norm(z);
    norm0 = std::sqrt(norm0);
    const double thresh = 1e-13 * std::max(1.0, norm0);
    // Entries this small cannot push the off-diagonal mass over the
    // threshold, so rotating on them is wasted work.
    const double skip = 0.1 * thresh / std::max(1, n);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off2 = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off2 += std::norm(a[p * n + q]);
        if (std::sqrt(2.0 * off2) <= thresh) return;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cdouble b = a[p * n + q];
                const double ab = std::abs(b);
                if (ab <= skip) continue;

                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                const double tau = (app - aqq) / (2.0 * ab);
                const double hyp = std::hypot(1.0, tau);
                // Smaller root of t^2 - 2 tau t - 1 = 0 for a stable angle.
                const double t = (tau >= 0.0) ? -1.0 / (tau + hyp) : 1.0 / (-tau + hyp);
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sigma = t * c;
                const cdouble phase = b / ab;
                const cdouble s = sigma * phase;
                const cdouble sconj = std::conj(s);

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const cdouble kp = a[k * n + p];
                    const cdouble kq = a[k * n + q];
                    const cdouble nkp = c * kp - sconj * kq;
                    const cdouble nkq = s * kp + c * kq;
                    a[k * n + p] = nkp;
                    a[k * n + q] = nkq;
                    a[p * n + k] = std::conj(nkp);
                    a[q * n + k] = std::conj(nkq);
                }
                a[p * n + p] = c * c * app + sigma * sigma * aqq - 2.0 * c * sigma * ab;
                a[q * n + q] = sigma * sigma * app + c * c * aqq + 2.0 * c * sigma * ab;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                if (v) {
                    std::vector<cdouble>& vv = *v;
                    for (int k = 0; k < n; ++k) {
                        const cdouble kp = vv[k * n + p];
                        const cdouble kq = vv[k * n + q];
                        vv[k * n + p] = c * kp - sconj * kq;
                        vv[k * n + q] = s * kp + c * kq;
                    }
                }
            }
        }
    }
    throw std::runtime_error("eig_hermitian: Jacobi iteration did not converge in 100 sweeps");
}

double hermitian_spectral_norm(const HermitianMatrix& x) {
    const std::vector<double> vals = eigvals_hermitian(x);
    return std::max(std::abs(vals.front()), std::abs(vals.back()));
}

}  // namespace

std::vector<double> eigvals_hermitian(const HermitianMatrix& x) {
    const int n = x.n();
    if (n == 1) return {x(0, 0).real()};
    if (n == 2) {
        const double a = x(0, 0).real();
        const double d = x(1, 1).real();
        const double mid = 0.5 * (a + d);
        const double h = std::hypot(0.5 * (a - d), std::abs(x(0, 1)));
        return {mid - h, mid + h};
    }
    std::vector<cdouble> a = x.mat().data();
    jacobi_iterate(a, n, nullptr);
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = a[static_cast<size_t>(i) * n + i].real();
    std::sort(vals.begin(), vals.end());
    return vals;
}

EigenDecomposition eig_hermitian(const HermitianMatrix& x) {
    const int n = x.n();
    std::vector<cdouble> a = x.mat().data();
    std::vector<cdouble> v(static_cast<size_t>(n) * n, cdouble{});
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;
    jacobi_iterate(a, n, &v);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return a[static_cast<size_t>(i) * n + i].real() < a[static_cast<size_t>(j) * n + j].real();
    });

    EigenDecomposition dec;
    dec.values.resize(n);
    dec.vectors = Matrix(n);
    for (int c = 0; c < n; ++c) {
        const int src = order[c];
        dec.values[c] = a[static_cast<size_t>(src) * n + src].real();
        for (int r = 0; r < n; ++r) dec.vectors(r, c) = v[static_cast<size_t>(r) * n + src];
    }
    return dec;
}

double lambda_min(const HermitianMatrix& x) { return eigvals_hermitian(x).front(); }
double lambda_max(const HermitianMatrix& x) { return eigvals_hermitian(x).back(); }

HermitianMatrix hermitian_part(const Matrix& a) { return HermitianMatrix(a); }

HermitianMatrix imaginary_part(const Matrix& a) {
    // (A - A*)/(2i), entrywise so the result is Hermitian before symmetrizing.
    const int n = a.n();
    Matrix m(n);
    const cdouble half_over_i(0.0, -0.5);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = half_over_i * (a(i, j) - std::conj(a(j, i)));
    return HermitianMatrix(m);
}

double spectral_norm(const Matrix& a) {
    const HermitianMatrix gram(adjoint(a) * a);
    return std::sqrt(std::max(0.0, lambda_max(gram)));
}

std::vector<double> singular_values(const Matrix& a) {
    const HermitianMatrix gram(adjoint(a) * a);
    std::vector<double> vals = eigvals_hermitian(gram);
    for (double& v : vals) v = std::sqrt(std::max(0.0, v));
    return vals;
}

HermitianMatrix sqrt_psd(const HermitianMatrix& x, const Tolerance& tol) {
    const EigenDecomposition dec = eig_hermitian(x);
    const double scale =
        std::max({1.0, std::abs(dec.values.front()), std::abs(dec.values.back())});
    if (dec.values.front() < -tol.rel * scale)
        throw std::invalid_argument("sqrt_psd: matrix is not positive semidefinite");
    const int n = x.n();
    std::vector<double> roots(n);
    for (int i = 0; i < n; ++i) roots[i] = std::sqrt(std::max(0.0, dec.values[i]));
    Matrix s(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            cdouble acc{};
            for (int k = 0; k < n; ++k)
                acc += roots[k] * dec.vectors(i, k) * std::conj(dec.vectors(j, k));
            s(i, j) = acc;
            if (j != i) s(j, i) = std::conj(acc);
        }
    }
    return HermitianMatrix(s);
}

HermitianMatrix abs_op(const Matrix& a) { return sqrt_psd(HermitianMatrix(adjoint(a) * a)); }
HermitianMatrix abs_adjoint(const Matrix& a) { return sqrt_psd(HermitianMatrix(a * adjoint(a))); }

bool is_psd(const HermitianMatrix& x, const Tolerance& tol) {
    const std::vector<double> vals = eigvals_hermitian(x);
    const double scale = std::max({1.0, std::abs(vals.front()), std::abs(vals.back())});
    return vals.front() >= -tol.rel * scale;
}

Verdict loewner_leq(const HermitianMatrix& x, const HermitianMatrix& y, const Tolerance& tol,
                    const std::string& case_id) {
    require_same_dim(x.mat(), y.mat(), "loewner_leq");
    const double nx = hermitian_spectral_norm(x);
    const double ny = hermitian_spectral_norm(y);
    const double scale = std::max({1.0, nx, ny});
    const double slack = lambda_min(y - x);

    Verdict v;
    v.case_id = case_id;
    v.hypothesis_met = true;
    v.relation = "loewner";
    v.lhs_summary = nx;
    v.rhs_summary = ny;
    v.slack = slack;
    v.slack_norm = slack / scale;
    v.pass = v.slack_norm >= -tol.rel;
    return v;
}

Matrix block_off_diag(const Matrix& s, const Matrix& t) {
    require_same_dim(s, t, "block_off_diag");
    const int n = s.n();
    Matrix b(2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            b(i, n + j) = s(i, j);
            b(n + i, j) = std::conj(t(j, i));
        }
    }
    return b;
}

Matrix inverse(const Matrix& a) {
    const int n = a.n();
    // Augmented [A | I], partial pivoting.
    std::vector<cdouble> w(static_cast<size_t>(n) * 2 * n, cdouble{});
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w[static_cast<size_t>(i) * 2 * n + j] = a(i, j);
        w[static_cast<size_t>(i) * 2 * n + n + i] = 1.0;
    }
    const int stride = 2 * n;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(w[static_cast<size_t>(col) * stride + col]);
        for (int r = col + 1; r < n; ++r) {
            const double mag = std::abs(w[static_cast<size_t>(r) * stride + col]);
            if (mag > best) {
                best = mag;
                piv = r;
            }
        }
        if (best < 1e-250) throw std::invalid_argument("inverse: matrix is singular");
        if (piv != col)
            for (int j = 0; j < stride; ++j)
                std::swap(w[static_cast<size_t>(piv) * stride + j],
                          w[static_cast<size_t>(col) * stride + j]);
        const cdouble d = w[static_cast<size_t>(col) * stride + col];
        for (int j = 0; j < stride; ++j) w[static_cast<size_t>(col) * stride + j] /= d;
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const cdouble f = w[static_cast<size_t>(r) * stride + col];
            if (f == cdouble{}) continue;
            for (int j = 0; j < stride; ++j)
                w[static_cast<size_t>(r) * stride + j] -= f * w[static_cast<size_t>(col) * stride + j];
        }
    }
    Matrix inv(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = w[static_cast<size_t>(i) * stride + n + j];
    return inv;
}

EquivalenceProbe sqrt_leq_equiv(const HermitianMatrix& x, const HermitianMatrix& y, double alpha,
                                const Tolerance& tol) {
    require_same_dim(x.mat(), y.mat(), "sqrt_leq_equiv");
    if (alpha < 0.0) throw std::invalid_argument("sqrt_leq_equiv: alpha must be nonnegative");
    const EigenDecomposition dy = eig_hermitian(y);
    const double yscale = std::max({1.0, std::abs(dy.values.front()), std::abs(dy.values.back())});
    if (dy.values.front() <= tol.rel * yscale)
        throw std::invalid_argument("sqrt_leq_equiv: Y must be positive definite");

    const int n = y.n();
    Matrix yinvhalf(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            cdouble acc{};
            for (int k = 0; k < n; ++k)
                acc += (1.0 / std::sqrt(dy.values[k])) * dy.vectors(i, k) * std::conj(dy.vectors(j, k));
            yinvhalf(i, j) = acc;
            if (j != i) yinvhalf(j, i) = std::conj(acc);
        }
    }

    EquivalenceProbe probe;
    probe.critical = lambda_max(HermitianMatrix(yinvhalf * x.mat() * yinvhalf));
    probe.lhs = loewner_leq(x, HermitianMatrix(alpha * y.mat()), tol).pass;
    const double norm = spectral_norm(sqrt_psd(x, tol).mat() * yinvhalf);
    probe.rhs = norm <= std::sqrt(alpha) + tol.rel * std::max(1.0, std::sqrt(alpha));
    probe.agree = probe.lhs == probe.rhs;
    probe.boundary = std::abs(alpha - probe.critical) <= 8.0 * tol.rel * std::max(1.0, probe.critical);
    return probe;
}

EquivalenceProbe psd_block_norm_equiv(const Matrix& x, double c, const Tolerance& tol) {
    if (c < 0.0) throw std::invalid_argument("psd_block_norm_equiv: c must be nonnegative");
    const int n = x.n();
    Matrix block(2 * n);
    for (int i = 0; i < n; ++i) {
        block(i, i) = c;
        block(n + i, n + i) = c;
        for (int j = 0; j < n; ++j) {
            block(i, n + j) = x(i, j);
            block(n + j, i) = std::conj(x(i, j));
        }
    }
    EquivalenceProbe probe;
    const double norm = spectral_norm(x);
    probe.critical = norm;
    probe.lhs = is_psd(HermitianMatrix(block), tol);
    probe.rhs = norm <= c + tol.rel * std::max(1.0, c);
    probe.agree = probe.lhs == probe.rhs;
    probe.boundary = std::abs(norm - c) <= 8.0 * tol.rel * std::max(1.0, c);
    return probe;
}

}  // namespace accretive
