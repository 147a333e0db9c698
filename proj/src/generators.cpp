#include "accretive/generators.hpp"

#include <cmath>
#include <stdexcept>

#include "accretive/linalg.hpp"

namespace accretive {

Matrix random_matrix(SplitMix64& rng, int n) {
    Matrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = rng.cgauss();
    return a;
}

HermitianMatrix random_hermitian(SplitMix64& rng, int n) {
    return HermitianMatrix(random_matrix(rng, n));
}

HermitianMatrix random_psd(SplitMix64& rng, int n, double lo, double hi) {
    if (lo < 0.0 || hi < lo) throw std::invalid_argument("random_psd: need 0 <= lo <= hi");
    const Matrix u = random_unitary(rng, n);
    Matrix d(n);
    for (int i = 0; i < n; ++i) d(i, i) = rng.uniform(lo, hi);
    return HermitianMatrix(u * d * adjoint(u));
}

std::vector<cdouble> random_unit_vector(SplitMix64& rng, int n) {
    std::vector<cdouble> v(static_cast<size_t>(n));
    double norm2 = 0.0;
    while (norm2 < 1e-12) {
        norm2 = 0.0;
        for (auto& x : v) {
            x = rng.cgauss();
            norm2 += std::norm(x);
        }
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : v) x *= inv;
    return v;
}

Matrix random_isometry(SplitMix64& rng, int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("random_isometry: need 1 <= k <= n");
    // Gram-Schmidt on Gaussian columns; a near-dependent draw is retried.
    Matrix q(n);
    for (int col = 0; col < k; ++col) {
        for (int attempt = 0;; ++attempt) {
            if (attempt > 64) throw std::runtime_error("random_isometry: degenerate draws");
            std::vector<cdouble> v(static_cast<size_t>(n));
            for (auto& x : v) x = rng.cgauss();
            for (int prev = 0; prev < col; ++prev) {
                cdouble dot = 0.0;
                for (int i = 0; i < n; ++i) dot += std::conj(q(i, prev)) * v[static_cast<size_t>(i)];
                for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] -= dot * q(i, prev);
            }
            double norm2 = 0.0;
            for (const auto& x : v) norm2 += std::norm(x);
            if (norm2 < 1e-12) continue;
            const double inv = 1.0 / std::sqrt(norm2);
            for (int i = 0; i < n; ++i) q(i, col) = v[static_cast<size_t>(i)] * inv;
            break;
        }
    }
    if (k == n) return q;
    Matrix out(n);  // keep square storage; only the first k columns are used
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) out(i, j) = q(i, j);
    return out;
}

Matrix random_unitary(SplitMix64& rng, int n) { return random_isometry(rng, n, n); }

Matrix gen_disk(SplitMix64& rng, int n, const Window& w, double fill) {
    const WindowConstants c = window_constants(w);
    const Matrix b = random_matrix(rng, n);
    const double nb = spectral_norm(b);
    Matrix a = nb > 0.0 ? (fill * c.r / nb) * b : Matrix::zero(n);
    for (int i = 0; i < n; ++i) a(i, i) += c.mu;
    return a;
}

Matrix gen_bidisk(SplitMix64& rng, int n, const Window& w, double fill, Variant partner) {
    if (partner != Variant::IAstar && partner != Variant::IA)
        throw std::invalid_argument("gen_bidisk: partner must be iAstar or iA");
    const WindowConstants c = window_constants(w);
    const double reach = c.r - c.mu / std::sqrt(2.0);
    if (reach < 0.0)
        throw std::invalid_argument("gen_bidisk: window too narrow, needs M/m >= 3+2 sqrt(2)");
    const double sign = partner == Variant::IAstar ? 1.0 : -1.0;
    const cdouble z0 = 0.5 * c.mu * cdouble(1.0, sign);
    const Matrix b = random_matrix(rng, n);
    const double nb = spectral_norm(b);
    Matrix a = nb > 0.0 ? (fill * reach / nb) * b : Matrix::zero(n);
    for (int i = 0; i < n; ++i) a(i, i) += z0;
    return a;
}

Matrix gen_singular_band(SplitMix64& rng, int n, const Window& w, double fill) {
    const double margin = 0.5 * (1.0 - fill) * (w.M - w.m);
    const Matrix u = random_unitary(rng, n);
    const Matrix v = random_unitary(rng, n);
    Matrix d(n);
    for (int i = 0; i < n; ++i) d(i, i) = rng.uniform(w.m + margin, w.M - margin);
    return u * d * adjoint(v);
}

Matrix gen_jordan_like(SplitMix64& rng, int n) {
    Matrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) a(i, j) = rng.cgauss();
    if (n == 1) a(0, 0) = 0.0;
    return a;
}

Matrix gen_unrestricted(SplitMix64& rng, int n) { return random_matrix(rng, n); }

Matrix generate(SplitMix64& rng, const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorKind::Disk: return gen_disk(rng, spec.n, spec.window, spec.fill);
        case GeneratorKind::Bidisk:
            return gen_bidisk(rng, spec.n, spec.window, spec.fill, spec.partner);
        case GeneratorKind::SingularBand:
            return gen_singular_band(rng, spec.n, spec.window, spec.fill);
        case GeneratorKind::JordanLike: return gen_jordan_like(rng, spec.n);
        case GeneratorKind::Unrestricted: return gen_unrestricted(rng, spec.n);
    }
    throw std::invalid_argument("generate: bad kind");
}

}  // namespace accretive
