#include "accretive/types.hpp"

#include <cmath>

namespace accretive {

void require_same_dim(const Matrix& x, const Matrix& y, const char* what) {
    if (x.n() != y.n()) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    require_same_dim(x, y, "operator+");
    Matrix r(x.n());
    for (size_t i = 0; i < x.data().size(); ++i) r.data()[i] = x.data()[i] + y.data()[i];
    return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
    require_same_dim(x, y, "operator-");
    Matrix r(x.n());
    for (size_t i = 0; i < x.data().size(); ++i) r.data()[i] = x.data()[i] - y.data()[i];
    return r;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    require_same_dim(x, y, "operator*");
    const int n = x.n();
    Matrix r(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const cdouble xik = x(i, k);
            if (xik == cdouble{}) continue;
            for (int j = 0; j < n; ++j) r(i, j) += xik * y(k, j);
        }
    }
    return r;
}

Matrix operator*(cdouble s, const Matrix& x) {
    Matrix r(x.n());
    for (size_t i = 0; i < x.data().size(); ++i) r.data()[i] = s * x.data()[i];
    return r;
}

Matrix adjoint(const Matrix& x) {
    const int n = x.n();
    Matrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = std::conj(x(j, i));
    return r;
}

Matrix shift(const Matrix& x, cdouble s) {
    Matrix r = x;
    for (int i = 0; i < x.n(); ++i) r(i, i) -= s;
    return r;
}

double frobenius_norm(const Matrix& x) {
    double ss = 0.0;
    for (const cdouble& v : x.data()) ss += std::norm(v);
    return std::sqrt(ss);
}

double max_abs_entry(const Matrix& x) {
    double m = 0.0;
    for (const cdouble& v : x.data()) m = std::max(m, std::abs(v));
    return m;
}

bool all_finite(const Matrix& x) {
    for (const cdouble& v : x.data())
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

HermitianMatrix::HermitianMatrix(const Matrix& x) : m_(x.n()) {
    const int n = x.n();
    for (int i = 0; i < n; ++i) {
        m_(i, i) = 0.5 * (x(i, i).real() + std::conj(x(i, i)).real());
        for (int j = i + 1; j < n; ++j) {
            const cdouble v = 0.5 * (x(i, j) + std::conj(x(j, i)));
            m_(i, j) = v;
            m_(j, i) = std::conj(v);
        }
    }
}

HermitianMatrix HermitianMatrix::scaled_identity(int n, double c) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = c;
    return HermitianMatrix(std::move(m), already_hermitian_tag{});
}

HermitianMatrix operator+(const HermitianMatrix& x, const HermitianMatrix& y) {
    require_same_dim(x.mat(), y.mat(), "HermitianMatrix+");
    const int n = x.n();
    Matrix r(n);
    for (int i = 0; i < n; ++i) {
        r(i, i) = x(i, i).real() + y(i, i).real();
        for (int j = i + 1; j < n; ++j) {
            const cdouble v = x(i, j) + y(i, j);
            r(i, j) = v;
            r(j, i) = std::conj(v);
        }
    }
    return HermitianMatrix(std::move(r), HermitianMatrix::already_hermitian_tag{});
}

HermitianMatrix operator-(const HermitianMatrix& x, const HermitianMatrix& y) {
    require_same_dim(x.mat(), y.mat(), "HermitianMatrix-");
    const int n = x.n();
    Matrix r(n);
    for (int i = 0; i < n; ++i) {
        r(i, i) = x(i, i).real() - y(i, i).real();
        for (int j = i + 1; j < n; ++j) {
            const cdouble v = x(i, j) - y(i, j);
            r(i, j) = v;
            r(j, i) = std::conj(v);
        }
    }
    return HermitianMatrix(std::move(r), HermitianMatrix::already_hermitian_tag{});
}

HermitianMatrix operator*(double s, const HermitianMatrix& x) {
    const int n = x.n();
    Matrix r(n);
    for (int i = 0; i < n; ++i) {
        r(i, i) = s * x(i, i).real();
        for (int j = i + 1; j < n; ++j) {
            const cdouble v = s * x(i, j);
            r(i, j) = v;
            r(j, i) = std::conj(v);
        }
    }
    return HermitianMatrix(std::move(r), HermitianMatrix::already_hermitian_tag{});
}

HermitianMatrix add_scaled_identity(const HermitianMatrix& x, double c) {
    Matrix r = x.mat();
    for (int i = 0; i < x.n(); ++i) r(i, i) = x(i, i).real() + c;
    return HermitianMatrix(std::move(r), HermitianMatrix::already_hermitian_tag{});
}

}  // namespace accretive
