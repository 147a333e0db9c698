#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace accretive {

using cdouble = std::complex<double>;

/// Relative tolerance used by all order predicates. Scales are always taken
/// as max(1, norm of the operands) so the tolerance stays meaningful near 0.
struct Tolerance {
    double rel = 1e-8;
};

/// Dense square complex matrix, row-major.
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(int n) : n_(check_dim(n)), a_(static_cast<size_t>(n) * n) {}

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static Matrix zero(int n) { return Matrix(n); }

    int n() const { return n_; }

    cdouble& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const cdouble& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    std::vector<cdouble>& data() { return a_; }
    const std::vector<cdouble>& data() const { return a_; }

  private:
    static int check_dim(int n) {
        if (n <= 0) throw std::invalid_argument("Matrix: dimension must be positive");
        return n;
    }
    int n_ = 0;
    std::vector<cdouble> a_;
};

Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator*(cdouble s, const Matrix& x);
inline Matrix operator*(double s, const Matrix& x) { return cdouble(s, 0.0) * x; }

Matrix adjoint(const Matrix& x);

/// x - s*I without building the identity.
Matrix shift(const Matrix& x, cdouble s);

double frobenius_norm(const Matrix& x);
double max_abs_entry(const Matrix& x);
bool all_finite(const Matrix& x);

void require_same_dim(const Matrix& x, const Matrix& y, const char* what);

/// Hermitian matrix with exact conjugate symmetry in storage. Construction
/// symmetrizes the input as (X+X*)/2; the mirrored triangle is stored as the
/// exact conjugate so X == X* holds bit-for-bit.
class HermitianMatrix {
  public:
    explicit HermitianMatrix(const Matrix& x);

    static HermitianMatrix scaled_identity(int n, double c);
    static HermitianMatrix identity(int n) { return scaled_identity(n, 1.0); }
    static HermitianMatrix zero(int n) { return scaled_identity(n, 0.0); }

    int n() const { return m_.n(); }
    const Matrix& mat() const { return m_; }
    cdouble operator()(int i, int j) const { return m_(i, j); }

  private:
    struct already_hermitian_tag {};
    HermitianMatrix(Matrix m, already_hermitian_tag) : m_(std::move(m)) {}
    Matrix m_;

    friend HermitianMatrix operator+(const HermitianMatrix& x, const HermitianMatrix& y);
    friend HermitianMatrix operator-(const HermitianMatrix& x, const HermitianMatrix& y);
    friend HermitianMatrix operator*(double s, const HermitianMatrix& x);
    friend HermitianMatrix add_scaled_identity(const HermitianMatrix& x, double c);
};

HermitianMatrix operator+(const HermitianMatrix& x, const HermitianMatrix& y);
HermitianMatrix operator-(const HermitianMatrix& x, const HermitianMatrix& y);
HermitianMatrix operator*(double s, const HermitianMatrix& x);
/// x + c*I, exact on the diagonal.
HermitianMatrix add_scaled_identity(const HermitianMatrix& x, double c);

}  // namespace accretive
