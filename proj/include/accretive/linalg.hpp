#pragma once

#include <utility>
#include <vector>

#include "accretive/types.hpp"
#include "accretive/verdict.hpp"

namespace accretive {

/// Eigendecomposition of a Hermitian matrix: X = V diag(values) V*,
/// values ascending, V unitary with eigenvectors in columns.
struct EigenDecomposition {
    std::vector<double> values;
    Matrix vectors;
};

/// Cyclic two-sided Jacobi iteration on the full complex Hermitian matrix.
/// Converges when the off-diagonal Frobenius mass drops below
/// 1e-13 * max(1, ||X||_F); throws std::runtime_error after 100 sweeps.
EigenDecomposition eig_hermitian(const HermitianMatrix& x);

/// Eigenvalues only (ascending); same iteration without accumulating vectors.
std::vector<double> eigvals_hermitian(const HermitianMatrix& x);

double lambda_min(const HermitianMatrix& x);
double lambda_max(const HermitianMatrix& x);

HermitianMatrix hermitian_part(const Matrix& a);
HermitianMatrix imaginary_part(const Matrix& a);

/// Largest singular value, computed as sqrt(lambda_max(A*A)).
double spectral_norm(const Matrix& a);

/// Singular values of A, ascending (eigenvalues of |A|).
std::vector<double> singular_values(const Matrix& a);

/// PSD square root via eigendecomposition. Eigenvalues within
/// -tol.rel*max(1,||X||) of zero are clamped to zero; more negative input
/// throws std::invalid_argument.
HermitianMatrix sqrt_psd(const HermitianMatrix& x, const Tolerance& tol = {});

/// |A| = (A*A)^{1/2} and |A*| = (AA*)^{1/2}.
HermitianMatrix abs_op(const Matrix& a);
HermitianMatrix abs_adjoint(const Matrix& a);

/// lambda_min(X) >= -tol.rel * max(1, ||X||).
bool is_psd(const HermitianMatrix& x, const Tolerance& tol = {});

/// Loewner order check X <= Y: passes iff
/// lambda_min(Y-X) >= -tol.rel * max(1, ||X||, ||Y||).
Verdict loewner_leq(const HermitianMatrix& x, const HermitianMatrix& y, const Tolerance& tol = {},
                    const std::string& case_id = "loewner");

/// [[0, S],[T*, 0]]; S and T must share dimension n, result is 2n x 2n.
Matrix block_off_diag(const Matrix& s, const Matrix& t);

/// Inverse by Gaussian elimination with partial pivoting.
/// Throws std::invalid_argument when a pivot vanishes.
Matrix inverse(const Matrix& a);

/// Agreement test for: X <= alpha*Y  iff  ||X^{1/2} Y^{-1/2}|| <= sqrt(alpha)
/// (X PSD, Y PD). Returns {agree, boundary}: boundary is set when alpha sits
/// within tol of the critical threshold ||Y^{-1/2} X Y^{-1/2}||, where the
/// two sides may legitimately disagree by rounding.
struct EquivalenceProbe {
    bool agree = false;
    bool boundary = false;
    bool lhs = false;
    bool rhs = false;
    double critical = 0.0;
};
EquivalenceProbe sqrt_leq_equiv(const HermitianMatrix& x, const HermitianMatrix& y, double alpha,
                                const Tolerance& tol = {});

/// Agreement test for: [[cI, X],[X*, cI]] PSD iff ||X|| <= c (c >= 0).
EquivalenceProbe psd_block_norm_equiv(const Matrix& x, double c, const Tolerance& tol = {});

}  // namespace accretive
