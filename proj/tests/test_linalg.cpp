#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "accretive/generators.hpp"
#include "accretive/linalg.hpp"
#include "accretive/rng.hpp"
#include "doctest.h"

using namespace accretive;

namespace {

// Characteristic-polynomial eigenvalues of [[a, b],[conj(b), c]], ascending.
// Independent of the Jacobi path under test.
std::pair<double, double> eig2x2(double a, cdouble b, double c) {
    const double mean = 0.5 * (a + c);
    const double disc = std::hypot(0.5 * (a - c), std::abs(b));
    return {mean - disc, mean + disc};
}

Matrix diag_matrix(const std::vector<double>& d) {
    Matrix m(static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

double fro(const Matrix& x) { return frobenius_norm(x); }

}  // namespace

TEST_CASE("eig_hermitian matches the 2x2 closed form") {
    SplitMix64 rng(0x11A6ULL);
    for (int trial = 0; trial < 1000; ++trial) {
        const double a = rng.uniform(-5.0, 5.0);
        const double c = rng.uniform(-5.0, 5.0);
        const cdouble b{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
        Matrix m(2);
        m(0, 0) = a;
        m(0, 1) = b;
        m(1, 0) = std::conj(b);
        m(1, 1) = c;
        const auto [lo, hi] = eig2x2(a, b, c);
        const std::vector<double> got = eigvals_hermitian(HermitianMatrix(m));
        REQUIRE(got.size() == 2);
        const double band = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
        CHECK(std::abs(got[0] - lo) <= band);
        CHECK(std::abs(got[1] - hi) <= band);
    }
}

TEST_CASE("eig_hermitian fixed values") {
    // trace 5, det 6 - |1+i|^2 = 4: eigenvalues 1 and 4.
    Matrix m(2);
    m(0, 0) = 2.0;
    m(0, 1) = cdouble(1.0, 1.0);
    m(1, 0) = cdouble(1.0, -1.0);
    m(1, 1) = 3.0;
    const std::vector<double> vals = eigvals_hermitian(HermitianMatrix(m));
    CHECK(std::abs(vals[0] - 1.0) <= 1e-12);
    CHECK(std::abs(vals[1] - 4.0) <= 1e-12);

    const std::vector<double> d = eigvals_hermitian(HermitianMatrix(diag_matrix({3.0, 2.0})));
    CHECK(d[0] == 2.0);
    CHECK(d[1] == 3.0);
}

TEST_CASE("eig_hermitian reconstruction and unitarity up to n=64") {
    SplitMix64 rng(0xE16ULL);
    for (const int n : {1, 2, 3, 5, 8, 13, 21, 34, 64}) {
        const HermitianMatrix x = random_hermitian(rng, n);
        const EigenDecomposition ed = eig_hermitian(x);
        REQUIRE(static_cast<int>(ed.values.size()) == n);
        CHECK(std::is_sorted(ed.values.begin(), ed.values.end()));

        const Matrix recon = ed.vectors * diag_matrix(ed.values) * adjoint(ed.vectors);
        const double scale = std::max(1.0, fro(x.mat()));
        CHECK(fro(recon - x.mat()) <= 1e-10 * scale);
        CHECK(fro(adjoint(ed.vectors) * ed.vectors - Matrix::identity(n)) <= 1e-10);
    }
}

TEST_CASE("eigvals agree with the vector-accumulating path") {
    SplitMix64 rng(0xA11ULL);
    const HermitianMatrix x = random_hermitian(rng, 7);
    const std::vector<double> v1 = eigvals_hermitian(x);
    const std::vector<double> v2 = eig_hermitian(x).values;
    for (size_t i = 0; i < v1.size(); ++i) CHECK(std::abs(v1[i] - v2[i]) <= 1e-13);
}

TEST_CASE("hermitian and imaginary parts") {
    Matrix j(2);
    j(0, 1) = 1.0;
    const HermitianMatrix re = hermitian_part(j);
    CHECK(re(0, 0) == 0.0);
    CHECK(re(0, 1) == cdouble(0.5, 0.0));
    CHECK(re(1, 0) == cdouble(0.5, 0.0));

    Matrix a(2);
    a(0, 0) = cdouble(5.0, -4.0);
    a(0, 1) = cdouble(0.0, 2.0);
    a(1, 0) = cdouble(1.0, 1.0);
    a(1, 1) = 6.0;
    // (0,1) entry of (A+A*)/2 is (2i + conj(1+i))/2 = (1+i)/2.
    CHECK(std::abs(hermitian_part(a)(0, 1) - cdouble(0.5, 0.5)) <= 1e-15);

    // A = Re A + i Im A reconstructs.
    SplitMix64 rng(0x77);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix x = random_matrix(rng, 4);
        const Matrix recon = hermitian_part(x).mat() + cdouble(0.0, 1.0) * imaginary_part(x).mat();
        CHECK(fro(recon - x) <= 1e-14 * std::max(1.0, fro(x)));
    }

    const HermitianMatrix h = random_hermitian(rng, 3);
    CHECK(fro(imaginary_part(h.mat()).mat()) <= 1e-15);
}

TEST_CASE("spectral norm and singular values") {
    Matrix a(2);
    a(0, 0) = 3.0;
    a(1, 0) = 4.0;
    CHECK(std::abs(spectral_norm(a) - 5.0) <= 1e-12);
    const std::vector<double> sv = singular_values(a);
    CHECK(std::abs(sv.front() - 0.0) <= 1e-12);
    CHECK(std::abs(sv.back() - 5.0) <= 1e-12);

    SplitMix64 rng(0x51);
    for (int trial = 0; trial < 100; ++trial) {
        const Matrix x = random_matrix(rng, 2 + static_cast<int>(rng.next() % 4));
        CHECK(std::abs(spectral_norm(x) - singular_values(x).back()) <=
              1e-11 * std::max(1.0, spectral_norm(x)));
    }
}

TEST_CASE("sqrt_psd squares back and clamps the tolerance band") {
    Matrix m(2);
    m(0, 0) = 2.0;
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    m(1, 1) = 2.0;
    const HermitianMatrix x(m);
    const HermitianMatrix s = sqrt_psd(x);
    CHECK(fro(s.mat() * s.mat() - x.mat()) <= 1e-12);

    const HermitianMatrix root = sqrt_psd(HermitianMatrix(diag_matrix({4.0, 9.0})));
    CHECK(std::abs(root(0, 0) - cdouble(2.0)) <= 1e-13);
    CHECK(std::abs(root(1, 1) - cdouble(3.0)) <= 1e-13);

    // -1e-12 sits inside the default band and clamps to zero.
    const HermitianMatrix near = sqrt_psd(HermitianMatrix(diag_matrix({-1e-12, 1.0})));
    CHECK(near(0, 0) == 0.0);
    CHECK_THROWS_AS(sqrt_psd(HermitianMatrix(diag_matrix({-1.0, 1.0}))), std::invalid_argument);
}

TEST_CASE("abs_op fixed values") {
    Matrix j(2);
    j(0, 1) = 1.0;
    const HermitianMatrix abs_j = abs_op(j);        // sqrt(A*A) = diag(0,1)
    const HermitianMatrix abs_ja = abs_adjoint(j);  // sqrt(AA*) = diag(1,0)
    CHECK(std::abs(abs_j(0, 0)) <= 1e-14);
    CHECK(std::abs(abs_j(1, 1) - cdouble(1.0)) <= 1e-14);
    CHECK(std::abs(abs_ja(0, 0) - cdouble(1.0)) <= 1e-14);
    CHECK(std::abs(abs_ja(1, 1)) <= 1e-14);

    SplitMix64 rng(0xABCD);
    const Matrix u = random_unitary(rng, 4);
    CHECK(fro(abs_op(u).mat() - Matrix::identity(4)) <= 1e-11);
}

TEST_CASE("loewner_leq slack and band") {
    const Verdict pass = loewner_leq(HermitianMatrix(diag_matrix({1.0, 2.0})),
                                     HermitianMatrix(diag_matrix({2.0, 3.0})));
    CHECK(pass.pass);
    CHECK(pass.relation == "loewner");
    CHECK(std::abs(pass.slack - 1.0) <= 1e-14);

    const Verdict fail = loewner_leq(HermitianMatrix(diag_matrix({1.0, 2.0})),
                                     HermitianMatrix(diag_matrix({0.0, 3.0})));
    CHECK_FALSE(fail.pass);
    CHECK(std::abs(fail.slack + 1.0) <= 1e-14);

    // Rounding-level violation passes inside the relative band.
    const Verdict near = loewner_leq(HermitianMatrix(diag_matrix({1.0 + 1e-12, 2.0})),
                                     HermitianMatrix(diag_matrix({1.0, 3.0})));
    CHECK(near.pass);
}

TEST_CASE("is_psd near the boundary") {
    CHECK(is_psd(HermitianMatrix(diag_matrix({0.0, 1.0}))));
    CHECK(is_psd(HermitianMatrix(diag_matrix({-1e-10, 1.0}))));
    CHECK_FALSE(is_psd(HermitianMatrix(diag_matrix({-1e-3, 1.0}))));
}

TEST_CASE("inverse round trip and singular rejection") {
    SplitMix64 rng(0x1771);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 4);
        const Matrix a = random_matrix(rng, n) + 3.0 * Matrix::identity(n);
        CHECK(fro(a * inverse(a) - Matrix::identity(n)) <= 1e-11 * std::max(1.0, fro(a)));
    }
    Matrix s(2);
    s(0, 0) = 1.0;
    s(0, 1) = 1.0;
    s(1, 0) = 1.0;
    s(1, 1) = 1.0;
    CHECK_THROWS_AS(inverse(s), std::invalid_argument);
}

TEST_CASE("block_off_diag layout") {
    SplitMix64 rng(0xB10C);
    const Matrix s = random_matrix(rng, 3);
    const Matrix t = random_matrix(rng, 3);
    const Matrix x = block_off_diag(s, t);
    REQUIRE(x.n() == 6);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(x(i, j) == 0.0);
            CHECK(x(3 + i, 3 + j) == 0.0);
            CHECK(x(i, 3 + j) == s(i, j));
            CHECK(x(3 + i, j) == std::conj(t(j, i)));
        }
}

TEST_CASE("sqrt_leq_equiv agrees off the boundary") {
    SplitMix64 rng(0x5E5E);
    int boundary = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 4);
        const HermitianMatrix x = random_psd(rng, n, 0.0, 2.0);
        const HermitianMatrix y = random_psd(rng, n, 0.2, 2.0);
        const double crude = std::max(lambda_max(x) / lambda_min(y), 1e-6);
        const double alpha = rng.log_uniform(0.02, 2.0) * crude;
        const EquivalenceProbe probe = sqrt_leq_equiv(x, y, alpha);
        if (probe.boundary) {
            ++boundary;
            continue;
        }
        CHECK(probe.agree);
        CHECK(probe.lhs == probe.rhs);
    }
    // The alpha distribution straddles the critical point but rarely lands on it.
    CHECK(boundary < 100);

    CHECK_THROWS_AS(
        sqrt_leq_equiv(HermitianMatrix::identity(2), HermitianMatrix::zero(2), 1.0),
        std::exception);
}

TEST_CASE("sqrt_leq_equiv critical point is the exact threshold") {
    const HermitianMatrix x(diag_matrix({4.0, 1.0}));
    const HermitianMatrix y(diag_matrix({1.0, 1.0}));
    const EquivalenceProbe wide = sqrt_leq_equiv(x, y, 4.0 + 1e-3);
    CHECK(wide.agree);
    CHECK(wide.lhs);
    const EquivalenceProbe narrow = sqrt_leq_equiv(x, y, 4.0 - 1e-3);
    CHECK(narrow.agree);
    CHECK_FALSE(narrow.lhs);
    CHECK(std::abs(wide.critical - 4.0) <= 1e-10);
}

TEST_CASE("psd_block_norm_equiv matches the norm threshold") {
    SplitMix64 rng(0xB33F);
    for (int trial = 0; trial < 200; ++trial) {
        const Matrix x = random_matrix(rng, 2 + static_cast<int>(rng.next() % 3));
        const double norm = spectral_norm(x);
        const double c = norm * rng.log_uniform(0.5, 2.0) + 1e-6;
        const EquivalenceProbe probe = psd_block_norm_equiv(x, c);
        if (probe.boundary) continue;
        CHECK(probe.agree);
        CHECK(probe.lhs == (c >= norm));
    }
}
