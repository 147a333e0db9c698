#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "accretive/generators.hpp"
#include "accretive/linalg.hpp"
#include "accretive/numrad.hpp"
#include "accretive/rng.hpp"
#include "doctest.h"

using namespace accretive;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

Matrix diag2(cdouble a, cdouble b) {
    Matrix m(2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

Matrix jordan_block(int n) {
    Matrix j(n);
    for (int i = 0; i + 1 < n; ++i) j(i, i + 1) = 1.0;
    return j;
}

}  // namespace

TEST_CASE("support function at angle zero is the top eigenvalue of the real part") {
    SplitMix64 rng(0xA001);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 5);
        const Matrix a = gen_unrestricted(rng, n);
        const double f0 = rotated_real_max(a, 0.0);
        const double top = lambda_max(hermitian_part(a));
        CHECK(std::abs(f0 - top) <= 1e-12 * std::max(1.0, std::abs(top)));
    }
}

TEST_CASE("support function rotates with the matrix") {
    SplitMix64 rng(0xA002);
    const Matrix a = gen_unrestricted(rng, 4);
    for (int k = 0; k < 12; ++k) {
        const double theta = kTwoPi * k / 12;
        const Matrix rotated = std::polar(1.0, theta) * a;
        CHECK(std::abs(rotated_real_max(a, theta) - rotated_real_max(rotated, 0.0)) <= 1e-12);
    }
}

TEST_CASE("nilpotent shift blocks match the closed form cos(pi/(n+1))") {
    // Classical values: 0.5 for n = 2, sqrt(2)/2 for n = 3, ...
    for (int n = 2; n <= 6; ++n) {
        const double expected = std::cos(kTwoPi / 2.0 / (n + 1));
        const Enclosure w = numerical_radius(jordan_block(n), 1e-8);
        CHECK(w.lo <= expected + 1e-8);
        CHECK(w.hi >= expected - 1e-8);
        CHECK(w.width() <= 1e-8);
    }
}

TEST_CASE("normal matrices have radius equal to the spectral radius") {
    SplitMix64 rng(0xA003);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 5);
        const Matrix u = random_unitary(rng, n);
        Matrix d(n);
        double rho = 0.0;
        for (int i = 0; i < n; ++i) {
            const cdouble z = 3.0 * rng.cgauss();
            d(i, i) = z;
            rho = std::max(rho, std::abs(z));
        }
        const Matrix a = u * d * adjoint(u);
        const Enclosure w = numerical_radius(a);
        const double band = 1e-8 * std::max(1.0, spectral_norm(a)) + 1e-12;
        CHECK(w.lo <= rho + band);
        CHECK(w.hi >= rho - band);
    }
}

TEST_CASE("hermitian matrices have radius equal to the norm") {
    SplitMix64 rng(0xA004);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 5);
        const HermitianMatrix h = random_hermitian(rng, n);
        const Matrix a = h.mat();
        const double norm = spectral_norm(a);
        const Enclosure w = numerical_radius(a);
        const double band = 1e-8 * std::max(1.0, norm) + 1e-12;
        CHECK(w.lo <= norm + band);
        CHECK(w.hi >= norm - band);
    }
}

TEST_CASE("fixed small cases") {
    const Enclosure d = numerical_radius(diag2(-3.0, 2.0));
    CHECK(d.lo <= 3.0 + 1e-10);
    CHECK(d.hi >= 3.0 - 1e-10);

    Matrix one(1);
    one(0, 0) = cdouble(3.0, -4.0);
    const Enclosure s = numerical_radius(one);
    CHECK(s.lo <= 5.0 + 1e-10);
    CHECK(s.hi >= 5.0 - 1e-10);
}

TEST_CASE("enclosure width honors the requested tolerance") {
    SplitMix64 rng(0xA005);
    for (double eps : {1e-6, 1e-8}) {
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 2 + static_cast<int>(rng.next() % 5);
            const Matrix a = gen_unrestricted(rng, n);
            const Enclosure w = numerical_radius(a, eps);
            CHECK(w.lo <= w.hi);
            CHECK(w.width() <= eps * std::max(1.0, spectral_norm(a)));
        }
    }
}

TEST_CASE("upper end dominates every sampled support value") {
    SplitMix64 rng(0xA006);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 4);
        const Matrix a = gen_unrestricted(rng, n);
        const Enclosure w = numerical_radius(a);
        for (int k = 0; k < 64; ++k) {
            const double f = rotated_real_max(a, kTwoPi * k / 64);
            CHECK(f <= w.hi + 1e-12 * std::max(1.0, w.hi));
        }
    }
}

TEST_CASE("radius is invariant under rotation and unitary conjugation") {
    SplitMix64 rng(0xA007);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 4);
        const Matrix a = gen_unrestricted(rng, n);
        const Enclosure base = numerical_radius(a);

        const double theta = rng.uniform(0.0, kTwoPi);
        const Enclosure rot = numerical_radius(std::polar(1.0, theta) * a);
        CHECK(rot.lo <= base.hi + 1e-12);
        CHECK(rot.hi >= base.lo - 1e-12);

        const Matrix u = random_unitary(rng, n);
        const Enclosure conj = numerical_radius(u * a * adjoint(u));
        CHECK(conj.lo <= base.hi + 1e-10 * std::max(1.0, base.hi));
        CHECK(conj.hi >= base.lo - 1e-10 * std::max(1.0, base.hi));
    }
}

TEST_CASE("enclosure agrees with a dense angular grid") {
    // The support function is Lipschitz in theta with constant ||A||, so the
    // true maximum exceeds the grid maximum by at most ||A|| * step / 2.
    SplitMix64 rng(0xA008);
    constexpr int kGrid = 720;
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 4);
        const Matrix a = gen_unrestricted(rng, n);
        double grid_max = 0.0;
        for (int k = 0; k < kGrid; ++k)
            grid_max = std::max(grid_max, rotated_real_max(a, kTwoPi * k / kGrid));
        const double slack = spectral_norm(a) * (kTwoPi / kGrid) / 2.0;
        const Enclosure w = numerical_radius(a);
        CHECK(w.hi >= grid_max - 1e-12 * std::max(1.0, grid_max));
        CHECK(w.lo <= grid_max + slack + 1e-12);
    }
}

TEST_CASE("range samples sit on the boundary support lines") {
    SplitMix64 rng(0xA009);
    const Matrix a = gen_unrestricted(rng, 4);
    const int count = 37;
    const std::vector<RangePoint> pts = range_samples(a, count);
    REQUIRE(pts.size() == static_cast<size_t>(count));
    const Enclosure w = numerical_radius(a);
    const double scale = std::max(1.0, spectral_norm(a));
    for (const RangePoint& p : pts) {
        // Re(e^{i theta} z) recovers the support value in direction theta.
        const double support = std::cos(p.theta) * p.z.real() - std::sin(p.theta) * p.z.imag();
        CHECK(std::abs(support - rotated_real_max(a, p.theta)) <= 1e-10 * scale);
        CHECK(std::abs(p.z) <= w.hi + 1e-8 * scale);
    }
    CHECK_THROWS_AS(range_samples(a, 0), std::invalid_argument);
}

TEST_CASE("unconditional bounds all pass on random matrices") {
    SplitMix64 rng(0xA00A);
    const std::vector<std::string> ids = {"w.basic.half_norm", "w.basic.norm", "w.basic.re",
                                          "w.basic.im"};
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 6);
        const Matrix a = gen_unrestricted(rng, n);
        const std::vector<Verdict> vs = basic_bounds(a);
        REQUIRE(vs.size() == 4);
        for (size_t i = 0; i < vs.size(); ++i) {
            CHECK(vs[i].case_id == ids[i]);
            CHECK(vs[i].relation == "scalar");
            CHECK(vs[i].outcome() == Outcome::Pass);
        }
    }
}

TEST_CASE("repeated evaluation is bit for bit identical") {
    SplitMix64 rng(0xA00B);
    const Matrix a = gen_unrestricted(rng, 5);
    const Enclosure w1 = numerical_radius(a);
    const Enclosure w2 = numerical_radius(a);
    CHECK(w1.lo == w2.lo);
    CHECK(w1.hi == w2.hi);
}
