#include <cmath>
#include <complex>
#include <vector>

#include "accretive/generators.hpp"
#include "accretive/linalg.hpp"
#include "accretive/rng.hpp"
#include "accretive/transform.hpp"
#include "doctest.h"

using namespace accretive;

namespace {

Matrix example_one() {
    Matrix a(2);
    a(0, 0) = cdouble(5.0, -4.0);
    a(0, 1) = cdouble(0.0, 2.0);
    a(1, 0) = cdouble(1.0, 1.0);
    a(1, 1) = 6.0;
    return a;
}

Matrix example_two() {
    Matrix a(2);
    a(0, 0) = 2.0;
    a(1, 0) = -1.0;
    a(1, 1) = 4.0;
    return a;
}

Window random_window(SplitMix64& rng) {
    const double m = rng.log_uniform(0.1, 10.0);
    return Window(m, m * rng.log_uniform(1.05, 50.0));
}

}  // namespace

TEST_CASE("window validation") {
    CHECK_THROWS_AS(Window(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Window(2.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(Window(-1.0, 1.0), std::invalid_argument);
    const Window w(1.0, 4.0);
    const WindowConstants c = window_constants(w);
    CHECK(c.mu == 2.5);
    CHECK(c.r == 1.5);
    CHECK(std::abs(c.K - 1.25) <= 1e-15);
    CHECK(std::abs(c.low_k - 0.8) <= 1e-15);
    CHECK(std::abs(c.c1 - 0.2) <= 1e-15);
    CHECK(std::abs(c.c2 - 2.25) <= 1e-15);
    CHECK(std::abs(c.sq - 0.32) <= 1e-15);
}

TEST_CASE("transform of the first worked example") {
    const Matrix c = transform_C(example_one(), Window(4.0, 50.0));
    Matrix ref(2);
    ref(0, 0) = cdouble(27.0, -184.0);
    ref(0, 1) = cdouble(6.0, 92.0);
    ref(1, 0) = cdouble(52.0, 46.0);
    ref(1, 1) = 84.0;
    CHECK(max_abs_entry(c - ref) <= 1e-9);

    // Hermitian part off-diagonal carries the conjugation: (29+23i) above.
    Matrix re_ref(2);
    re_ref(0, 0) = 27.0;
    re_ref(0, 1) = cdouble(29.0, 23.0);
    re_ref(1, 0) = cdouble(29.0, -23.0);
    re_ref(1, 1) = 84.0;
    CHECK(max_abs_entry(hermitian_part(c).mat() - re_ref) <= 1e-9);

    CHECK(is_accretive(c));
    CHECK(accretive_via_disk(example_one(), Window(4.0, 50.0)));
}

TEST_CASE("transform of the second worked example") {
    const Window w(0.01, 8.0);
    const Matrix c = transform_C(example_two(), w);
    Matrix ref(2);
    ref(0, 0) = 10.94;
    ref(0, 1) = 3.99;
    ref(1, 0) = -4.0;
    ref(1, 1) = 15.96;
    CHECK(max_abs_entry(c - ref) <= 1e-9);
    CHECK(is_accretive(c));
    CHECK(accretive_via_disk(example_two(), w));
}

TEST_CASE("transform equals its expanded form") {
    // C = (M I - A*)(A - m I) = M A + m A* - Mm I - A* A.
    SplitMix64 rng(0xC0DE);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 5);
        const Matrix a = random_matrix(rng, n);
        const Window w = random_window(rng);
        const Matrix direct = transform_C(a, w);
        const Matrix expanded = w.M * a + w.m * adjoint(a) -
                                cdouble(w.M * w.m) * Matrix::identity(n) - adjoint(a) * a;
        CHECK(max_abs_entry(direct - expanded) <=
              1e-13 * std::max(1.0, max_abs_entry(direct)));
    }
}

TEST_CASE("real-part identity holds for every matrix and window") {
    // Re C(A) + |A - mu I|^2 = r^2 I exactly; residual stays at rounding level.
    SplitMix64 rng(0x1D);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 5);
        const Matrix a = random_matrix(rng, n);
        const Window w = random_window(rng);
        const WindowConstants c = window_constants(w);
        const double norm = spectral_norm(a);
        const double scale = std::max({1.0, c.r * c.r, norm * norm});
        CHECK(identity_residual(a, w) <= 1e-10 * scale);
    }
}

TEST_CASE("imaginary part of the transform is (M-m) Im A") {
    SplitMix64 rng(0x1234);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 5);
        const Matrix a = random_matrix(rng, n);
        const Window w = random_window(rng);
        const Matrix lhs = imaginary_part(transform_C(a, w)).mat();
        const Matrix rhs = (w.M - w.m) * imaginary_part(a).mat();
        CHECK(frobenius_norm(lhs - rhs) <= 1e-12 * std::max(1.0, frobenius_norm(lhs)));
    }
}

TEST_CASE("structural properties on unrestricted input") {
    SplitMix64 rng(0x0FF);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 5);
        const Matrix a = random_matrix(rng, n);
        const Window w = random_window(rng);
        const std::vector<Verdict> vs = prop_checks(a, w);
        REQUIRE(vs.size() == 7);
        CHECK(vs[0].case_id == "prop.1");
        CHECK(vs[6].case_id == "prop.7");
        // Items 1, 2, 4, 5 hold for every (A, w).
        for (const int k : {0, 1, 3, 4}) {
            CHECK(vs[k].hypothesis_met);
            CHECK(vs[k].pass);
        }
        // Conditional items never report a hypothesis-met failure on any input.
        for (const int k : {2, 5, 6}) CHECK(vs[k].outcome() != Outcome::Fail);
    }
}

TEST_CASE("singular-band instances satisfy the absolute-value equivalence") {
    SplitMix64 rng(0x3A);
    for (int trial = 0; trial < 100; ++trial) {
        const Window w = random_window(rng);
        const Matrix a = gen_singular_band(rng, 3, w, 0.9);
        const std::vector<Verdict> vs = prop_checks(a, w);
        CHECK(vs[2].outcome() == Outcome::Pass);  // both sides of the iff are true
    }
}

TEST_CASE("accretive transform implies accretive matrix") {
    SplitMix64 rng(0x6A);
    for (int trial = 0; trial < 100; ++trial) {
        const Window w = random_window(rng);
        const Matrix a = gen_disk(rng, 3, w, 0.9);
        const std::vector<Verdict> vs = prop_checks(a, w);
        CHECK(vs[5].outcome() == Outcome::Pass);
        CHECK(is_accretive(hermitian_part(a).mat()));
    }
}

TEST_CASE("accretive-dissipative transform implies accretive-dissipative matrix") {
    const Window w(1.0, 4.0);
    const WindowConstants c = window_constants(w);
    Matrix a(2);
    a(0, 0) = cdouble(c.mu + 0.3 * c.r, 0.2 * c.r);
    a(1, 1) = cdouble(c.mu - 0.4 * c.r, 0.1 * c.r);
    const Matrix t = transform_C(a, w);
    REQUIRE(is_accretive(t));
    REQUIRE(is_dissipative(t));
    const std::vector<Verdict> vs = prop_checks(a, w);
    CHECK(vs[6].outcome() == Outcome::Pass);
    CHECK(is_dissipative(a, Tolerance{}, false));
}

TEST_CASE("disk criterion agrees with the direct accretivity test") {
    SplitMix64 rng(0xD15C);
    int checked = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 4);
        const Matrix a = random_matrix(rng, n);
        const Window w = random_window(rng);
        const WindowConstants c = window_constants(w);
        const double margin = c.r - spectral_norm(shift(a, cdouble(c.mu)));
        // Skip the tolerance dead band where the two predicates may split.
        if (std::abs(margin) <= 1e-6 * std::max(1.0, c.r)) continue;
        ++checked;
        CHECK(accretive_via_disk(a, w) == is_accretive(transform_C(a, w)));
        CHECK(accretive_via_disk(a, w) == (margin > 0.0));
    }
    CHECK(checked > 400);
}

TEST_CASE("strict accretivity needs interior eigenvalues") {
    Matrix rot(2);
    rot(0, 1) = 1.0;
    rot(1, 0) = -1.0;  // Re = 0
    CHECK(is_accretive(rot));
    CHECK_FALSE(is_accretive(rot, Tolerance{}, true));
    CHECK(is_accretive(Matrix::identity(2), Tolerance{}, true));
}
