#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "accretive/catalog.hpp"
#include "accretive/generators.hpp"
#include "accretive/linalg.hpp"
#include "accretive/rng.hpp"
#include "doctest.h"

using namespace accretive;

namespace {

Matrix diag2(cdouble a, cdouble b) {
    Matrix m(2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

Window random_window(SplitMix64& rng) {
    const double m = rng.log_uniform(0.1, 10.0);
    return Window{m, m * rng.log_uniform(1.05, 50.0)};
}

}  // namespace

TEST_CASE("registry holds 41 uniquely addressable cases") {
    const std::vector<CaseInfo>& reg = catalog_registry();
    CHECK(reg.size() == 41);
    std::set<std::string> ids;
    for (const CaseInfo& c : reg) {
        CHECK(!c.description.empty());
        CHECK(ids.insert(c.id).second);
        const CaseInfo* found = find_case(c.id);
        REQUIRE(found != nullptr);
        CHECK(found->id == c.id);
    }
    CHECK(find_case("no.such_case") == nullptr);
}

TEST_CASE("every case runs clean at small and medium dimension") {
    const SweepSettings settings;
    for (const CaseInfo& c : catalog_registry()) {
        for (int dim : {2, 5}) {
            SplitMix64 rng(fnv1a64(c.id) ^ static_cast<uint64_t>(dim));
            for (int trial = 0; trial < 3; ++trial) {
                const Verdict vd = c.run_trial(rng, dim, settings);
                CHECK(vd.case_id == c.id);
                CHECK(vd.outcome() != Outcome::Fail);
            }
        }
    }
}

TEST_CASE("positive map fixtures on a diagonal matrix") {
    const Matrix a = diag2(1.0, 4.0);
    const Window w{1.0, 4.0};

    // Normalized trace: sqrt((1+16)/2) against K * (1+4)/2.
    const Verdict tr = check_positive_map(a, w, PositiveMapSpec::normalized_trace());
    CHECK(tr.case_id == "lem.posmap");
    CHECK(tr.hypothesis_met);
    CHECK(tr.outcome() == Outcome::Pass);
    CHECK(tr.slack == doctest::Approx(1.25 * 2.5 - std::sqrt(8.5)).epsilon(1e-9));

    const Verdict rev = check_positive_map_reverse(a, PositiveMapSpec::normalized_trace());
    CHECK(rev.case_id == "ineq.posmap_reverse");
    CHECK(rev.outcome() == Outcome::Pass);
    CHECK(rev.slack == doctest::Approx(std::sqrt(8.5) - 2.5).epsilon(1e-9));

    // A vector state at an eigenvector makes the reverse bound an equality.
    const Verdict tight =
        check_positive_map_reverse(a, PositiveMapSpec::vector_state({1.0, 0.0}));
    CHECK(tight.outcome() == Outcome::Pass);
    CHECK(std::abs(tight.slack) <= 1e-12);
}

TEST_CASE("positive map checks pass for compressions of banded draws") {
    SplitMix64 rng(0xB001);
    const Window w{1.0, 4.0};
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix a = gen_singular_band(rng, 4, w);
        const Matrix iso = random_isometry(rng, 4, 2);
        const PositiveMapSpec phi = PositiveMapSpec::compression(iso, 4, 2);
        CHECK(check_positive_map(a, w, phi).outcome() == Outcome::Pass);
        CHECK(check_positive_map_reverse(a, phi).outcome() == Outcome::Pass);
    }
}

TEST_CASE("trade parameter endpoints reduce to the single sided bounds") {
    SplitMix64 rng(0xB002);
    const Window w{1.0, 7.0};
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix a = gen_bidisk(rng, 3, w, 0.8);

        const Verdict at_one = check_convex_combo(a, w, TradeParam{1.0});
        const Verdict re_side = check_abs_vs_real(a, w, Variant::A);
        REQUIRE(at_one.hypothesis_met);
        CHECK(at_one.outcome() == Outcome::Pass);
        CHECK(std::abs(at_one.slack - re_side.slack) <= 1e-12);

        const Verdict at_zero = check_convex_combo(a, w, TradeParam{0.0});
        const Verdict im_side = check_abs_vs_real(a, w, Variant::IAstar);
        CHECK(at_zero.outcome() == Outcome::Pass);
        CHECK(std::abs(at_zero.slack - im_side.slack) <= 1e-12);
    }
    CHECK_THROWS_AS(check_convex_combo(diag2(1.0, 2.0), w, TradeParam{1.5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_convex_combo(diag2(1.0, 2.0), w, TradeParam{-0.1}),
                    std::invalid_argument);
}

TEST_CASE("anticommutator fixture: diagonal matrix gives slack one half") {
    const Verdict vd = check_anticommutator(diag2(1.0, 4.0), Window{1.0, 4.0}, Variant::A);
    CHECK(vd.hypothesis_met);
    CHECK(vd.outcome() == Outcome::Pass);
    CHECK(vd.relation == "scalar");
    CHECK(vd.slack == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(vd.slack_norm == doctest::Approx(0.2).epsilon(1e-9));
    CHECK(vd.details.find("endpoint_slack=") != std::string::npos);
}

TEST_CASE("commutator bounds are tight on a shift against a diagonal") {
    Matrix b(2);
    b(0, 1) = 1.0;  // w(B) = 1/2

    // minus form: A B - B A* = [[0,-3],[0,0]], radius 3/2 = (M-m) w(B).
    const Verdict minus =
        check_w_commutator(diag2(1.0, 4.0), b, Window{1.0, 4.0}, CommutatorForm::Minus);
    CHECK(minus.case_id == "w.commutator.minus");
    CHECK(minus.hypothesis_met);
    CHECK(minus.outcome() == Outcome::Pass);
    CHECK(std::abs(minus.slack) <= 1e-7);

    // plus form holds when i A satisfies the disk hypothesis.
    const Matrix rot = cdouble(0.0, -1.0) * diag2(1.0, 4.0);
    const Verdict plus = check_w_commutator(rot, b, Window{1.0, 4.0}, CommutatorForm::Plus);
    CHECK(plus.case_id == "w.commutator.plus");
    CHECK(plus.hypothesis_met);
    CHECK(plus.outcome() == Outcome::Pass);
    CHECK(std::abs(plus.slack) <= 1e-7);

    // the minus-form hypothesis rejects a nilpotent block.
    Matrix j(2);
    j(0, 1) = 1.0;
    CHECK(check_w_commutator(j, b, Window{1.0, 4.0}, CommutatorForm::Minus).outcome() ==
          Outcome::HypothesisNotMet);
}

TEST_CASE("combined commutator corollary passes on doubly accretive draws") {
    SplitMix64 rng(0xB003);
    const Window w{1.0, 7.0};
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix a = gen_bidisk(rng, 3, w, 0.8, Variant::IA);
        const Matrix b = gen_unrestricted(rng, 3);
        const Verdict vd = check_final_corollary(a, b, w);
        CHECK(vd.case_id == "cor.final");
        CHECK(vd.hypothesis_met);
        CHECK(vd.outcome() == Outcome::Pass);
    }
}

TEST_CASE("block reverse triangle hypothesis is structurally empty") {
    SplitMix64 rng(0xB004);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 4);
        const Matrix s = gen_unrestricted(rng, n);
        const Matrix t = gen_unrestricted(rng, n);
        const Verdict vd = check_block_reverse_triangle(s, t, random_window(rng));
        CHECK(vd.case_id == "thm.block_triangle");
        CHECK(vd.outcome() == Outcome::HypothesisNotMet);
    }
}

TEST_CASE("norm product fixtures") {
    const HermitianMatrix id2 = HermitianMatrix::identity(2);
    const Verdict tight = check_norm_product(id2, id2);
    CHECK(tight.outcome() == Outcome::Pass);
    CHECK(std::abs(tight.slack) <= 1e-12);

    const Verdict split = check_norm_product(HermitianMatrix(diag2(1.0, 0.0)),
                                             HermitianMatrix(diag2(0.0, 1.0)));
    CHECK(split.outcome() == Outcome::Pass);
    CHECK(split.slack == doctest::Approx(0.25).epsilon(1e-12));

    CHECK(check_norm_product(HermitianMatrix(diag2(1.0, -1.0)), id2).outcome() ==
          Outcome::HypothesisNotMet);
}

TEST_CASE("pointwise mixed Schwarz bound passes on random draws") {
    SplitMix64 rng(0xB005);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 4);
        const Verdict vd = check_mixed_schwarz(gen_unrestricted(rng, n));
        CHECK(vd.case_id == "prop.mixed_schwarz");
        CHECK(vd.outcome() == Outcome::Pass);
    }
    CHECK_THROWS_AS(check_mixed_schwarz(diag2(1.0, 2.0), Tolerance{}, 0x5EED, 0),
                    std::invalid_argument);
}

TEST_CASE("square root domination never disagrees with its norm criterion") {
    SplitMix64 rng(0xB006);
    int met = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 3);
        const HermitianMatrix x = random_psd(rng, n, 0.0, 3.0);
        const HermitianMatrix y = random_psd(rng, n, 0.5, 2.0);
        const double alpha = rng.log_uniform(0.25, 4.0);
        const Verdict vd = check_sqrt_equiv_case(x, y, alpha);
        CHECK(vd.case_id == "lem.sqrt_equiv");
        CHECK(vd.outcome() != Outcome::Fail);
        if (vd.hypothesis_met) ++met;
    }
    CHECK(met > 250);  // boundary draws must stay rare

    // Scaling fixture: X = 4 Y flips exactly at alpha = 4.
    SplitMix64 rng2(0xB007);
    const HermitianMatrix y = random_psd(rng2, 3, 0.5, 2.0);
    const HermitianMatrix x = 4.0 * y;
    const Verdict above = check_sqrt_equiv_case(x, y, 4.41);
    CHECK(above.outcome() == Outcome::Pass);
    CHECK(above.lhs_summary == 1.0);
    CHECK(above.rhs_summary == 1.0);
    const Verdict below = check_sqrt_equiv_case(x, y, 3.61);
    CHECK(below.outcome() == Outcome::Pass);
    CHECK(below.lhs_summary == 0.0);
    CHECK(below.rhs_summary == 0.0);
}

TEST_CASE("improvement flags agree with the window arithmetic") {
    // sq = 2Mm/(M+m)^2 > 1/4 is equivalent to M/m < 3 + 2 sqrt(2).
    SplitMix64 rng(0xB008);
    const double thresh = 3.0 + 2.0 * std::sqrt(2.0);
    int disagreements = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const Window w = random_window(rng);
        const WindowConstants c = window_constants(w);
        const double ratio = w.M / w.m;
        if (std::abs(c.sq - 0.25) <= 1e-12 || std::abs(ratio - thresh) <= 1e-12) continue;
        if ((c.sq > 0.25) != (ratio < thresh)) ++disagreements;
    }
    CHECK(disagreements == 0);

    // The folded checks recompute the same flags; they must never report a
    // mismatch between the two formulations.
    const SweepSettings settings;
    for (const char* id : {"w.lower_sq", "w.product"}) {
        const CaseInfo* info = find_case(id);
        REQUIRE(info != nullptr);
        SplitMix64 trial_rng(fnv1a64(id));
        for (int trial = 0; trial < 100; ++trial) {
            const Verdict vd = info->run_trial(trial_rng, 3, settings);
            CHECK(vd.details.find("flag_check=") != std::string::npos);
            CHECK(vd.details.find("MISMATCH") == std::string::npos);
        }
    }
}

TEST_CASE("triangular matrix keeps the upper difference bound honest") {
    // This instance satisfies the window hypothesis yet lambda_min(|A|-Re A)
    // is negative, so only the scaled-identity upper bound is normative.
    Matrix a(2);
    a(0, 0) = 2.5;
    a(0, 1) = 1.35;
    a(1, 1) = 2.5;
    const Verdict vd = check_abs_minus_real(a, Window{1.0, 4.0}, Variant::A);
    CHECK(vd.hypothesis_met);
    CHECK(vd.outcome() == Outcome::Pass);
    CHECK(vd.details.find("inf_eig(abs-re)=-0") != std::string::npos);
}

TEST_CASE("identity fixture for the absolute value versus real part bound") {
    const Verdict vd = check_abs_vs_real(Matrix::identity(2), Window{0.5, 2.0}, Variant::A);
    CHECK(vd.hypothesis_met);
    CHECK(vd.outcome() == Outcome::Pass);
    CHECK(vd.slack == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(vd.slack_norm == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(vd.details.find("intermediate_slack=") != std::string::npos);
}

TEST_CASE("intermediate bound is tight when the window matches the spectrum") {
    const Verdict vd = check_intermediate(diag2(1.0, 4.0), Window{1.0, 4.0});
    CHECK(vd.case_id == "eq.intermediate");
    CHECK(vd.hypothesis_met);
    CHECK(vd.outcome() == Outcome::Pass);
    CHECK(std::abs(vd.slack) <= 1e-9);
}

TEST_CASE("radius bounds fold fixtures") {
    const Matrix a = diag2(1.0, 4.0);
    const Window w{1.0, 4.0};
    const std::vector<Verdict> both = check_w_bounds(a, w);
    REQUIRE(both.size() == 2);
    CHECK(both[0].case_id == "w.vs_real");
    CHECK(both[1].case_id == "norm.vs_w");
    for (const Verdict& vd : both) {
        CHECK(vd.hypothesis_met);
        CHECK(vd.outcome() == Outcome::Pass);
    }

    SplitMix64 rng(0xB009);
    const Verdict basic = check_w_basic(gen_unrestricted(rng, 4));
    CHECK(basic.case_id == "w.basic_bounds");
    CHECK(basic.outcome() == Outcome::Pass);
}

TEST_CASE("geometric mean radius bound passes on doubly accretive draws") {
    SplitMix64 rng(0xB00A);
    const Window w{1.0, 7.0};
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix a = gen_bidisk(rng, 3, w, 0.8);
        const Verdict vd = check_w_geo_mean(a, w);
        CHECK(vd.case_id == "w.geo_mean");
        CHECK(vd.hypothesis_met);
        CHECK(vd.outcome() == Outcome::Pass);
    }
}
