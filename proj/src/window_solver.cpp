#include "accretive/window_solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace accretive {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::A: return "A";
        case Variant::IAstar: return "iAstar";
        case Variant::IA: return "iA";
        case Variant::Ainv: return "Ainv";
        case Variant::AbsA: return "absA";
        case Variant::AbsIAstar: return "absIAstar";
    }
    return "?";
}

Variant parse_variant(const std::string& name) {
    if (name == "A" || name == "a") return Variant::A;
    if (name == "iAstar" || name == "iastar") return Variant::IAstar;
    if (name == "iA" || name == "ia") return Variant::IA;
    if (name == "Ainv" || name == "ainv") return Variant::Ainv;
    if (name == "absA" || name == "absa") return Variant::AbsA;
    if (name == "absIAstar" || name == "absiastar") return Variant::AbsIAstar;
    throw std::invalid_argument("unknown variant: " + name);
}

Matrix variant_image(const Matrix& a, Variant v) {
    switch (v) {
        case Variant::A: return a;
        case Variant::IAstar: return cdouble(0.0, 1.0) * adjoint(a);
        case Variant::IA: return cdouble(0.0, 1.0) * a;
        case Variant::Ainv: return inverse(a);
        case Variant::AbsA: return abs_op(a).mat();
        case Variant::AbsIAstar: return abs_adjoint(a).mat();
    }
    throw std::invalid_argument("variant_image: bad variant");
}

double center_distance(const Matrix& a, double mu) {
    return spectral_norm(shift(a, cdouble(mu)));
}

namespace {

bool singular_band_ok(const Matrix& a, const Window& w, const Tolerance& tol) {
    const std::vector<double> sv = singular_values(a);
    const double band = tol.rel * std::max(1.0, w.M);
    return sv.front() >= w.m - band && sv.back() <= w.M + band;
}

}  // namespace

bool feasible_window(const Matrix& a, Variant v, const Window& w, const Tolerance& tol) {
    switch (v) {
        case Variant::AbsA:
            return singular_band_ok(a, w, tol);
        case Variant::AbsIAstar:
            // |iA*| = |A*| has the same eigenvalues as |A|.
            return singular_band_ok(adjoint(a), w, tol);
        case Variant::Ainv: {
            const std::vector<double> sv = singular_values(a);
            if (!(sv.front() > 0.0) || sv.back() / sv.front() > 1e12) return false;
            return accretive_via_disk(variant_image(a, v), w, tol);
        }
        default:
            return accretive_via_disk(variant_image(a, v), w, tol);
    }
}

BiaccretiveResult biaccretive_feasible(const Matrix& a, const Window& w, const Tolerance& tol,
                                       Variant partner) {
    if (partner != Variant::IAstar && partner != Variant::IA)
        throw std::invalid_argument("biaccretive_feasible: partner must be iAstar or iA");
    BiaccretiveResult r;
    r.disk_a = feasible_window(a, Variant::A, w, tol);
    r.disk_partner = feasible_window(a, partner, w, tol);
    r.feasible = r.disk_a && r.disk_partner;
    return r;
}

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5)-1)/2

// Golden-section minimum of a unimodal function on [a, b].
double golden_min(const std::function<double(double)>& h, double a, double b, double width) {
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double hc = h(c);
    double hd = h(d);
    for (int it = 0; it < 200 && (b - a) > width; ++it) {
        if (hc <= hd) {
            b = d;
            d = c;
            hd = hc;
            c = b - kInvPhi * (b - a);
            hc = h(c);
        } else {
            a = c;
            c = d;
            hc = hd;
            d = a + kInvPhi * (b - a);
            hd = h(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

WindowSearchResult optimal_window(const Matrix& a, Variant v, double pad, const Tolerance& tol,
                                  WindowObjective objective) {
    if (pad < 0.0) throw std::invalid_argument("optimal_window: pad must be nonnegative");
    const Matrix x = variant_image(a, v);
    const double nx = spectral_norm(x);
    const double lo = std::max(tol.rel, 1e-12);
    const double hi = 2.0 * nx + 1.0;
    const double width = 1e-12 * std::max(1.0, nx);

    const auto g = [&](double mu) { return center_distance(x, mu); };
    // Feasibility margin mu - s*g(mu) for the padded radius, with a strict
    // interior offset so a boundary-pinned optimum still leaves m > 0. g is
    // convex in mu, so the margin is concave, its superlevel set is an
    // interval, and golden search maximizes it reliably.
    const double s = (1.0 + pad) * (1.0 + 1e-9);
    const auto phi = [&](double mu) { return mu - s * g(mu); };

    WindowSearchResult res;

    // Locate a feasible center, or certify there is none.
    double best_mu = lo;
    double best_phi = -std::numeric_limits<double>::infinity();
    constexpr int kScan = 128;
    for (int i = 0; i <= kScan; ++i) {
        const double mu = lo + (hi - lo) * i / kScan;
        const double p = phi(mu);
        if (p > best_phi) {
            best_phi = p;
            best_mu = mu;
        }
    }
    if (best_phi <= 0.0) {
        const double span = (hi - lo) / kScan;
        const double refined = golden_min(
            [&](double mu) { return -phi(mu); }, std::max(lo, best_mu - span),
            std::min(hi, best_mu + span), width);
        best_phi = phi(refined);
        best_mu = refined;
        if (best_phi <= 0.0) {
            res.status = WindowStatus::Infeasible;
            return res;
        }
    }

    // Feasible set endpoints by bisection on the concave margin.
    double left = lo;
    if (phi(lo) <= 0.0) {
        double bad = lo, good = best_mu;
        while (good - bad > width) {
            const double mid = 0.5 * (bad + good);
            (phi(mid) > 0.0 ? good : bad) = mid;
        }
        left = good;
    }
    double right = hi;
    if (phi(hi) <= 0.0) {
        double good = best_mu, bad = hi;
        while (bad - good > width) {
            const double mid = 0.5 * (good + bad);
            (phi(mid) > 0.0 ? good : bad) = mid;
        }
        right = good;
    }

    const auto objective_fn = [&](double mu) {
        const double gd = g(mu);
        if (mu <= s * gd) return std::numeric_limits<double>::infinity();
        if (objective == WindowObjective::Width) return gd;
        return mu / std::sqrt((mu - gd) * (mu + gd));
    };

    double mu_star = golden_min(objective_fn, left, right, width);
    double g_star = g(mu_star);
    // Near a scalar matrix the ratio objective is numerically flat on a
    // sqrt(eps)-wide plateau, so the argmin can sit ~1e-8 off the collapse
    // point. Measure the true collapse radius on g itself (V-shaped there)
    // before classifying.
    if (g_star < 1e-7 * std::max(1.0, mu_star)) {
        const double mu_g = golden_min(g, left, right, width);
        if (g(mu_g) <= g_star) {
            mu_star = mu_g;
            g_star = g(mu_g);
        }
    }
    res.mu_star = mu_star;
    res.g_star = g_star;
    res.K = mu_star > g_star ? mu_star / std::sqrt((mu_star - g_star) * (mu_star + g_star)) : 0.0;

    const double r_pad = g_star * (1.0 + pad);
    if (2.0 * r_pad < 1e-9 * std::max(1.0, mu_star)) {
        res.status = WindowStatus::Degenerate;
        return res;
    }
    if (mu_star - r_pad <= 0.0) {
        res.status = WindowStatus::Infeasible;
        return res;
    }
    const Window window(mu_star - r_pad, mu_star + r_pad);
    if (!feasible_window(a, v, window, tol)) {
        res.status = WindowStatus::Infeasible;
        return res;
    }
    res.feasible = true;
    res.status = WindowStatus::Ok;
    res.window = window;
    return res;
}

}  // namespace accretive
