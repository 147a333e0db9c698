#include "accretive/numrad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "accretive/linalg.hpp"

namespace accretive {

double rotated_real_max(const Matrix& a, double theta) {
    const cdouble phase = std::polar(1.0, theta);
    return lambda_max(HermitianMatrix(phase * a));
}

namespace {

struct Node {
    double pot = 0.0;
    double th1 = 0.0;
    double th2 = 0.0;
    double f1 = 0.0;
    double f2 = 0.0;
};

struct NodeOrder {
    bool operator()(const Node& x, const Node& y) const {
        if (x.pot != y.pot) return x.pot < y.pot;
        return x.th1 > y.th1;
    }
};

double hermitian_norm(const HermitianMatrix& h) {
    const std::vector<double> ev = eigvals_hermitian(h);
    return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

}  // namespace

Enclosure numerical_radius(const Matrix& a, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("numerical_radius: eps must be positive");
    const double lip = spectral_norm(a) * (1.0 + 1e-12);
    // Eigenvalue rounding margin: the iteration leaves off-diagonal mass up to
    // 1e-13 * max(1, ||H||_F) and ||H(theta)||_F <= ||A||_F.
    const double e_f = 1e-13 * std::max(1.0, frobenius_norm(a));
    const double band = eps * std::max(1.0, lip);

    const auto f = [&](double theta) { return rotated_real_max(a, theta); };

    // Upper bound for f on [th1, th2] given endpoint values. Both terms are
    // valid on any interval shorter than pi/2; the corner term comes from
    // intersecting the two supporting half-planes of the numerical range.
    const auto potential = [&](double th1, double th2, double f1, double f2) {
        const double delta = 0.5 * (th2 - th1);
        double pot = std::max(f1, f2) + lip * delta + e_f;
        if (delta < 0.7) {
            const double cd = std::cos(delta);
            const double sd = std::sin(delta);
            const double u = (f1 + f2) / (2.0 * cd);
            const double v = (f1 - f2) / (2.0 * sd);
            const double corner = std::hypot(u, v) + e_f * (1.0 / cd + 1.0 / sd) + e_f;
            pot = std::min(pot, corner);
        }
        return pot;
    };

    constexpr int kInitial = 64;
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    std::vector<double> fv(kInitial + 1);
    double lo = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < kInitial; ++k) {
        fv[k] = f(kTwoPi * k / kInitial);
        lo = std::max(lo, fv[k]);
    }
    fv[kInitial] = fv[0];

    std::priority_queue<Node, std::vector<Node>, NodeOrder> heap;
    for (int k = 0; k < kInitial; ++k) {
        Node nd;
        nd.th1 = kTwoPi * k / kInitial;
        nd.th2 = kTwoPi * (k + 1) / kInitial;
        nd.f1 = fv[k];
        nd.f2 = fv[k + 1];
        nd.pot = potential(nd.th1, nd.th2, nd.f1, nd.f2);
        heap.push(nd);
    }

    constexpr long kMaxPops = 20'000'000;
    double hi = heap.top().pot;
    for (long pops = 0; hi - lo > band; ++pops) {
        if (pops >= kMaxPops) throw std::runtime_error("numerical_radius: bisection budget exceeded");
        const Node nd = heap.top();
        heap.pop();
        const double mid = 0.5 * (nd.th1 + nd.th2);
        const double fm = f(mid);
        lo = std::max(lo, fm);
        Node left{potential(nd.th1, mid, nd.f1, fm), nd.th1, mid, nd.f1, fm};
        Node right{potential(mid, nd.th2, fm, nd.f2), mid, nd.th2, fm, nd.f2};
        heap.push(left);
        heap.push(right);
        hi = heap.top().pot;
    }
    Enclosure enc;
    enc.lo = lo;
    enc.hi = std::max(hi, lo);
    return enc;
}

std::vector<RangePoint> range_samples(const Matrix& a, int count) {
    if (count <= 0) throw std::invalid_argument("range_samples: count must be positive");
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    const int n = a.n();
    std::vector<RangePoint> out;
    out.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double theta = kTwoPi * k / count;
        const cdouble phase = std::polar(1.0, theta);
        const EigenDecomposition ed = eig_hermitian(HermitianMatrix(phase * a));
        // Top eigenvector of Re(e^{i theta} A) attains the support value; its
        // quadratic form <A x, x> is the matching boundary point.
        const int top = n - 1;
        cdouble z = 0.0;
        for (int i = 0; i < n; ++i) {
            cdouble row = 0.0;
            for (int j = 0; j < n; ++j) row += a(i, j) * ed.vectors(j, top);
            z += std::conj(ed.vectors(i, top)) * row;
        }
        out.push_back(RangePoint{theta, z});
    }
    return out;
}

std::vector<Verdict> basic_bounds(const Matrix& a, const Tolerance& tol, double eps) {
    const Enclosure w = numerical_radius(a, eps);
    const double norm = spectral_norm(a);
    const double re_norm = hermitian_norm(hermitian_part(a));
    const double im_norm = hermitian_norm(imaginary_part(a));
    const double band = tol.rel + eps;

    std::vector<Verdict> out;
    out.push_back(scalar_verdict("w.basic.half_norm", 0.5 * norm, w.lo, band));
    out.push_back(scalar_verdict("w.basic.norm", w.hi, norm, band));
    out.push_back(scalar_verdict("w.basic.re", re_norm, w.lo, band));
    out.push_back(scalar_verdict("w.basic.im", im_norm, w.lo, band));
    return out;
}

}  // namespace accretive
