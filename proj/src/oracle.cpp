#include "udw/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace udw {

namespace {

struct Axis {
    std::vector<double> t;
    std::vector<cplx> w;  // switching x phase x trapezoid weight
};

Axis make_axis(const SwitchingFunction& sw, double omega, double span, int n)
{
    Axis ax;
    if (sw.is_dirac()) {
        const auto& d = sw.as_dirac();
        ax.t = {d.instant};
        ax.w = {d.strength * std::polar(1.0, omega * d.instant)};
        return ax;
    }
    const double c = sw.center();
    const double h = span / (n - 1);
    ax.t.resize(n);
    ax.w.resize(n);
    for (int i = 0; i < n; ++i) {
        const double t = c - 0.5 * span + i * h;
        const double end = (i == 0 || i == n - 1) ? 0.5 : 1.0;
        ax.t[i] = t;
        ax.w[i] = end * h * sw.value(t) * std::polar(1.0, omega * t);
    }
    return ax;
}

}  // namespace

cplx brute_force_bilinear(KernelKind kind, const Detector& a, const Detector& b, Phase phase, int grid_n,
                          double eps, double window)
{
    if (grid_n < 64) {
        throw DomainError("brute-force grid needs at least 64 points per axis");
    }
    if (!(eps > 0.0)) {
        throw DomainError("brute-force regulator eps must be > 0");
    }
    if (!a.profile.is_point() || !b.profile.is_point()) {
        throw DomainError("brute-force oracle supports point profiles only");
    }
    const double r = a.center().spatial_distance(b.center());
    if (!(r > 0.0)) {
        throw SingularGeometryError("brute-force oracle needs r > 0");
    }

    double width = 0.0;
    for (const auto* d : {&a, &b}) {
        if (d->switching.is_gaussian()) {
            width = std::max(width, d->switching.as_gaussian().width);
        }
    }
    const double span = 2.0 * window * width;
    const Axis A = make_axis(a.switching, phase.s1 * a.gap, span, grid_n);
    const Axis B = make_axis(b.switching, phase.s2 * b.gap, span, grid_n);

    cplx sum{0.0, 0.0};
    if (A.t.size() == 1 || B.t.size() == 1) {
        for (std::size_t i = 0; i < A.t.size(); ++i) {
            for (std::size_t j = 0; j < B.t.size(); ++j) {
                sum += A.w[i] * B.w[j] * kernel_regulated(kind, A.t[i] - B.t[j], r, eps);
            }
        }
    } else {
        // Both axes share the spacing h, so t_i - t'_j = v0 + (i - j) h and the
        // kernel is needed only once per lag.
        const int n = grid_n;
        const double h = span / (n - 1);
        const double v0 = A.t[0] - B.t[0];
        for (int k = -(n - 1); k <= n - 1; ++k) {
            const int i0 = std::max(0, k);
            const int i1 = std::min(n - 1, n - 1 + k);
            cplx lag{0.0, 0.0};
            for (int i = i0; i <= i1; ++i) {
                lag += A.w[i] * B.w[i - k];
            }
            sum += lag * kernel_regulated(kind, v0 + k * h, r, eps);
        }
    }
    return a.coupling * b.coupling * sum;
}

OracleResult brute_force_extrapolated(KernelKind kind, const Detector& a, const Detector& b, Phase phase,
                                      double eps0, int levels, double points_per_eps, double window)
{
    if (levels < 2) {
        throw DomainError("extrapolation needs at least two levels");
    }
    double width = 0.0;
    for (const auto* d : {&a, &b}) {
        if (d->switching.is_gaussian()) {
            width = std::max(width, d->switching.as_gaussian().width);
        }
    }
    const double span = 2.0 * window * width;

    // Richardson table for an expansion in integer powers of eps.
    std::vector<std::vector<cplx>> R(levels);
    for (int k = 0; k < levels; ++k) {
        const double eps = eps0 / std::ldexp(1.0, k);
        const int n = std::max(64, static_cast<int>(std::ceil(span * points_per_eps / eps)) + 1);
        R[k].push_back(brute_force_bilinear(kind, a, b, phase, n, eps, window));
        for (int m = 1; m <= k; ++m) {
            const double f = std::ldexp(1.0, m) - 1.0;
            R[k].push_back(R[k][m - 1] + (R[k][m - 1] - R[k - 1][m - 1]) / f);
        }
    }
    OracleResult out;
    out.levels = levels;
    out.value = R[levels - 1][levels - 1];
    out.est_error = std::abs(out.value - R[levels - 2][levels - 2]);
    return out;
}

}  // namespace udw
