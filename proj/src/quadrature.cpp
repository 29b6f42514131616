#include "udw/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace udw {

namespace {

// Kronrod abscissae on [0, 1]; odd indices are the Gauss points.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    QuadResult r;
    bool operator<(const Segment& o) const { return r.error < o.r.error; }
};

}  // namespace

QuadResult gauss_kronrod15(const ComplexFn& f, double a, double b)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const cplx fc = f(c);
    cplx kron = fc * kWgk[7];
    cplx gauss = fc * kWg[3];
    double resabs = std::abs(fc) * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const cplx f1 = f(c - dx);
        const cplx f2 = f(c + dx);
        kron += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * (f1 + f2);
        }
    }
    QuadResult r;
    r.value = kron * h;
    r.abs_integral = resabs * std::abs(h);
    r.error = std::abs((kron - gauss) * h);
    r.evaluations = 15;
    // A non-finite sample poisons the whole estimate; report it as unbounded error.
    if (!std::isfinite(r.value.real()) || !std::isfinite(r.value.imag())) {
        r.error = std::numeric_limits<double>::infinity();
    }
    return r;
}

QuadResult integrate_adaptive(const ComplexFn& f, std::span<const Interval> pieces, double abs_tol,
                              double rel_tol, int max_subdivisions)
{
    std::priority_queue<Segment> heap;
    QuadResult total;
    // Running sums; refreshed exactly from the heap at the end.
    cplx value{0.0, 0.0};
    double error = 0.0, absint = 0.0;
    for (const auto& p : pieces) {
        if (!(p.b > p.a)) {
            continue;
        }
        Segment s{p.a, p.b, gauss_kronrod15(f, p.a, p.b)};
        total.evaluations += s.r.evaluations;
        value += s.r.value;
        error += s.r.error;
        absint += s.r.abs_integral;
        heap.push(s);
    }

    int subdivisions = 0;
    while (!heap.empty()) {
        const double target = std::max(abs_tol * absint, rel_tol * std::abs(value));
        if (error <= target) {
            break;
        }
        if (subdivisions >= max_subdivisions) {
            total.converged = false;
            break;
        }
        Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Interval at machine resolution; cannot refine further.
            total.converged = false;
            break;
        }
        heap.pop();
        Segment left{worst.a, mid, gauss_kronrod15(f, worst.a, mid)};
        Segment right{mid, worst.b, gauss_kronrod15(f, mid, worst.b)};
        total.evaluations += 30;
        value += left.r.value + right.r.value - worst.r.value;
        error += left.r.error + right.r.error - worst.r.error;
        absint += left.r.abs_integral + right.r.abs_integral - worst.r.abs_integral;
        heap.push(left);
        heap.push(right);
        ++subdivisions;
    }

    total.value = 0.0;
    total.error = 0.0;
    total.abs_integral = 0.0;
    while (!heap.empty()) {
        const auto& s = heap.top();
        total.value += s.r.value;
        total.error += s.r.error;
        total.abs_integral += s.r.abs_integral;
        heap.pop();
    }
    total.subdivisions = subdivisions;
    if (!std::isfinite(total.error)) {
        total.converged = false;
    }
    return total;
}

QuadResult integrate_or_throw(const ComplexFn& f, std::span<const Interval> pieces, double abs_tol,
                              double rel_tol, int max_subdivisions)
{
    QuadResult r = integrate_adaptive(f, pieces, abs_tol, rel_tol, max_subdivisions);
    if (!r.converged) {
        throw QuadratureFailure("adaptive quadrature did not converge within the subdivision limit", r);
    }
    return r;
}

}  // namespace udw
