#pragma once

// Globally adaptive Gauss-Kronrod 7/15 quadrature for complex integrands.

#include <functional>
#include <span>
#include <stdexcept>
#include <string>

#include "udw/core.hpp"

namespace udw {

struct Interval {
    double a;
    double b;
};

struct QuadResult {
    cplx value{0.0, 0.0};
    double error = 0.0;
    /// Estimate of the integral of |f|, used to scale absolute tolerances.
    double abs_integral = 0.0;
    long evaluations = 0;
    int subdivisions = 0;
    bool converged = true;
};

class QuadratureFailure : public std::runtime_error {
public:
    QuadratureFailure(const std::string& what, QuadResult partial)
        : std::runtime_error(what), partial_(partial)
    {
    }
    const QuadResult& partial() const { return partial_; }

private:
    QuadResult partial_;
};

using ComplexFn = std::function<cplx(double)>;

/// Single 15-point Kronrod rule on [a, b] with the embedded 7-point Gauss error.
QuadResult gauss_kronrod15(const ComplexFn& f, double a, double b);

/// Integrates f over the union of `pieces`, bisecting the interval with the
/// largest error until error <= max(abs_tol * int|f|, rel_tol * |int f|).
/// `abs_tol` is relative to the integral of |f| so the criterion is
/// independent of the overall scale of f. Returns converged = false when
/// max_subdivisions is hit; callers decide whether that is fatal.
QuadResult integrate_adaptive(const ComplexFn& f, std::span<const Interval> pieces, double abs_tol,
                              double rel_tol, int max_subdivisions);

/// As integrate_adaptive but throws QuadratureFailure instead of returning an
/// unconverged result.
QuadResult integrate_or_throw(const ComplexFn& f, std::span<const Interval> pieces, double abs_tol,
                              double rel_tol, int max_subdivisions);

}  // namespace udw
