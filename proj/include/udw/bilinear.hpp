#pragma once

// Smeared bilinear forms
//
//     I = lambda_a lambda_b  Int dt dt'  e^{i (s1 Omega_a t + s2 Omega_b t')}
//                            chi_a(t) chi_b(t') K(t, x_a; t', x_b)
//
// for Gaussian or Dirac switchings and point or Gaussian-ball profiles.
//
// With v = t - t' the t' integral of two Gaussians times plane waves is done
// in closed form, leaving I = Int dv T(v) K(v) where T(v) = exp(Q(v)) and Q
// is a quadratic with real negative leading coefficient. Every kernel kind is
// a fixed linear combination of three primitive smearings
//
//     P  = PV Int dv T(v) / (4 pi^2 (r^2 - v^2))
//     G- = T(-r) / (4 pi r)       G+ = T(+r) / (4 pi r)
//
// so the identities between kinds hold exactly on the computed values. P is taken
// on the real axis with symmetric pole subtraction when T oscillates slowly,
// and otherwise through the steepest-descent line Im v = Im v_c, which turns
// the oscillatory integral into a positive one and yields W (or its
// conjugate) directly. Results carry an explicit exponent so amplitudes far
// below DBL_MIN still have meaningful ratios.

#include <string>

#include "udw/core.hpp"
#include "udw/kernels.hpp"
#include "udw/quadrature.hpp"
#include "udw/scaled.hpp"

namespace udw {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 2000;
    /// Gaussian truncation half-width in units of the relevant width.
    double integration_window_sigmas = 10.0;

    void validate() const;
};

/// Signs (s1, s2) of the phase e^{i (s1 Omega_a t + s2 Omega_b t')}. Zero
/// drops the phase for that detector.
struct Phase {
    int s1 = 1;
    int s2 = 1;
};

inline constexpr Phase kPlusPlus{1, 1};
inline constexpr Phase kPlusMinus{1, -1};
inline constexpr Phase kMinusPlus{-1, 1};
inline constexpr Phase kMinusMinus{-1, -1};
inline constexpr Phase kNoPhase{0, 0};

struct BilinearResult {
    Scaled value;
    Scaled error;
    long evaluations = 0;

    cplx complex_value() const { return value.value(); }
    double est_error() const { return error.abs(); }
};

enum class SmearingRoute { exact, real_axis, contour, self_contour };
std::string to_string(SmearingRoute r);

/// The three primitive smearings for one detector pair and phase.
struct SmearedPrimitives {
    SmearingRoute route = SmearingRoute::exact;
    /// +1 when `line` is the smeared Wightman kernel, -1 for its conjugate.
    int sigma = 1;
    /// PV part (real-axis and exact routes) or the contour integral.
    Scaled line;
    Scaled line_error;
    Scaled minus;
    Scaled plus;
    double coupling = 1.0;  // lambda_a lambda_b
    bool has_line = false;
    bool pv_singular = false;
    long evaluations = 0;

    BilinearResult evaluate(const KernelCoefficients& c) const;
    BilinearResult evaluate(KernelKind k) const { return evaluate(coefficients(k)); }
    /// The principal-value primitive P regardless of route.
    Scaled principal_value() const;
};

/// Primitives for already placed detectors. The PV primitive is skipped when
/// `need_pv` is false, which is what allows pure delta kernels on lightlike
/// Dirac instants.
SmearedPrimitives smear_primitives(const Detector& a, const Detector& b, Phase phase,
                                   const QuadratureSpec& spec, bool need_pv = true);

BilinearResult smeared_bilinear(KernelKind kind, const Detector& a, const Detector& b, Phase phase,
                                const QuadratureSpec& spec);

/// Places the pair with `g` first.
BilinearResult smeared_bilinear(KernelKind kind, const Detector& a, const Detector& b,
                                const PairGeometry& g, Placement mode, Phase phase,
                                const QuadratureSpec& spec);

/// Radial density of |x_a - x_b| when the centres are L apart and the
/// difference vector is Gaussian with width s (s^2 = sigma_a^2 + sigma_b^2).
double radial_density(double rho, double L, double s);

}  // namespace udw
