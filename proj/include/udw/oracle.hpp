#pragma once

// Brute-force reference for the smeared bilinears: a plain 2D trapezoid sum
// of the finite-eps vacuum kernels over an equispaced (t, t') grid, followed
// by Richardson extrapolation eps -> 0. Independent of the closed-form t'
// integration and of the PV/contour machinery used by the main path.

#include "udw/bilinear.hpp"

namespace udw {

/// Trapezoid sum with grid_n points per Gaussian axis spanning +-window widths
/// of the wider switching. Dirac switchings contribute a single node. Point
/// profiles only.
cplx brute_force_bilinear(KernelKind kind, const Detector& a, const Detector& b, Phase phase, int grid_n,
                          double eps, double window = 7.0);

struct OracleResult {
    cplx value{0.0, 0.0};
    /// |difference of the last two extrapolants|.
    double est_error = 0.0;
    int levels = 0;
};

/// Richardson extrapolation over eps_k = eps0 / 2^k, k < levels, with grid
/// spacing eps_k / points_per_eps at each level.
OracleResult brute_force_extrapolated(KernelKind kind, const Detector& a, const Detector& b, Phase phase,
                                      double eps0, int levels, double points_per_eps = 4.0,
                                      double window = 7.0);

}  // namespace udw
