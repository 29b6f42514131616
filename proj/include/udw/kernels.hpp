#pragma once

// Massless scalar two-point distributions between static comoving worldlines
// in 3+1 Minkowski vacuum, reduced to a principal-value part plus lightcone
// deltas.
//
// Conventions. For K(x, x') with x on worldline A and x' on worldline B,
// v = t - t' and r = |x - x'|. The vacuum forms
//
//     W   = lim 1 / (4 pi^2 (-(v - i eps)^2 + r^2))
//     G_F = lim 1 / (4 pi^2 (-v^2 + r^2 - i eps))
//
// split by Sokhotski-Plemelj into PV[1/(4 pi^2 (r^2 - v^2))] and deltas at
// v = +-r. The retarded and advanced kernels are then *defined* through
// i G_R = W - G_F* and i G_A = G_F - W, which gives
//
//     G_R = delta(v + r) / (4 pi r)      (x' on the future lightcone of x)
//     G_A = delta(v - r) / (4 pi r)
//
// and makes Delta = G_R + G_A and E = G_R - G_A hold simultaneously with
// W = H/2 + (i/2) E and G_F = H/2 + (i/2) Delta. Other sign conventions for
// G_R exist; this is the one fixed by the vacuum forms above.

#include <array>
#include <string>
#include <vector>

#include "udw/core.hpp"

namespace udw {

enum class KernelKind { wightman, feynman, retarded, advanced, symmetric_delta, causal_e, hadamard_h };

std::string to_string(KernelKind k);
KernelKind kernel_kind_from_string(const std::string& s);
inline constexpr std::array<KernelKind, 7> kAllKernelKinds = {
    KernelKind::wightman,        KernelKind::feynman,  KernelKind::retarded,  KernelKind::advanced,
    KernelKind::symmetric_delta, KernelKind::causal_e, KernelKind::hadamard_h};

/// r-independent shape of a reduced kernel:
///   pv    * PV[1 / (4 pi^2 (r^2 - v^2))]
/// + minus * delta(v + r) / (4 pi r)
/// + plus  * delta(v - r) / (4 pi r)
struct KernelCoefficients {
    cplx pv{0.0, 0.0};
    cplx minus{0.0, 0.0};
    cplx plus{0.0, 0.0};

    KernelCoefficients operator+(const KernelCoefficients& o) const;
    KernelCoefficients operator-(const KernelCoefficients& o) const;
    KernelCoefficients operator*(cplx c) const;
    /// Coefficients of the complex-conjugate distribution K*.
    KernelCoefficients conj() const;
    bool operator==(const KernelCoefficients& o) const = default;

    bool has_pv() const { return pv != cplx(0.0, 0.0); }
    bool has_deltas() const { return minus != cplx(0.0, 0.0) || plus != cplx(0.0, 0.0); }
};

KernelCoefficients coefficients(KernelKind kind);

struct DeltaTerm {
    double location;  // v*
    cplx weight;
};

/// A kernel evaluated at a fixed spatial distance r > 0.
class ReducedKernel {
public:
    ReducedKernel(double r, KernelCoefficients c);

    double r() const { return r_; }
    const KernelCoefficients& coeffs() const { return c_; }

    /// PV part at v, singular at v = +-r.
    cplx regular(double v) const;
    std::vector<DeltaTerm> delta_terms() const;
    /// PV pole locations (empty when the kernel has no PV part).
    std::vector<double> pv_poles() const;

private:
    double r_;
    KernelCoefficients c_;
};

/// delta(v + r) / (4 pi r).
ReducedKernel retarded_reduced(double r);
/// PV + deltas at v = -+r with weights +-i/(8 pi r).
ReducedKernel wightman_reduced(double r);
/// PV + deltas at v = +-r, both with weight i/(8 pi r).
ReducedKernel feynman_reduced(double r);
/// Any kind, assembled exactly from the three primitives through the
/// distribution identities.
ReducedKernel kernel_reduced(KernelKind kind, double r);

/// Finite-eps vacuum forms used only by the brute-force oracle. For the
/// Feynman form the regulator is scaled by 2r so its poles sit a distance
/// ~eps from the real v axis, like the Wightman ones.
cplx wightman_regulated(double v, double r, double eps);
cplx feynman_regulated(double v, double r, double eps);
cplx kernel_regulated(KernelKind kind, double v, double r, double eps);

}  // namespace udw
