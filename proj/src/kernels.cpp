#include "udw/kernels.hpp"

#include <cmath>

namespace udw {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr cplx kHalfI{0.0, 0.5};

void require_positive_r(double r)
{
    if (!(r > 0.0)) {
        throw SingularGeometryError("reduced kernels need a spatial distance r > 0");
    }
}

}  // namespace

std::string to_string(KernelKind k)
{
    switch (k) {
    case KernelKind::wightman: return "wightman";
    case KernelKind::feynman: return "feynman";
    case KernelKind::retarded: return "retarded";
    case KernelKind::advanced: return "advanced";
    case KernelKind::symmetric_delta: return "symmetric_delta";
    case KernelKind::causal_e: return "causal_e";
    case KernelKind::hadamard_h: return "hadamard_h";
    }
    return "unknown";
}

KernelKind kernel_kind_from_string(const std::string& s)
{
    for (auto k : kAllKernelKinds) {
        if (to_string(k) == s) {
            return k;
        }
    }
    throw DomainError("unknown kernel kind: " + s);
}

KernelCoefficients KernelCoefficients::operator+(const KernelCoefficients& o) const
{
    return {pv + o.pv, minus + o.minus, plus + o.plus};
}

KernelCoefficients KernelCoefficients::operator-(const KernelCoefficients& o) const
{
    return {pv - o.pv, minus - o.minus, plus - o.plus};
}

KernelCoefficients KernelCoefficients::operator*(cplx c) const
{
    return {pv * c, minus * c, plus * c};
}

KernelCoefficients KernelCoefficients::conj() const
{
    return {std::conj(pv), std::conj(minus), std::conj(plus)};
}

KernelCoefficients coefficients(KernelKind kind)
{
    // Primitives.
    const KernelCoefficients retarded{0.0, 1.0, 0.0};
    const KernelCoefficients wightman{1.0, kHalfI, -kHalfI};
    const KernelCoefficients feynman{1.0, kHalfI, kHalfI};

    switch (kind) {
    case KernelKind::retarded: return retarded;
    case KernelKind::wightman: return wightman;
    case KernelKind::feynman: return feynman;
    // i G_A = G_F - W
    case KernelKind::advanced: return (feynman - wightman) * (-kI);
    case KernelKind::symmetric_delta: return retarded + (feynman - wightman) * (-kI);
    case KernelKind::causal_e: return retarded - (feynman - wightman) * (-kI);
    // H = 2 Re W = W + W*
    case KernelKind::hadamard_h: return wightman + wightman.conj();
    }
    throw DomainError("unknown kernel kind");
}

ReducedKernel::ReducedKernel(double r, KernelCoefficients c) : r_(r), c_(c)
{
    require_positive_r(r);
}

cplx ReducedKernel::regular(double v) const
{
    if (!c_.has_pv()) {
        return 0.0;
    }
    return c_.pv / (4.0 * kPi * kPi * (r_ * r_ - v * v));
}

std::vector<DeltaTerm> ReducedKernel::delta_terms() const
{
    std::vector<DeltaTerm> out;
    const double w = 1.0 / (4.0 * kPi * r_);
    if (c_.minus != cplx(0.0, 0.0)) {
        out.push_back({-r_, c_.minus * w});
    }
    if (c_.plus != cplx(0.0, 0.0)) {
        out.push_back({r_, c_.plus * w});
    }
    return out;
}

std::vector<double> ReducedKernel::pv_poles() const
{
    if (!c_.has_pv()) {
        return {};
    }
    return {-r_, r_};
}

ReducedKernel retarded_reduced(double r)
{
    return {r, coefficients(KernelKind::retarded)};
}

ReducedKernel wightman_reduced(double r)
{
    return {r, coefficients(KernelKind::wightman)};
}

ReducedKernel feynman_reduced(double r)
{
    return {r, coefficients(KernelKind::feynman)};
}

ReducedKernel kernel_reduced(KernelKind kind, double r)
{
    return {r, coefficients(kind)};
}

cplx wightman_regulated(double v, double r, double eps)
{
    const cplx w = cplx(v, -eps);
    return 1.0 / (4.0 * kPi * kPi * (r * r - w * w));
}

cplx feynman_regulated(double v, double r, double eps)
{
    return 1.0 / (4.0 * kPi * kPi * cplx(r * r - v * v, -2.0 * r * eps));
}

cplx kernel_regulated(KernelKind kind, double v, double r, double eps)
{
    const cplx w = wightman_regulated(v, r, eps);
    const cplx f = feynman_regulated(v, r, eps);
    switch (kind) {
    case KernelKind::wightman: return w;
    case KernelKind::feynman: return f;
    case KernelKind::retarded: return -kI * (w - std::conj(f));
    case KernelKind::advanced: return -kI * (f - w);
    case KernelKind::symmetric_delta: return -kI * (w - std::conj(f)) - kI * (f - w);
    case KernelKind::causal_e: return -kI * (w - std::conj(f)) + kI * (f - w);
    case KernelKind::hadamard_h: return 2.0 * std::real(w);
    }
    throw DomainError("unknown kernel kind");
}

}  // namespace udw
