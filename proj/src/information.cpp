#include "udw/information.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>

namespace udw {

namespace {

// Eigenvalues of [[p, conj(c)], [c, q]], the small one as det / big so that
// it keeps full relative accuracy.
std::pair<double, double> hermitian2_eigs(double p, double q, cplx c)
{
    const double m = 0.5 * (p + q);
    const double rad = std::hypot(0.5 * (p - q), std::abs(c));
    const double det = p * q - std::norm(c);
    if (m >= 0.0) {
        const double big = m + rad;
        return {big, big != 0.0 ? det / big : 0.0};
    }
    const double big = m - rad;
    return {big, det / big};
}

bool is_x_shaped(const Eigen::Matrix4cd& m)
{
    // Blocks {0, 3} and {1, 2} are uncoupled.
    for (int i : {0, 3}) {
        for (int j : {1, 2}) {
            if (m(i, j) != cplx(0.0, 0.0) || m(j, i) != cplx(0.0, 0.0)) {
                return false;
            }
        }
    }
    return true;
}

Scaled abs_scaled(const Scaled& z)
{
    return z.is_zero() ? Scaled{} : Scaled(1.0, z.log_abs());
}

}  // namespace

Eigen::Matrix4cd partial_transpose(const Eigen::Matrix4cd& rho, bool on_b)
{
    Eigen::Matrix4cd pt;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int a2 = 0; a2 < 2; ++a2) {
                for (int b2 = 0; b2 < 2; ++b2) {
                    if (on_b) {
                        pt(2 * a + b, 2 * a2 + b2) = rho(2 * a + b2, 2 * a2 + b);
                    } else {
                        pt(2 * a + b, 2 * a2 + b2) = rho(2 * a2 + b, 2 * a + b2);
                    }
                }
            }
        }
    }
    return pt;
}

double negativity_exact(const TwoQubitState& s)
{
    const double scale = std::max(1.0, s.rho.cwiseAbs().maxCoeff());
    if (!((s.rho - s.rho.adjoint()).cwiseAbs().maxCoeff() <= 1e-12 * scale)) {
        throw DomainError("negativity needs a Hermitian density matrix");
    }
    const Eigen::Matrix4cd pt = partial_transpose(s.rho);
    std::array<double, 4> eig{};
    if (is_x_shaped(pt)) {
        auto [a1, a2] = hermitian2_eigs(pt(0, 0).real(), pt(3, 3).real(), pt(3, 0));
        auto [b1, b2] = hermitian2_eigs(pt(1, 1).real(), pt(2, 2).real(), pt(2, 1));
        eig = {a1, a2, b1, b2};
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(pt, Eigen::EigenvaluesOnly);
        for (int i = 0; i < 4; ++i) {
            eig[i] = es.eigenvalues()(i);
        }
    }
    double neg = 0.0;
    for (double e : eig) {
        if (e < 0.0) {
            neg -= e;
        }
    }
    return neg;
}

Scaled negativity_leading_scaled(const AmplitudeSet& amps, Model model, double identical_tol)
{
    if (model == Model::qc) {
        return abs_scaled(amps.Mc);
    }
    const double big = std::max(amps.Laa.abs(), amps.Lbb.abs());
    if (relative_difference(amps.Laa, amps.Lbb) > identical_tol && big > 0.0) {
        throw NonIdenticalDetectorsError("leading-order quantum negativity needs L_aa = L_bb");
    }
    const Scaled d = abs_scaled(amps.M) - abs_scaled(amps.Laa);
    if (d.is_zero() || d.mantissa().real() <= 0.0) {
        return {};
    }
    return d;
}

double negativity_leading(const AmplitudeSet& amps, Model model, double identical_tol)
{
    return negativity_leading_scaled(amps, model, identical_tol).value().real();
}

double purity(const TwoQubitState& s)
{
    return s.rho.cwiseAbs2().sum();
}

double binary_entropy(double x)
{
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("binary entropy argument must lie in [0, 1]");
    }
    if (x == 0.0 || x == 1.0) {
        return 0.0;
    }
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

Scaled signalling_term_scaled(const Detector& a, const Detector& b, Model model, const QuadratureSpec& spec)
{
    const cplx za = std::conj(a.initial_state.alpha()) * a.initial_state.beta();
    const cplx zb = std::conj(b.initial_state.alpha()) * b.initial_state.beta();
    const KernelCoefficients k = model == Model::quantum ? coefficients(KernelKind::retarded)
                                                         : coefficients(KernelKind::symmetric_delta) * 0.5;
    const Phase phases[] = {kPlusPlus, kPlusMinus, kMinusPlus, kMinusMinus};
    const cplx I{0.0, 1.0};
    const std::array<cplx, 4> co{I * za * zb, -I * za * std::conj(zb), I * std::conj(za) * zb,
                                 -I * std::conj(za) * std::conj(zb)};
    std::array<Scaled, 4> terms;
    for (int j = 0; j < 4; ++j) {
        if (co[j] == cplx(0.0, 0.0)) {
            continue;
        }
        terms[j] = smear_primitives(a, b, phases[j], spec, false).evaluate(k).value;
    }
    const Scaled s = linear_combination(co, terms);
    // S is real; the imaginary part is rounding.
    return s.is_zero() ? s : Scaled(s.mantissa().real(), s.log_scale());
}

double signalling_term(const Detector& a, const Detector& b, Model model, const QuadratureSpec& spec)
{
    return signalling_term_scaled(a, b, model, spec).value().real();
}

double signalling_term(const Detector& a, const Detector& b, const PairGeometry& g, Placement mode,
                       Model model, const QuadratureSpec& spec)
{
    auto [pa, pb] = place_pair(a, b, g, mode);
    return signalling_term(pa, pb, model, spec);
}

ChannelReport capacity_perturbative(const Detector& a, const Detector& b, Model model,
                                    const QuadratureSpec& spec)
{
    const double ab = std::abs(b.initial_state.alpha());
    const double bb = std::abs(b.initial_state.beta());
    if (ab == 0.0 || bb == 0.0) {
        throw DegenerateReceiverError("receiver must start in a superposition (alpha_b, beta_b != 0)");
    }
    ChannelReport rep;
    rep.model = model;
    rep.signalling_term = signalling_term(a, b, model, spec);
    const double x = rep.signalling_term / (4.0 * ab * bb);
    rep.capacity = (2.0 / std::log(2.0)) * x * x;
    rep.nu_b = 1.0;
    rep.params = {{"omega_a", a.gap}, {"omega_b", b.gap}, {"lambda_a", a.coupling}, {"lambda_b", b.coupling}};
    return rep;
}

ChannelReport capacity_perturbative(const Detector& a, const Detector& b, const PairGeometry& g,
                                    Placement mode, Model model, const QuadratureSpec& spec)
{
    auto [pa, pb] = place_pair(a, b, g, mode);
    ChannelReport rep = capacity_perturbative(pa, pb, model, spec);
    rep.params["L"] = g.L;
    rep.params["t0"] = g.t0;
    rep.params["theta"] = g.theta;
    return rep;
}

double capacity_delta_formula(double theta_e, double nu_b)
{
    if (!(nu_b >= 0.0 && nu_b <= 1.0)) {
        throw DomainError("nu_b must lie in [0, 1]");
    }
    return binary_entropy(0.5 + 0.5 * nu_b * std::abs(std::cos(theta_e))) - binary_entropy(0.5 + 0.5 * nu_b);
}

ChannelReport capacity_delta(const Detector& a, const Detector& b, Model model, const QuadratureSpec& spec)
{
    const DeltaCouplingData d = delta_coupling_data(a, b, model, spec);
    ChannelReport rep;
    rep.model = model;
    rep.nu_b = d.nu_b;
    rep.signalling_term = d.theta_e;
    rep.capacity = std::max(0.0, capacity_delta_formula(d.theta_e, d.nu_b));
    rep.params = {{"theta_e", d.theta_e}, {"L_bb", d.L_bb}};
    return rep;
}

ChannelReport capacity_delta(const Detector& a, const Detector& b, const PairGeometry& g, Placement mode,
                             Model model, const QuadratureSpec& spec)
{
    auto [pa, pb] = place_pair(a, b, g, mode);
    ChannelReport rep = capacity_delta(pa, pb, model, spec);
    rep.params["L"] = g.L;
    rep.params["t0"] = g.t0;
    rep.params["theta"] = g.theta;
    return rep;
}

}  // namespace udw
