#include "udw/models.hpp"

#include <algorithm>
#include <cmath>

namespace udw {

namespace {

constexpr cplx kMinusHalfI{0.0, -0.5};

enum : int { gg = 0, ge = 1, eg = 2, ee = 3 };

Scaled norm2(const Scaled& z)
{
    return z * z.conj();
}

Scaled abs_scaled(const Scaled& z)
{
    if (z.is_zero()) {
        return {};
    }
    return Scaled(1.0, z.log_abs());
}

const Scaled& bigger(const Scaled& x, const Scaled& y)
{
    return x.log_abs() >= y.log_abs() ? x : y;
}

}  // namespace

std::string to_string(Model m)
{
    return m == Model::quantum ? "quantum" : "qc";
}

Model model_from_string(const std::string& s)
{
    if (s == "quantum") {
        return Model::quantum;
    }
    if (s == "qc") {
        return Model::qc;
    }
    throw DomainError("unknown model: " + s);
}

std::string to_string(OrderTag t)
{
    return t == OrderTag::second ? "second" : "fourth-qc";
}

void TwoQubitState::check_invariants() const
{
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (!(herm <= 1e-12)) {
        throw DomainError("density matrix is not Hermitian");
    }
    if (!(std::abs(rho.trace() - cplx(1.0, 0.0)) <= 1e-12)) {
        throw DomainError("density matrix does not have unit trace");
    }
    for (int i = 0; i < 4; ++i) {
        if (rho(i, i).real() < -1e-12) {
            throw DomainError("density matrix has a negative population");
        }
    }
}

AmplitudeSet compute_qc_amplitudes(const Detector& a, const Detector& b, const QuadratureSpec& spec)
{
    AmplitudeSet out;
    const auto mc = smeared_bilinear(KernelKind::symmetric_delta, a, b, kPlusPlus, spec);
    const auto nc = smeared_bilinear(KernelKind::symmetric_delta, a, b, kPlusMinus, spec);
    out.Mc = mc.value * kMinusHalfI;
    out.Mc_err = mc.error * cplx(0.5, 0.0);
    out.Nc = nc.value * kMinusHalfI;
    out.Nc_err = nc.error * cplx(0.5, 0.0);
    return out;
}

AmplitudeSet compute_amplitudes(const Detector& a, const Detector& b, const QuadratureSpec& spec)
{
    AmplitudeSet out;
    const auto pp = smear_primitives(a, b, kPlusPlus, spec, true);
    const auto pm = smear_primitives(a, b, kPlusMinus, spec, false);

    const auto mc = pp.evaluate(KernelKind::symmetric_delta);
    const auto nc = pm.evaluate(KernelKind::symmetric_delta);
    const auto m = pp.evaluate(KernelKind::feynman);
    out.Mc = mc.value * kMinusHalfI;
    out.Mc_err = mc.error * cplx(0.5, 0.0);
    out.Nc = nc.value * kMinusHalfI;
    out.Nc_err = nc.error * cplx(0.5, 0.0);
    out.M = -m.value;
    out.M_err = m.error;

    const auto laa = smeared_bilinear(KernelKind::wightman, a, a, kMinusPlus, spec);
    const auto lbb = smeared_bilinear(KernelKind::wightman, b, b, kMinusPlus, spec);
    const auto lab = smeared_bilinear(KernelKind::wightman, a, b, kMinusPlus, spec);
    // L_aa and L_bb are real by construction; drop the rounding-level
    // imaginary part.
    out.Laa = Scaled(laa.value.mantissa().real(), laa.value.log_scale());
    out.Laa_err = laa.error;
    out.Lbb = Scaled(lbb.value.mantissa().real(), lbb.value.log_scale());
    out.Lbb_err = lbb.error;
    out.Lab = lab.value;
    out.Lab_err = lab.error;
    return out;
}

AmplitudeSet compute_amplitudes(const Detector& a, const Detector& b, const PairGeometry& g,
                                Placement mode, const QuadratureSpec& spec)
{
    auto [pa, pb] = place_pair(a, b, g, mode);
    return compute_amplitudes(pa, pb, spec);
}

TwoQubitState assemble_qc_state(const AmplitudeSet& amps)
{
    TwoQubitState s;
    s.order = OrderTag::fourth_qc;
    const cplx mc = amps.Mc.value();
    const double p = std::norm(mc);
    s.rho(gg, gg) = 1.0 - p;
    s.rho(gg, ee) = std::conj(mc);
    s.rho(ee, gg) = mc;
    s.rho(ee, ee) = p;
    return s;
}

TwoQubitState assemble_qft_state(const AmplitudeSet& amps)
{
    TwoQubitState s;
    s.order = OrderTag::second;
    const double laa = amps.Laa.value().real();
    const double lbb = amps.Lbb.value().real();
    const cplx lab = amps.Lab.value();
    const cplx m = amps.M.value();
    s.rho(gg, gg) = 1.0 - laa - lbb;
    s.rho(ge, ge) = lbb;
    s.rho(ge, eg) = std::conj(lab);
    s.rho(eg, ge) = lab;
    s.rho(eg, eg) = laa;
    s.rho(gg, ee) = std::conj(m);
    s.rho(ee, gg) = m;
    return s;
}

Scaled qc_qft_entrywise_distance(const AmplitudeSet& amps)
{
    const Scaled pc = norm2(amps.Mc);
    const Scaled cands[] = {
        abs_scaled(amps.Laa + amps.Lbb - pc),  // gg,gg
        abs_scaled(amps.Lbb),                  // ge,ge
        abs_scaled(amps.Laa),                  // eg,eg
        abs_scaled(amps.Lab),                  // ge,eg and eg,ge
        abs_scaled(amps.Mc - amps.M),          // gg,ee and ee,gg
        abs_scaled(pc),                        // ee,ee
    };
    Scaled best;
    for (const auto& c : cands) {
        best = bigger(best, c);
    }
    return best;
}

double entrywise_distance(const TwoQubitState& x, const TwoQubitState& y)
{
    return (x.rho - y.rho).cwiseAbs().maxCoeff();
}

Eigen::Matrix2cd monopole(double gap, double t)
{
    Eigen::Matrix2cd mu = Eigen::Matrix2cd::Zero();
    mu(1, 0) = std::polar(1.0, gap * t);   // sigma+ = |e><g|
    mu(0, 1) = std::polar(1.0, -gap * t);  // sigma- = |g><e|
    return mu;
}

namespace {

Eigen::Matrix2cd pure_state(const QubitState& q)
{
    Eigen::Vector2cd v(q.alpha(), q.beta());
    return v * v.adjoint();
}

void check_delta_pair(const Detector& a, const Detector& b)
{
    if (!a.switching.is_dirac() || !b.switching.is_dirac()) {
        throw DomainError("delta coupling needs Dirac switchings for both detectors");
    }
    if (a.profile.is_point() || b.profile.is_point()) {
        throw DivergentSelfEnergyError(
            "delta coupling of a pointlike detector has a divergent vacuum term; use Gaussian balls");
    }
    if (!(a.switching.as_dirac().instant < b.switching.as_dirac().instant)) {
        throw OrderingError("delta coupling needs the sender instant strictly before the receiver's");
    }
}

}  // namespace

DeltaCouplingData delta_coupling_data(const Detector& a, const Detector& b, Model model,
                                      const QuadratureSpec& spec)
{
    check_delta_pair(a, b);
    DeltaCouplingData d;
    const auto e = smeared_bilinear(KernelKind::causal_e, a, b, kNoPhase, spec);
    d.theta_e = 2.0 * e.complex_value().real();
    const auto lbb = smeared_bilinear(KernelKind::wightman, b, b, kNoPhase, spec);
    d.L_bb = lbb.complex_value().real();
    d.nu_b = model == Model::quantum ? std::exp(-2.0 * d.L_bb) : 1.0;
    const double ta = a.switching.as_dirac().instant;
    d.theta_a = (monopole(a.gap, ta) * pure_state(a.initial_state)).trace().real();
    return d;
}

Eigen::Matrix2cd receiver_state_from(const DeltaCouplingData& d, const Detector& b)
{
    const Eigen::Matrix2cd rho0 = pure_state(b.initial_state);
    const Eigen::Matrix2cd mu = monopole(b.gap, b.switching.center());
    const double c = std::cos(d.theta_e);
    const double s = std::sin(d.theta_e);
    const Eigen::Matrix2cd comm = mu * rho0 - rho0 * mu;
    return (0.5 + 0.5 * d.nu_b * c) * rho0 + (0.5 - 0.5 * d.nu_b * c) * (mu * rho0 * mu) -
           cplx(0.0, 0.5 * d.nu_b * s * d.theta_a) * comm;
}

Eigen::Matrix2cd delta_receiver_state(const Detector& a, const Detector& b, const PairGeometry& g,
                                      Placement mode, Model model, const QuadratureSpec& spec)
{
    auto [pa, pb] = place_pair(a, b, g, mode);
    return receiver_state_from(delta_coupling_data(pa, pb, model, spec), pb);
}

}  // namespace udw
