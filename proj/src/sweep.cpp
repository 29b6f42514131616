#include "udw/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace udw {

namespace {

template <class E, std::size_t N>
E parse_enum(const std::string& s, const std::array<E, N>& all, const char* what)
{
    for (E e : all) {
        if (to_string(e) == s) {
            return e;
        }
    }
    throw DomainError(std::string("unknown ") + what + ": " + s);
}

constexpr std::array<SweepAxis, 5> kAxes = {SweepAxis::theta, SweepAxis::omega_t, SweepAxis::l_over_t,
                                            SweepAxis::t0_over_t, SweepAxis::nu_b};
constexpr std::array<Observable, 6> kObservables = {
    Observable::negativity_leading,    Observable::negativity_exact, Observable::capacity_perturbative,
    Observable::capacity_delta,        Observable::amplitudes,       Observable::purity};

Detector make_detector(const DetectorParams& p, SwitchingKind sw)
{
    Detector d;
    d.gap = p.omega_t;
    d.coupling = p.lambda;
    d.switching = sw == SwitchingKind::gaussian ? SwitchingFunction::gaussian(0.0, p.width)
                                                : SwitchingFunction::dirac(0.0, p.eta);
    d.profile = p.sigma > 0.0 ? SpatialProfile::ball({}, p.sigma) : SpatialProfile::point({});
    d.initial_state = QubitState::normalized(p.alpha, p.beta);
    d.validate();
    return d;
}

bool wants(const SweepPlan& plan, Model m)
{
    return std::find(plan.models.begin(), plan.models.end(), m) != plan.models.end();
}

SweepRow base_row(const SweepPlan& plan, double x, Model m, const std::string& obs, const std::string& cc)
{
    SweepRow r;
    r.axis_name = to_string(plan.axis);
    r.axis_value = x;
    r.model = m;
    r.observable = obs;
    r.causal_class = cc;
    return r;
}

void state_rows(const SweepPlan& plan, double x, const Detector& a, const Detector& b, const QuadratureSpec& spec,
                const std::string& cc, std::vector<SweepRow>& out)
{
    const AmplitudeSet amps =
        wants(plan, Model::quantum) ? compute_amplitudes(a, b, spec) : compute_qc_amplitudes(a, b, spec);
    for (Model m : plan.models) {
        const bool q = m == Model::quantum;
        const std::string obs = to_string(plan.observable);
        switch (plan.observable) {
        case Observable::negativity_leading: {
            SweepRow r = base_row(plan, x, m, obs, cc);
            r.value = negativity_leading(amps, m);
            r.est_error = q ? amps.M_err.abs() + amps.Laa_err.abs() : amps.Mc_err.abs();
            out.push_back(r);
            break;
        }
        case Observable::negativity_exact: {
            SweepRow r = base_row(plan, x, m, obs, cc);
            r.value = negativity_exact(q ? assemble_qft_state(amps) : assemble_qc_state(amps));
            r.est_error = q ? amps.M_err.abs() + amps.Laa_err.abs() + amps.Lbb_err.abs() : amps.Mc_err.abs();
            out.push_back(r);
            break;
        }
        case Observable::purity: {
            SweepRow r = base_row(plan, x, m, obs, cc);
            r.value = purity(q ? assemble_qft_state(amps) : assemble_qc_state(amps));
            r.est_error = q ? 2.0 * (amps.Laa_err.abs() + amps.Lbb_err.abs())
                            : 4.0 * amps.Mc.abs() * amps.Mc_err.abs();
            out.push_back(r);
            break;
        }
        case Observable::amplitudes: {
            const auto add = [&](const char* name, const Scaled& v, const Scaled& e) {
                SweepRow r = base_row(plan, x, m, name, cc);
                r.value = v.abs();
                r.est_error = e.abs();
                out.push_back(r);
            };
            if (q) {
                add("M", amps.M, amps.M_err);
                add("L_aa", amps.Laa, amps.Laa_err);
                add("L_bb", amps.Lbb, amps.Lbb_err);
                add("L_ab", amps.Lab, amps.Lab_err);
            } else {
                add("M_c", amps.Mc, amps.Mc_err);
                add("N_c", amps.Nc, amps.Nc_err);
            }
            break;
        }
        default: break;
        }
    }
}

}  // namespace

std::string to_string(SweepAxis a)
{
    switch (a) {
    case SweepAxis::theta: return "theta";
    case SweepAxis::omega_t: return "omega_t";
    case SweepAxis::l_over_t: return "l_over_t";
    case SweepAxis::t0_over_t: return "t0_over_t";
    case SweepAxis::nu_b: return "nu_b";
    }
    return "unknown";
}

std::string to_string(Observable o)
{
    switch (o) {
    case Observable::negativity_leading: return "negativity_leading";
    case Observable::negativity_exact: return "negativity_exact";
    case Observable::capacity_perturbative: return "capacity_perturbative";
    case Observable::capacity_delta: return "capacity_delta";
    case Observable::amplitudes: return "amplitudes";
    case Observable::purity: return "purity";
    }
    return "unknown";
}

std::string to_string(SwitchingKind s)
{
    return s == SwitchingKind::gaussian ? "gaussian" : "delta";
}

SweepAxis sweep_axis_from_string(const std::string& s)
{
    return parse_enum(s, kAxes, "sweep axis");
}

Observable observable_from_string(const std::string& s)
{
    return parse_enum(s, kObservables, "observable");
}

SwitchingKind switching_from_string(const std::string& s)
{
    if (s == "gaussian") {
        return SwitchingKind::gaussian;
    }
    if (s == "delta") {
        return SwitchingKind::delta;
    }
    throw DomainError("unknown switching: " + s);
}

void SweepPlan::validate() const
{
    if (range.steps < 2) {
        throw DomainError("a sweep needs at least 2 steps");
    }
    if (!(range.min < range.max)) {
        throw DomainError("sweep range needs min < max");
    }
    if (models.empty()) {
        throw DomainError("a sweep needs at least one model");
    }
    switch (axis) {
    case SweepAxis::theta:
        if (placement != Placement::theta) {
            throw DomainError("a theta sweep needs theta placement");
        }
        if (range.min < 0.0 || range.max > kPi / 2 + 1e-12) {
            throw DomainError("theta range must lie in [0, pi/2]");
        }
        break;
    case SweepAxis::t0_over_t:
        if (placement != Placement::delay) {
            throw DomainError("a t0 sweep needs delay placement");
        }
        break;
    case SweepAxis::l_over_t:
        if (!(range.min > 0.0)) {
            throw DomainError("separation must stay positive");
        }
        break;
    case SweepAxis::omega_t:
        if (range.min < 0.0) {
            throw DomainError("gap must stay non-negative");
        }
        break;
    case SweepAxis::nu_b:
        if (observable != Observable::capacity_delta) {
            throw DomainError("the nu_b axis only applies to capacity_delta");
        }
        if (!(range.min >= 0.0 && range.max <= 1.0)) {
            throw DomainError("nu_b range must lie in [0, 1]");
        }
        break;
    }
    if (observable == Observable::capacity_delta) {
        if (switching != SwitchingKind::delta) {
            throw DomainError("capacity_delta needs delta switching");
        }
        if (!(a.sigma > 0.0 && b.sigma > 0.0)) {
            throw DomainError("capacity_delta needs Gaussian-ball profiles");
        }
    }
    if ((observable == Observable::negativity_leading || observable == Observable::negativity_exact ||
         observable == Observable::purity || observable == Observable::amplitudes) &&
        wants(*this, Model::quantum) && switching == SwitchingKind::delta && (a.sigma == 0.0 || b.sigma == 0.0)) {
        throw DomainError("quantum states with delta switching need Gaussian-ball profiles");
    }
}

std::vector<double> SweepPlan::grid() const
{
    std::vector<double> g(range.steps);
    const double h = (range.max - range.min) / (range.steps - 1);
    for (int i = 0; i < range.steps; ++i) {
        g[i] = i == range.steps - 1 ? range.max : range.min + i * h;
    }
    return g;
}

std::pair<Detector, Detector> plan_detectors(const SweepPlan& plan, double x)
{
    DetectorParams pa = plan.a;
    DetectorParams pb = plan.b;
    PairGeometry g = plan.geometry;
    switch (plan.axis) {
    case SweepAxis::theta: g.theta = std::min(x, kPi / 2); break;
    case SweepAxis::omega_t: pa.omega_t = pb.omega_t = x; break;
    case SweepAxis::l_over_t: g.L = x; break;
    case SweepAxis::t0_over_t: g.t0 = x; break;
    case SweepAxis::nu_b: break;
    }
    return place_pair(make_detector(pa, plan.switching), make_detector(pb, plan.switching), g, plan.placement);
}

std::vector<SweepRow> evaluate_point(const SweepPlan& plan, double x, const QuadratureSpec& spec)
{
    std::vector<SweepRow> out;
    std::string cc;
    try {
        auto [a, b] = plan_detectors(plan, x);
        cc = to_string(causal_class(a, b));
        switch (plan.observable) {
        case Observable::capacity_perturbative:
            for (Model m : plan.models) {
                SweepRow r = base_row(plan, x, m, to_string(plan.observable), cc);
                try {
                    r.value = capacity_perturbative(a, b, m, spec).capacity;
                } catch (const std::exception& e) {
                    r.value = std::numeric_limits<double>::quiet_NaN();
                    r.error = e.what();
                }
                out.push_back(r);
            }
            break;
        case Observable::capacity_delta:
            for (Model m : plan.models) {
                SweepRow r = base_row(plan, x, m, to_string(plan.observable), cc);
                try {
                    DeltaCouplingData d = delta_coupling_data(a, b, m, spec);
                    if (plan.axis == SweepAxis::nu_b && m == Model::quantum) {
                        d.nu_b = x;
                    }
                    r.value = capacity_delta_formula(d.theta_e, d.nu_b);
                } catch (const std::exception& e) {
                    r.value = std::numeric_limits<double>::quiet_NaN();
                    r.error = e.what();
                }
                out.push_back(r);
            }
            break;
        default: state_rows(plan, x, a, b, spec, cc, out); break;
        }
    } catch (const std::exception& e) {
        // Failure shared by every model at this grid point.
        out.clear();
        for (Model m : plan.models) {
            SweepRow r = base_row(plan, x, m, to_string(plan.observable), cc.empty() ? "unknown" : cc);
            r.value = std::numeric_limits<double>::quiet_NaN();
            r.error = e.what();
            out.push_back(r);
        }
    }
    return out;
}

std::vector<SweepRow> run_sweep_serial(const SweepPlan& plan, const QuadratureSpec& spec)
{
    plan.validate();
    spec.validate();
    std::vector<SweepRow> rows;
    for (double x : plan.grid()) {
        auto r = evaluate_point(plan, x, spec);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    return rows;
}

std::vector<SweepRow> run_sweep(const SweepPlan& plan, const QuadratureSpec& spec)
{
    plan.validate();
    spec.validate();
    const std::vector<double> grid = plan.grid();
    std::vector<std::vector<SweepRow>> slots(grid.size());
    const long n = static_cast<long>(grid.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        slots[i] = evaluate_point(plan, grid[i], spec);
    }
    std::vector<SweepRow> rows;
    for (auto& s : slots) {
        rows.insert(rows.end(), s.begin(), s.end());
    }
    return rows;
}

SweepPlan preset(const std::string& name)
{
    SweepPlan p;
    p.name = name;
    p.a.omega_t = p.b.omega_t = 10.0;
    p.geometry = {10.0, 0.0, 0.0};
    if (name == "fig2" || name == "fig3" || name == "fig5") {
        p.axis = SweepAxis::theta;
        p.range = {0.0, kPi / 2, 100};
        p.placement = Placement::theta;
        p.models = name == "fig2"   ? std::vector<Model>{Model::qc}
                   : name == "fig3" ? std::vector<Model>{Model::quantum}
                                    : std::vector<Model>{Model::qc, Model::quantum};
        return p;
    }
    if (name == "fig4") {
        p.axis = SweepAxis::omega_t;
        p.range = {0.0, 10.0, 101};
        p.placement = Placement::delay;
        p.geometry = {2.0, 0.0, 0.0};
        p.models = {Model::quantum};
        return p;
    }
    throw DomainError("unknown preset: " + name);
}

}  // namespace udw
