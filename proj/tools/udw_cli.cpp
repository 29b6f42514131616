// Command-line front end: single-point observables, figure-family sweeps and
// a quick invariant check.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "udw/config.hpp"
#include "udw/emit.hpp"

using namespace udw;

namespace {

struct Flags {
    std::optional<double> omega_t, l_over_t, t0_over_t, theta, lambda, abs_tol, rel_tol;
    std::optional<std::string> model, switching, profile, preset, config;
    std::string format = "csv";
    std::string out = "-";
    // sweep only
    std::optional<std::string> axis, observable;
    std::optional<double> min, max;
    std::optional<int> steps;
};

void add_common(CLI::App* app, Flags& f)
{
    app->add_option("--omega-t", f.omega_t, "gap times switching width (both detectors)");
    app->add_option("--l-over-t", f.l_over_t, "spatial separation L/T");
    app->add_option("--t0-over-t", f.t0_over_t, "delay t0/T (selects delay placement)");
    app->add_option("--theta", f.theta, "placement angle in radians (selects theta placement)");
    app->add_option("--lambda", f.lambda, "coupling strength (default 0.01)");
    app->add_option("--model", f.model, "qc | quantum | both")->check(CLI::IsMember({"qc", "quantum", "both"}));
    app->add_option("--switching", f.switching, "gaussian | delta")->check(CLI::IsMember({"gaussian", "delta"}));
    app->add_option("--profile", f.profile, "point | ball:<sigma>");
    app->add_option("--format", f.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    app->add_option("--out", f.out, "output path, - for stdout");
    app->add_option("--abs-tol", f.abs_tol, "quadrature absolute tolerance");
    app->add_option("--rel-tol", f.rel_tol, "quadrature relative tolerance");
    app->add_option("--preset", f.preset, "fig2 | fig3 | fig4 | fig5")
        ->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5"}));
    app->add_option("--config", f.config, "config file (default: $UDW_CONFIG)");
}

RunConfig resolve(const Flags& f)
{
    RunConfig cfg;
    if (f.preset) {
        cfg.plan = preset(*f.preset);
    }
    std::string path;
    if (f.config) {
        path = *f.config;
    } else if (const char* env = std::getenv("UDW_CONFIG")) {
        path = env;
    }
    if (!path.empty()) {
        apply_config_file(cfg, path, !f.preset);
    }

    auto& p = cfg.plan;
    if (f.omega_t) {
        p.a.omega_t = p.b.omega_t = *f.omega_t;
    }
    if (f.lambda) {
        p.a.lambda = p.b.lambda = *f.lambda;
    }
    if (f.l_over_t) {
        p.geometry.L = *f.l_over_t;
    }
    if (f.theta && f.t0_over_t) {
        throw DomainError("--theta and --t0-over-t select different placements; give one");
    }
    if (f.theta) {
        p.geometry.theta = *f.theta;
        p.placement = Placement::theta;
    }
    if (f.t0_over_t) {
        p.geometry.t0 = *f.t0_over_t;
        p.placement = Placement::delay;
        if (p.axis == SweepAxis::theta) {
            p.axis = SweepAxis::t0_over_t;
        }
    }
    if (f.model) {
        p.models = *f.model == "both" ? std::vector<Model>{Model::qc, Model::quantum}
                                      : std::vector<Model>{model_from_string(*f.model)};
    }
    if (f.switching) {
        p.switching = switching_from_string(*f.switching);
    }
    if (f.profile) {
        const std::string& s = *f.profile;
        if (s == "point") {
            p.a.sigma = p.b.sigma = 0.0;
        } else if (s.rfind("ball:", 0) == 0) {
            double sigma = 0.0;
            try {
                sigma = std::stod(s.substr(5));
            } catch (const std::exception&) {
                throw DomainError("--profile ball:<sigma> needs a number");
            }
            if (!(sigma > 0.0)) {
                throw DomainError("ball width must be > 0");
            }
            p.a.sigma = p.b.sigma = sigma;
        } else {
            throw DomainError("--profile must be point or ball:<sigma>");
        }
    }
    if (f.abs_tol) {
        cfg.spec.abs_tol = *f.abs_tol;
    }
    if (f.rel_tol) {
        cfg.spec.rel_tol = *f.rel_tol;
    }
    if (f.axis) {
        p.axis = sweep_axis_from_string(*f.axis);
    }
    if (f.observable) {
        p.observable = observable_from_string(*f.observable);
    }
    if (f.min) {
        p.range.min = *f.min;
    }
    if (f.max) {
        p.range.max = *f.max;
    }
    if (f.steps) {
        p.range.steps = *f.steps;
    }
    cfg.spec.validate();
    return cfg;
}

/// Current value of the plan's axis parameter, used by single-point commands.
double fixed_value(const SweepPlan& p)
{
    switch (p.axis) {
    case SweepAxis::theta: return p.geometry.theta;
    case SweepAxis::omega_t: return p.a.omega_t;
    case SweepAxis::l_over_t: return p.geometry.L;
    case SweepAxis::t0_over_t: return p.geometry.t0;
    case SweepAxis::nu_b: return 1.0;
    }
    return 0.0;
}

/// Single-point axis consistent with the chosen placement.
SweepPlan point_plan(SweepPlan p)
{
    p.axis = p.placement == Placement::theta ? SweepAxis::theta : SweepAxis::t0_over_t;
    return p;
}

std::vector<SweepRow> point_rows(SweepPlan p, Observable obs, const QuadratureSpec& spec)
{
    p = point_plan(p);
    p.observable = obs;
    return evaluate_point(p, fixed_value(p), spec);
}

void print_state(const RunConfig& cfg, const std::string& format, const std::string& out)
{
    SweepPlan p = point_plan(cfg.plan);
    auto [a, b] = plan_detectors(p, fixed_value(p));
    const bool need_q = std::find(p.models.begin(), p.models.end(), Model::quantum) != p.models.end();
    const AmplitudeSet amps = need_q ? compute_amplitudes(a, b, cfg.spec) : compute_qc_amplitudes(a, b, cfg.spec);

    std::ostringstream os;
    nlohmann::json j = nlohmann::json::object();
    if (format == "csv") {
        os << "model,row,col,re,im\n";
    }
    for (Model m : p.models) {
        const TwoQubitState s = m == Model::quantum ? assemble_qft_state(amps) : assemble_qc_state(amps);
        nlohmann::json mat = nlohmann::json::array();
        for (int r = 0; r < 4; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < 4; ++c) {
                const cplx z = s.rho(r, c);
                if (format == "csv") {
                    char buf[128];
                    std::snprintf(buf, sizeof buf, "%s,%d,%d,%.17g,%.17g\n", to_string(m).c_str(), r, c, z.real(),
                                  z.imag());
                    os << buf;
                }
                row.push_back({z.real(), z.imag()});
            }
            mat.push_back(row);
        }
        j[to_string(m)] = {{"rho", mat}, {"order", to_string(s.order)}};
    }
    if (format == "json") {
        j["basis"] = {"gg", "ge", "eg", "ee"};
        os << j.dump(2) << "\n";
    }
    if (out.empty() || out == "-") {
        std::cout << os.str();
        return;
    }
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot open output file: " + out);
    }
    f << os.str();
}

// Quick invariant suite; the full one lives in the test binaries.
int run_verify(const QuadratureSpec& spec)
{
    int failures = 0;
    const auto report = [&](const char* name, bool ok, double metric) {
        std::printf("[%s] %-44s %.3e\n", ok ? "PASS" : "FAIL", name, metric);
        failures += ok ? 0 : 1;
    };

    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> om(1.0, 20.0), ll(2.0, 20.0), tt(0.0, 20.0);
    double worst = 0.0;
    for (int n = 0; n < 5; ++n) {
        Detector a;
        a.gap = om(rng);
        a.coupling = 1.0;
        Detector b = a;
        auto [pa, pb] = place_pair(a, b, PairGeometry{ll(rng), tt(rng), 0.0}, Placement::delay);
        const auto pr = smear_primitives(pa, pb, kPlusMinus, spec);
        const auto v = [&](KernelKind k) { return pr.evaluate(k).value; };
        // W = H/2 + (i/2) E, Delta = G_R + G_A, i G_R = W - G_F*.
        const Scaled w = v(KernelKind::wightman);
        const Scaled d1 = w - (v(KernelKind::hadamard_h) * 0.5 + v(KernelKind::causal_e) * cplx(0.0, 0.5));
        const Scaled d2 = v(KernelKind::symmetric_delta) - (v(KernelKind::retarded) + v(KernelKind::advanced));
        const Scaled d3 = v(KernelKind::retarded) * cplx(0.0, 1.0) -
                          (w - pr.evaluate(coefficients(KernelKind::feynman).conj()).value);
        worst = std::max({worst, d1.abs_ratio(w), d2.abs_ratio(v(KernelKind::symmetric_delta)), d3.abs_ratio(w)});
    }
    report("kernel identities on random Gaussian pairs", worst <= 1e-8, worst);

    {
        Detector a;
        a.gap = 3.0;
        a.coupling = 0.01;
        a.switching = SwitchingFunction::dirac(0.0, 1.0);
        Detector b = a;
        auto amps = compute_qc_amplitudes(a, b.placed_at({0.5, 4.0, 0.0, 0.0}), spec);
        report("Dirac spacelike: M_c = N_c = 0", amps.Mc.is_zero() && amps.Nc.is_zero(), amps.Mc.abs());
    }
    {
        Detector a;
        a.gap = 10.0;
        a.coupling = 0.01;
        Detector b = a;
        auto amps = compute_amplitudes(a, b, PairGeometry{10.0, 0.0, kPi / 4}, Placement::theta, spec);
        const auto q = assemble_qft_state(amps);
        const auto c = assemble_qc_state(amps);
        bool ok = true;
        try {
            q.check_invariants();
            c.check_invariants();
        } catch (const std::exception&) {
            ok = false;
        }
        report("assembled states Hermitian, unit trace", ok, 0.0);
        report("|M| >= |M_c| at light contact", amps.M.log_abs() >= amps.Mc.log_abs(), amps.Mc.abs_ratio(amps.M));
        const double pdev = std::abs(purity(q) - (1.0 - 2.0 * (amps.Laa.abs() + amps.Lbb.abs())));
        report("purity = 1 - 2(L_aa + L_bb) + O(lambda^4)", pdev <= 10 * std::pow(0.01, 4), pdev);
    }
    report("binary entropy H(1/2) = 1", binary_entropy(0.5) == 1.0, binary_entropy(0.5));
    {
        SweepPlan p = preset("fig5");
        p.range.steps = 8;
        const auto s = run_sweep_serial(p, spec);
        const auto c = run_sweep(p, spec);
        report("parallel sweep equals serial sweep", to_csv(s) == to_csv(c), 0.0);
    }
    std::printf("%d check(s) failed\n", failures);
    return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Two-detector entanglement and signalling through quantum and qc fields"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Flags f;
    auto* neg = app.add_subcommand("negativity", "leading-order and exact negativity at one point");
    auto* capp = app.add_subcommand("capacity-perturbative", "collect-calling capacity lower bound");
    auto* capd = app.add_subcommand("capacity-delta", "delta-coupling channel capacity");
    auto* state = app.add_subcommand("state", "assembled two-detector density matrices");
    auto* sweep = app.add_subcommand("sweep", "one-axis parameter sweep");
    auto* verify = app.add_subcommand("verify", "run the quick invariant suite");
    for (auto* s : {neg, capp, capd, state, sweep, verify}) {
        add_common(s, f);
    }
    sweep->add_option("--axis", f.axis, "theta | omega_t | l_over_t | t0_over_t | nu_b");
    sweep->add_option("--observable", f.observable,
                      "negativity_leading | negativity_exact | capacity_perturbative | capacity_delta | "
                      "amplitudes | purity");
    sweep->add_option("--min", f.min, "axis start");
    sweep->add_option("--max", f.max, "axis end");
    sweep->add_option("--steps", f.steps, "number of grid points (>= 2)");

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg = resolve(f);
        const Format fmt = format_from_string(f.format);
        const auto emit_rows = [&](const std::vector<SweepRow>& rows, const SweepPlan& p) {
            emit(rows, fmt, f.out, p, cfg.spec);
        };

        if (*neg) {
            auto rows = point_rows(cfg.plan, Observable::negativity_leading, cfg.spec);
            auto ex = point_rows(cfg.plan, Observable::negativity_exact, cfg.spec);
            rows.insert(rows.end(), ex.begin(), ex.end());
            emit_rows(rows, point_plan(cfg.plan));
        } else if (*capp) {
            SweepPlan p = cfg.plan;
            if (p.a.beta == cplx(0.0, 0.0)) {
                // Default collect-calling states: both detectors in superposition.
                p.a.alpha = p.a.beta = p.b.alpha = 1.0 / std::sqrt(2.0);
                p.b.beta = cplx(0.0, 1.0 / std::sqrt(2.0));
            }
            emit_rows(point_rows(p, Observable::capacity_perturbative, cfg.spec), point_plan(p));
        } else if (*capd) {
            SweepPlan p = cfg.plan;
            if (!f.switching) {
                p.switching = SwitchingKind::delta;
            }
            if (p.a.beta == cplx(0.0, 0.0)) {
                p.a.alpha = p.a.beta = p.b.alpha = p.b.beta = 1.0 / std::sqrt(2.0);
            }
            auto pp = point_plan(p);
            pp.observable = Observable::capacity_delta;
            pp.validate();
            emit_rows(evaluate_point(pp, fixed_value(pp), cfg.spec), pp);
        } else if (*state) {
            print_state(cfg, f.format, f.out);
        } else if (*sweep) {
            cfg.plan.validate();
            emit_rows(run_sweep(cfg.plan, cfg.spec), cfg.plan);
        } else if (*verify) {
            return run_verify(cfg.spec);
        }
    } catch (const std::exception& e) {
        std::cerr << "udw: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
