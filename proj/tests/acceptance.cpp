// Acceptance checks, one PASS/FAIL line per criterion. Tolerances are pinned
// here; nothing is tuned to make a criterion pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "udw/information.hpp"
#include "udw/oracle.hpp"
#include "udw/sweep.hpp"

using namespace udw;

namespace {

const cplx kI{0.0, 1.0};
const double kLambda = 0.01;

int failures = 0;

void report(int n, bool ok, const std::string& what, double seconds)
{
    std::printf("[%s] criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", n, what.c_str(), seconds);
    std::fflush(stdout);
    if (!ok) {
        ++failures;
    }
}

void run(int n, const std::function<bool(std::string&)>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    std::string what;
    bool ok = false;
    try {
        ok = body(what);
    } catch (const std::exception& e) {
        what += std::string(" threw: ") + e.what();
        ok = false;
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(n, ok, what, s);
}

template <class... Args>
std::string fmt(const char* f, Args... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

const char* yes_no(bool b)
{
    return b ? "yes" : "no";
}

Detector gaussian(double gap, double width = 1.0, QubitState q = {})
{
    Detector d;
    d.gap = gap;
    d.coupling = kLambda;
    d.switching = SwitchingFunction::gaussian(0.0, width);
    d.initial_state = q;
    return d;
}

Detector dirac_point(double gap)
{
    Detector d;
    d.gap = gap;
    d.coupling = kLambda;
    d.switching = SwitchingFunction::dirac(0.0, 1.0);
    return d;
}

double residual(const Scaled& lhs, const Scaled& rhs, std::initializer_list<Scaled> terms)
{
    Scaled big = lhs;
    for (const auto& t : terms) {
        if (t.log_abs() > big.log_abs()) {
            big = t;
        }
    }
    return big.is_zero() ? 0.0 : (lhs - rhs).abs_ratio(big);
}

bool kernel_algebra(std::string& what)
{
    const auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> om(1.0, 20.0), len(2.0, 20.0), del(0.0, 20.0);
    const Phase phases[] = {kPlusPlus, kPlusMinus, kMinusPlus, kMinusMinus};
    double worst = 0.0;
    for (int n = 0; n < 20; ++n) {
        const Detector d = gaussian(om(rng));
        const PairGeometry g{len(rng), del(rng), 0.0};
        const auto [a, b] = place_pair(d, d, g, Placement::delay);
        for (Phase p : phases) {
            const auto pr = smear_primitives(a, b, p, {});
            auto ev = [&](KernelKind k) { return pr.evaluate(k).value; };
            // Cross-check the assembled kinds against independent calls.
            const auto W = smeared_bilinear(KernelKind::wightman, a, b, p, {}).value;
            const auto F = smeared_bilinear(KernelKind::feynman, a, b, p, {}).value;
            const auto R = ev(KernelKind::retarded), A = ev(KernelKind::advanced);
            const auto D = ev(KernelKind::symmetric_delta), E = ev(KernelKind::causal_e);
            const auto H = ev(KernelKind::hadamard_h);
            const auto Fbar = pr.evaluate(coefficients(KernelKind::feynman).conj()).value;
            worst = std::max({worst, residual(W, H * 0.5 + E * (0.5 * kI), {H, E}),
                              residual(F, H * 0.5 + D * (0.5 * kI), {H, D}), residual(D, R + A, {R, A}),
                              residual(E, R - A, {R, A}), residual(R * kI, W - Fbar, {W, Fbar}),
                              residual(A * kI, F - W, {F, W})});
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    what = fmt("kernel identities on 20 random configs x 4 phases: max rel residual %.3g <= 1e-8, runtime %.2f s <= 60 s",
               worst, secs);
    return worst <= 1e-8 && secs <= 60.0;
}

bool oracle_equivalence(std::string& what)
{
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (double om : {0.5, 1.0, 2.0}) {
        for (double L : {2.0, 4.0, 8.0}) {
            const Detector d = gaussian(om);
            const auto [a, b] = place_pair(d, d, PairGeometry{L, 0.0, 0.0}, Placement::delay);
            for (auto [k, p] : {std::pair{KernelKind::wightman, kMinusPlus}, {KernelKind::feynman, kPlusPlus}}) {
                const auto oracle = brute_force_extrapolated(k, a, b, p, 0.2, 6);
                const cplx main = smeared_bilinear(k, a, b, p, {}).complex_value();
                worst = std::max(worst, std::abs(main - oracle.value) / std::abs(oracle.value));
            }
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    what = fmt("3x3x2 grid (Omega T, L/T, W|G_F) vs eps-extrapolated brute force: max rel error %.3g <= 1e-6, "
               "runtime %.1f s <= 300 s",
               worst, secs);
    return worst <= 1e-6 && secs <= 300.0;
}

bool qc_causality(std::string& what)
{
    const double L = 10.0;
    bool all_zero = true;
    int n = 0;
    for (double dt : {-25.0, -15.0, -9.999, -5.0, 0.0, 3.0, 9.5, 10.001, 12.0, 30.0}) {
        const Detector d = dirac_point(10.0);
        const auto [a, b] = place_pair(d, d, PairGeometry{L, dt, 0.0}, Placement::delay);
        const auto amps = compute_qc_amplitudes(a, b, {});
        all_zero = all_zero && amps.Mc.is_zero() && amps.Nc.is_zero();
        ++n;
    }
    const Detector g = gaussian(10.0);
    const auto amps = compute_amplitudes(g, g, PairGeometry{L, 0.0, 0.0}, Placement::theta, {});
    const double neg = negativity_leading(amps, Model::qc);
    what = fmt("Dirac off-lightcone M_c = N_c = 0 exactly at %d instants: %s; Gaussian theta=0 qc negativity %.3g < 1e-12",
               n, yes_no(all_zero), neg);
    return all_zero && neg < 1e-12;
}

bool lightlike_peak(std::string& what)
{
    SweepPlan plan = preset("fig5");
    const auto rows = run_sweep(plan, {});
    const double step = (plan.range.max - plan.range.min) / (plan.range.steps - 1);
    bool ok = true;
    what = fmt("theta sweep (100 points, Omega T = 10, L = 10T) argmax vs pi/4 within one step %.4f:", step);
    for (Model m : plan.models) {
        double best = -1.0, at = 0.0;
        for (const auto& r : rows) {
            if (r.model == m && r.value > best) {
                best = r.value;
                at = r.axis_value;
            }
        }
        const double off = std::abs(at - kPi / 4);
        ok = ok && off <= step * (1 + 1e-12);
        what += " " + to_string(m) + fmt(" at %.4f (|d| = %.4f)", at, off);
    }
    return ok;
}

bool spacelike_harvesting(std::string& what)
{
    const Detector g = gaussian(10.0);
    const auto amps = compute_amplitudes(g, g, PairGeometry{10.0, 0.0, 0.0}, Placement::theta, {});
    const double ratio = amps.Mc.abs_ratio(amps.M);
    what = fmt("theta = 0, L = 10T: log|M| = %.2f (|M| > 0), |M_c|/|M| = %.3g < 1e-12", amps.M.log_abs(), ratio);
    return !amps.M.is_zero() && ratio < 1e-12;
}

bool collect_calling(std::string& what)
{
    const QubitState sa(1 / std::sqrt(2.0), 1 / std::sqrt(2.0));
    const QubitState sb(1 / std::sqrt(2.0), cplx(0.0, 1 / std::sqrt(2.0)));
    auto ratios = [&](double T, double L, double t0) {
        const Detector a = gaussian(1.0 / T, T, sa), b = gaussian(1.0 / T, T, sb);
        const auto [pa, pb] = place_pair(a, b, PairGeometry{L, t0, 0.0}, Placement::delay);
        const auto q = capacity_perturbative(pa, pb, Model::quantum, {});
        const auto c = capacity_perturbative(pa, pb, Model::qc, {});
        return std::pair{c.signalling_term / q.signalling_term, c.capacity / q.capacity};
    };
    const auto [s_seq, c_seq] = ratios(1.0, 20.0, 20.0);
    const auto [s_ovl, c_ovl] = ratios(20.0, 1.0, 0.0);
    what = fmt("t0 = L, T = L/20: S ratio %.10f (0.5 +- 1e-3), capacity ratio %.10f (0.25 +- 5e-3);", s_seq, c_seq);
    what += fmt(" t0 = 0, T = 20L: S ratio %.10f, capacity ratio %.10f (1 +- 0.05)", s_ovl, c_ovl);
    return std::abs(s_seq - 0.5) <= 1e-3 && std::abs(c_seq - 0.25) <= 5e-3 && std::abs(s_ovl - 1) <= 0.05 &&
           std::abs(c_ovl - 1) <= 0.05;
}

bool delta_ordering(std::string& what)
{
    const double lbbs[] = {0.01, 0.1, 0.2, 0.35, 0.5};
    bool ordered = true, strict = true, monotone = true;
    double min_gap = 1.0;
    for (int k = 1; k <= 5; ++k) {
        const double th = k * (kPi / 2) / 6;
        double prev = capacity_delta_formula(th, 1.0);
        const double cls = prev;
        for (double lbb : lbbs) {
            const double q = capacity_delta_formula(th, std::exp(-2 * lbb));
            ordered = ordered && cls >= q;
            strict = strict && cls > q;
            monotone = monotone && q < prev;
            min_gap = std::min(min_gap, cls - q);
            prev = q;
        }
    }
    // The same ordering through the full pipeline for one ball-smeared pair.
    const QubitState plus(1 / std::sqrt(2.0), 1 / std::sqrt(2.0));
    Detector d;
    d.gap = 1.0;
    d.coupling = 5.0;
    d.switching = SwitchingFunction::dirac(0.0, 1.0);
    d.profile = SpatialProfile::ball({}, 0.5);
    d.initial_state = plus;
    const PairGeometry g{2.0, 2.0, 0.0};
    const auto cq = capacity_delta(d, d, g, Placement::delay, Model::quantum, {});
    const auto cc = capacity_delta(d, d, g, Placement::delay, Model::qc, {});
    const bool pipeline = cc.capacity > cq.capacity;
    what = fmt("5x5 (theta_E, L_bb) grid: C_qc >= C_q %s, strict (min gap %.3g) %s, C_q decreasing in L_bb %s;",
               yes_no(ordered), min_gap, yes_no(strict), yes_no(monotone));
    what += fmt(" ball pair: C_qc = %.4g > C_q = %.4g", cc.capacity, cq.capacity);
    return ordered && strict && monotone && pipeline;
}

bool purity_check(std::string& what)
{
    const double bound = 10 * std::pow(kLambda, 4);
    double worst = 0.0;
    for (double om : {1.0, 10.0}) {
        for (int i = 0; i < 100; ++i) {
            const Detector g = gaussian(om);
            const PairGeometry geo{10.0, 0.0, i * (kPi / 2) / 99};
            const auto amps = compute_amplitudes(g, g, geo, Placement::theta, {});
            const auto s = assemble_qft_state(amps);
            const double formula = 1 - 2 * (amps.Laa.value().real() + amps.Lbb.value().real());
            worst = std::max(worst, std::abs(purity(s) - formula));
        }
    }
    what = fmt("theta grid at Omega T in {1, 10}: max |Tr rho^2 - (1 - 2(L_aa + L_bb))| = %.3g <= 10 lambda^4 = %.3g",
               worst, bound);
    return worst <= bound;
}

bool classical_limit(std::string& what)
{
    auto ratio = [](double om, const PairGeometry& g, Placement mode) {
        const Detector d = gaussian(om);
        const auto amps = compute_amplitudes(d, d, g, mode, {});
        return qc_qft_entrywise_distance(amps).abs_ratio(amps.M);
    };
    const PairGeometry g{10.0, 0.0, kPi / 4};
    const double high = ratio(50.0, g, Placement::theta);
    const double low = ratio(1.0, g, Placement::theta);
    const double delay = ratio(50.0, PairGeometry{10.0, 10.0, 0.0}, Placement::delay);
    what = fmt("theta = pi/4, L = 10T: dist/|M| = %.6f at Omega T = 50 (<= 0.05), %.4f at Omega T = 1 (> 0.5)", high, low);
    what += fmt("; informational: L = t0 = 10T delay placement gives %.6f", delay);
    return high <= 0.05 && low > 0.5;
}

bool negativity_oracle(std::string& what)
{
    const double lam4 = std::pow(kLambda, 4);
    double worst = 0.0, worst_literal = 0.0, worst_rel = 0.0, lab2 = 0.0;
    bool ok = true;
    for (int i = 0; i < 100; ++i) {
        const Detector g = gaussian(10.0);
        const PairGeometry geo{10.0, 0.0, i * (kPi / 2) / 99};
        const auto amps = compute_amplitudes(g, g, geo, Placement::theta, {});
        const double lead = negativity_leading(amps, Model::quantum);
        const double exact = negativity_exact(assemble_qft_state(amps));
        const double m = std::max(amps.M.abs(), amps.Laa.abs());
        // Amplitudes with lambda^2 stripped off.
        const double bound = 10 * lam4 * std::pow(m / (kLambda * kLambda), 2);
        const double literal = 10 * lam4 * m * m;
        const double gap = std::abs(lead - exact);
        ok = ok && gap <= bound;
        if (bound > 0) {
            worst = std::max(worst, gap / bound);
        }
        if (literal > 0) {
            worst_literal = std::max(worst_literal, gap / literal);
        }
        if (exact > 0) {
            worst_rel = std::max(worst_rel, gap / exact);
        }
        lab2 = std::max(lab2, std::norm(amps.Lab.value()) / bound);
    }
    what = fmt("theta grid, lambda = 0.01: max |N_lead - N_exact| / (10 lambda^4 max(|M|, L)^2) = %.3g <= 1 "
               "(lambda-stripped amplitudes); literal reading ratio %.3g; informational: max relative gap %.3g, "
               "analytic fourth-order term |L_ab|^2 / bound <= %.3g",
               worst, worst_literal, worst_rel, lab2);
    return ok;
}

}  // namespace

int main()
{
    run(1, kernel_algebra);
    run(2, oracle_equivalence);
    run(3, qc_causality);
    run(4, lightlike_peak);
    run(5, spacelike_harvesting);
    run(6, collect_calling);
    run(7, delta_ordering);
    run(8, purity_check);
    run(9, classical_limit);
    run(10, negativity_oracle);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
