#include "udw/bilinear.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace udw {

namespace {

constexpr cplx kHalfI{0.0, 0.5};
constexpr double k4Pi2 = 4.0 * kPi * kPi;

// T(v) = exp(q2 v^2 + q1 v + q0) after the closed-form t' integration, or a
// point mass when both switchings are Dirac.
struct TimeProfile {
    bool zero = false;
    bool point = false;
    double v0 = 0.0;
    cplx log_weight{0.0, 0.0};

    double q2 = -1.0;
    cplx q1{0.0, 0.0};
    cplx q0{0.0, 0.0};

    // q2 = -1/s^2, saddle v_c, Q(v_c).
    double s = 1.0;
    cplx vc{0.0, 0.0};
    cplx Qc{0.0, 0.0};

    cplx Q(cplx v) const
    {
        const cplx d = v - vc;
        return q2 * d * d + Qc;
    }
};

TimeProfile time_profile(const SwitchingFunction& a, const SwitchingFunction& b, double wa, double wb)
{
    TimeProfile tp;
    const cplx I{0.0, 1.0};
    if (a.is_dirac() && b.is_dirac()) {
        const auto& da = a.as_dirac();
        const auto& db = b.as_dirac();
        tp.point = true;
        if (da.strength == 0.0 || db.strength == 0.0) {
            tp.zero = true;
            return tp;
        }
        tp.v0 = da.instant - db.instant;
        tp.log_weight = std::log(da.strength * db.strength) + I * (wa * da.instant + wb * db.instant);
        return tp;
    }
    if (a.is_gaussian() && b.is_gaussian()) {
        const auto& ga = a.as_gaussian();
        const auto& gb = b.as_gaussian();
        const double ta = ga.center, tb = gb.center;
        const double Ta2 = ga.width * ga.width, Tb2 = gb.width * gb.width;
        const double A = 1.0 / Ta2 + 1.0 / Tb2;
        const cplx B0 = 2.0 * ta / Ta2 + 2.0 * tb / Tb2 + I * (wa + wb);
        const double C0 = -ta * ta / Ta2 - tb * tb / Tb2;
        tp.q2 = -1.0 / (Ta2 + Tb2);
        tp.q1 = (2.0 * (ta - tb) + I * (wa * Ta2 - wb * Tb2)) / (Ta2 + Tb2);
        tp.q0 = B0 * B0 / (4.0 * A) + C0 + 0.5 * std::log(kPi / A);
    } else if (a.is_dirac()) {
        const auto& da = a.as_dirac();
        const auto& gb = b.as_gaussian();
        if (da.strength == 0.0) {
            tp.zero = true;
            return tp;
        }
        const double ta = da.instant, tb = gb.center, Tb2 = gb.width * gb.width;
        tp.q2 = -1.0 / Tb2;
        tp.q1 = -I * wb + 2.0 * (ta - tb) / Tb2;
        tp.q0 = std::log(da.strength) + I * (wa + wb) * ta - (ta - tb) * (ta - tb) / Tb2;
    } else {
        const auto& ga = a.as_gaussian();
        const auto& db = b.as_dirac();
        if (db.strength == 0.0) {
            tp.zero = true;
            return tp;
        }
        const double ta = ga.center, tb = db.instant, Ta2 = ga.width * ga.width;
        tp.q2 = -1.0 / Ta2;
        tp.q1 = I * wa - 2.0 * (tb - ta) / Ta2;
        tp.q0 = std::log(db.strength) + I * (wa + wb) * tb - (tb - ta) * (tb - ta) / Ta2;
    }
    tp.s = std::sqrt(-1.0 / tp.q2);
    tp.vc = -tp.q1 / (2.0 * tp.q2);
    tp.Qc = tp.q0 - tp.q1 * tp.q1 / (4.0 * tp.q2);
    return tp;
}

// Max of Re Q along the line Im v = y.
double line_reference(const TimeProfile& tp, double y)
{
    const double dy = y - tp.vc.imag();
    return tp.Qc.real() + dy * dy / (tp.s * tp.s);
}

// Symmetric pole subtraction: on [p - d, p + d] integrate g(p + u) + g(p - u)
// over u in [0, d], which is smooth. The folded pieces are represented on
// [p, p + d] so a single adaptive pass distributes the error globally.
QuadResult pv_integrate(const ComplexFn& g, double lo, double hi, std::vector<double> poles, double d,
                        std::vector<double> breaks, const QuadratureSpec& spec, double tol_scale)
{
    std::sort(poles.begin(), poles.end());
    std::vector<double> inside;
    for (double p : poles) {
        if (p >= lo - d && p <= hi + d) {
            inside.push_back(p);
            lo = std::min(lo, p - d);
            hi = std::max(hi, p + d);
        }
    }

    const auto folded = [&](double x) -> cplx {
        for (double p : inside) {
            if (x > p && x < p + d) {
                return g(x) + g(2.0 * p - x);
            }
        }
        return g(x);
    };

    std::vector<Interval> pieces;
    double cursor = lo;
    const auto push_regular = [&](double a, double b) {
        std::vector<double> cuts{a};
        for (double c : breaks) {
            if (c > a && c < b) {
                cuts.push_back(c);
            }
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.push_back(b);
        for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
            pieces.push_back({cuts[j], cuts[j + 1]});
        }
    };
    for (double p : inside) {
        push_regular(cursor, p - d);
        pieces.push_back({p, p + d});
        cursor = p + d;
    }
    push_regular(cursor, hi);

    return integrate_or_throw(folded, pieces, spec.abs_tol * tol_scale, spec.rel_tol * tol_scale,
                              spec.max_subdivisions);
}

// Point profiles -------------------------------------------------------------

struct RouteChoice {
    SmearingRoute route;
    double y = 0.0;  // contour height
    double ref = 0.0;
};

RouteChoice choose_route(const TimeProfile& tp, bool self)
{
    const double yc = tp.vc.imag();
    if (self) {
        const double y = std::min(yc, -0.5 * tp.s);
        return {SmearingRoute::self_contour, y, line_reference(tp, y)};
    }
    if (std::abs(yc) <= tp.s) {
        return {SmearingRoute::real_axis, 0.0, line_reference(tp, 0.0)};
    }
    return {SmearingRoute::contour, yc, line_reference(tp, yc)};
}

// Normalised PV primitive (real axis) or line integral, at distance r.
QuadResult line_primitive(const TimeProfile& tp, const RouteChoice& rc, double r, const QuadratureSpec& spec,
                          double tol_scale)
{
    const double W = spec.integration_window_sigmas;
    const double xc = tp.vc.real();
    const double lo = xc - W * tp.s;
    const double hi = xc + W * tp.s;

    if (rc.route == SmearingRoute::real_axis) {
        const auto g = [&](double v) -> cplx {
            return std::exp(tp.Q(v) - rc.ref) / (k4Pi2 * (r * r - v * v));
        };
        return pv_integrate(g, lo, hi, {-r, r}, std::min(tp.s, r), {xc}, spec, tol_scale);
    }

    const double y = rc.y;
    ComplexFn f;
    if (rc.route == SmearingRoute::self_contour) {
        f = [&tp, &rc, y](double x) -> cplx {
            const cplx v{x, y};
            return -std::exp(tp.Q(v) - rc.ref) / (k4Pi2 * v * v);
        };
    } else {
        f = [&tp, &rc, y, r](double x) -> cplx {
            const cplx v{x, y};
            return std::exp(tp.Q(v) - rc.ref) / (k4Pi2 * (r * r - v * v));
        };
    }
    std::vector<double> cuts{lo, xc, hi};
    for (double p : {-r, r, 0.0}) {
        if (p > lo && p < hi) {
            cuts.push_back(p);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Interval> pieces;
    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
        pieces.push_back({cuts[j], cuts[j + 1]});
    }
    return integrate_or_throw(f, pieces, spec.abs_tol * tol_scale, spec.rel_tol * tol_scale,
                              spec.max_subdivisions);
}

Scaled lightcone_delta(const TimeProfile& tp, double v, double r)
{
    return Scaled::exp_of(tp.Q(v)) * cplx(1.0 / (4.0 * kPi * r), 0.0);
}

bool hits(double v0, double target)
{
    const double tol = 1e-12 * std::max({1.0, std::abs(v0), std::abs(target)});
    return std::abs(v0 - target) <= tol;
}

void smear_dirac_pair(SmearedPrimitives& out, const TimeProfile& tp, double r, double L, double s_sp,
                      bool need_pv, const QuadratureSpec& spec)
{
    out.route = SmearingRoute::exact;
    const double v0 = tp.v0;
    const Scaled w = Scaled::exp_of(tp.log_weight);

    if (s_sp == 0.0) {
        if (r == 0.0) {
            if (v0 == 0.0) {
                throw DivergentSelfEnergyError(
                    "equal-time smearing of a pointlike detector with itself diverges; use a Gaussian ball");
            }
            // Same worldline, distinct instants: the deltas miss and the
            // regular part is -1/(4 pi^2 v0^2).
            if (need_pv) {
                out.line = w * cplx(-1.0 / (k4Pi2 * v0 * v0), 0.0);
                out.has_line = true;
            }
            return;
        }
        const cplx delta_w{1.0 / (4.0 * kPi * r), 0.0};
        out.minus = hits(v0, -r) ? w * delta_w : Scaled{};
        out.plus = hits(v0, r) ? w * delta_w : Scaled{};
        if (need_pv) {
            if (hits(std::abs(v0), r)) {
                out.pv_singular = true;
            } else {
                out.line = w * cplx(1.0 / (k4Pi2 * (r * r - v0 * v0)), 0.0);
                out.has_line = true;
            }
        }
        return;
    }

    // Lightcone deltas sift the radial density at rho = |v0|.
    const double av = std::abs(v0);
    const Scaled on_cone =
        av > 0.0 ? w * cplx(radial_density(av, L, s_sp) / (4.0 * kPi * av), 0.0) : Scaled{};
    out.minus = v0 < 0.0 ? on_cone : Scaled{};
    out.plus = v0 > 0.0 ? on_cone : Scaled{};

    if (need_pv) {
        const double W = spec.integration_window_sigmas;
        const double lo = std::max(0.0, L - W * s_sp);
        const double hi = L + W * s_sp;
        const auto g = [&](double rho) -> cplx {
            return radial_density(rho, L, s_sp) / (k4Pi2 * (rho * rho - v0 * v0));
        };
        std::vector<double> poles;
        double d = s_sp;
        if (av > 0.0) {
            poles.push_back(av);
            d = std::min(s_sp, av);
        }
        const QuadResult q = pv_integrate(g, lo, hi, poles, d, {L}, spec, 1.0);
        out.line = w * q.value;
        out.line_error = w * cplx(q.error, 0.0);
        out.has_line = true;
        out.evaluations += q.evaluations;
    }
}

}  // namespace

void QuadratureSpec::validate() const
{
    if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0) || !(abs_tol > 0.0 || rel_tol > 0.0)) {
        throw DomainError("quadrature needs abs_tol >= 0, rel_tol >= 0, one of them > 0");
    }
    if (max_subdivisions < 1) {
        throw DomainError("max_subdivisions must be positive");
    }
    if (!(integration_window_sigmas >= 7.0)) {
        throw DomainError("integration window must be at least 7 widths");
    }
}

std::string to_string(SmearingRoute r)
{
    switch (r) {
    case SmearingRoute::exact: return "exact";
    case SmearingRoute::real_axis: return "real_axis";
    case SmearingRoute::contour: return "contour";
    case SmearingRoute::self_contour: return "self_contour";
    }
    return "unknown";
}

double radial_density(double rho, double L, double s)
{
    if (rho < 0.0) {
        return 0.0;
    }
    const double s2 = s * s;
    if (L == 0.0) {
        return 4.0 * rho * rho * std::exp(-rho * rho / s2) / (std::sqrt(kPi) * s2 * s);
    }
    // rho e^{-(rho^2+L^2)/s^2} 2 sinh(2 rho L / s^2) / (sqrt(pi) s L), written
    // without the overflowing sinh.
    const double near = std::exp(-(rho - L) * (rho - L) / s2);
    return -rho * near * std::expm1(-4.0 * rho * L / s2) / (std::sqrt(kPi) * s * L);
}

BilinearResult SmearedPrimitives::evaluate(const KernelCoefficients& c) const
{
    const cplx zero{0.0, 0.0};
    BilinearResult out;
    out.evaluations = evaluations;
    if (route == SmearingRoute::self_contour) {
        if (!(c == coefficients(KernelKind::wightman))) {
            throw SingularGeometryError("only the Wightman kernel has a finite equal-position smearing");
        }
        out.value = line * cplx(coupling, 0.0);
        out.error = line_error * cplx(coupling, 0.0);
        return out;
    }
    cplx cl = c.pv, cm = c.minus, cp = c.plus;
    if (route == SmearingRoute::contour) {
        const cplx shift = static_cast<double>(sigma) * c.pv * kHalfI;
        cm = c.minus - shift;
        cp = c.plus + shift;
    }
    if (cl != zero) {
        if (pv_singular) {
            throw SingularGeometryError("principal-value kernel evaluated exactly on the lightcone");
        }
        if (!has_line) {
            throw std::logic_error("PV primitive was not computed for this smearing");
        }
    }
    const std::array<cplx, 3> co{cl, cm, cp};
    const std::array<Scaled, 3> terms{line, minus, plus};
    out.value = linear_combination(co, terms) * cplx(coupling, 0.0);
    out.error = line_error * cplx(std::abs(cl) * coupling, 0.0);
    return out;
}

Scaled SmearedPrimitives::principal_value() const
{
    if (route == SmearingRoute::contour) {
        return line - (minus - plus) * (static_cast<double>(sigma) * kHalfI);
    }
    if (route == SmearingRoute::self_contour) {
        throw SingularGeometryError("no principal-value split at zero separation");
    }
    return line;
}

SmearedPrimitives smear_primitives(const Detector& a, const Detector& b, Phase phase,
                                   const QuadratureSpec& spec, bool need_pv)
{
    spec.validate();
    a.validate();
    b.validate();
    for (int s : {phase.s1, phase.s2}) {
        if (s < -1 || s > 1) {
            throw DomainError("phase signs must be -1, 0 or +1");
        }
    }

    SmearedPrimitives out;
    out.coupling = a.coupling * b.coupling;
    const double wa = phase.s1 * a.gap;
    const double wb = phase.s2 * b.gap;
    const TimeProfile tp = time_profile(a.switching, b.switching, wa, wb);

    const auto& pa = a.profile.position();
    const auto& pb = b.profile.position();
    const double L = std::sqrt((pa.x - pb.x) * (pa.x - pb.x) + (pa.y - pb.y) * (pa.y - pb.y) +
                               (pa.z - pb.z) * (pa.z - pb.z));
    const double s_sp = std::sqrt(a.profile.sigma() * a.profile.sigma() + b.profile.sigma() * b.profile.sigma());

    if (tp.zero) {
        out.has_line = true;
        return out;
    }
    if (tp.point) {
        smear_dirac_pair(out, tp, L, L, s_sp, need_pv, spec);
        return out;
    }

    if (s_sp == 0.0) {
        const double r = L;
        if (r == 0.0) {
            if (!need_pv) {
                throw SingularGeometryError("lightcone deltas are undefined at zero separation");
            }
            const RouteChoice rc = choose_route(tp, true);
            out.route = rc.route;
            const QuadResult q = line_primitive(tp, rc, 0.0, spec, 1.0);
            out.line = Scaled(q.value, rc.ref);
            out.line_error = Scaled(q.error, rc.ref);
            out.has_line = true;
            out.evaluations = q.evaluations;
            return out;
        }
        const RouteChoice rc = choose_route(tp, false);
        out.route = rc.route;
        out.sigma = rc.y < 0.0 ? 1 : -1;
        out.minus = lightcone_delta(tp, -r, r);
        out.plus = lightcone_delta(tp, r, r);
        if (need_pv) {
            const QuadResult q = line_primitive(tp, rc, r, spec, 1.0);
            out.line = Scaled(q.value, rc.ref);
            out.line_error = Scaled(q.error, rc.ref);
            out.has_line = true;
            out.evaluations = q.evaluations;
        }
        return out;
    }

    // Gaussian balls: average the point result over the radial density of
    // the separation. Each primitive keeps a rho-independent reference scale.
    const double W = spec.integration_window_sigmas;
    const double lo = std::max(0.0, L - W * s_sp);
    const double hi = L + W * s_sp;
    std::vector<Interval> rho_pieces;
    if (L > lo && L < hi) {
        rho_pieces = {{lo, L}, {L, hi}};
    } else {
        rho_pieces = {{lo, hi}};
    }

    const RouteChoice rc = choose_route(tp, false);
    out.route = rc.route;
    out.sigma = rc.y < 0.0 ? 1 : -1;
    const double ref_real = line_reference(tp, 0.0);

    for (int sign : {-1, 1}) {
        const auto f = [&](double rho) -> cplx {
            return radial_density(rho, L, s_sp) * std::exp(tp.Q(sign * rho) - ref_real) /
                   (4.0 * kPi * rho);
        };
        const QuadResult q =
            integrate_or_throw(f, rho_pieces, spec.abs_tol, spec.rel_tol, spec.max_subdivisions);
        out.evaluations += q.evaluations;
        (sign < 0 ? out.minus : out.plus) = Scaled(q.value, ref_real);
    }

    if (need_pv) {
        double worst_inner = 0.0;
        long inner_evals = 0;
        const auto f = [&](double rho) -> cplx {
            const QuadResult in = line_primitive(tp, rc, rho, spec, 0.1);
            inner_evals += in.evaluations;
            if (in.abs_integral > 0.0) {
                worst_inner = std::max(worst_inner, in.error / in.abs_integral);
            }
            return radial_density(rho, L, s_sp) * in.value;
        };
        const QuadResult q =
            integrate_or_throw(f, rho_pieces, spec.abs_tol, spec.rel_tol, spec.max_subdivisions);
        out.line = Scaled(q.value, rc.ref);
        out.line_error = Scaled(q.error + worst_inner * q.abs_integral, rc.ref);
        out.has_line = true;
        out.evaluations += q.evaluations + inner_evals;
    }
    return out;
}

BilinearResult smeared_bilinear(KernelKind kind, const Detector& a, const Detector& b, Phase phase,
                                const QuadratureSpec& spec)
{
    const KernelCoefficients c = coefficients(kind);
    return smear_primitives(a, b, phase, spec, c.has_pv()).evaluate(c);
}

BilinearResult smeared_bilinear(KernelKind kind, const Detector& a, const Detector& b,
                                const PairGeometry& g, Placement mode, Phase phase,
                                const QuadratureSpec& spec)
{
    auto [pa, pb] = place_pair(a, b, g, mode);
    return smeared_bilinear(kind, pa, pb, phase, spec);
}

}  // namespace udw
