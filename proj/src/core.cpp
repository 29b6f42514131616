#include "udw/core.hpp"

#include <algorithm>
#include <cmath>

namespace udw {

bool Event::finite() const
{
    return std::isfinite(t) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
}

double Event::spatial_distance(const Event& o) const
{
    return std::sqrt((x - o.x) * (x - o.x) + (y - o.y) * (y - o.y) + (z - o.z) * (z - o.z));
}

double interval(const Event& a, const Event& b)
{
    const double dt = a.t - b.t;
    const double r = a.spatial_distance(b);
    return -dt * dt + r * r;
}

SwitchingFunction SwitchingFunction::gaussian(double center, double width)
{
    if (!(width > 0.0) || !std::isfinite(width) || !std::isfinite(center)) {
        throw DomainError("Gaussian switching needs a finite width T > 0");
    }
    return SwitchingFunction(GaussianSwitching{center, width});
}

SwitchingFunction SwitchingFunction::dirac(double instant, double strength)
{
    if (!std::isfinite(instant) || !std::isfinite(strength) || strength < 0.0) {
        throw DomainError("Dirac switching needs a finite instant and strength >= 0");
    }
    return SwitchingFunction(DiracSwitching{instant, strength});
}

double SwitchingFunction::center() const
{
    return is_gaussian() ? as_gaussian().center : as_dirac().instant;
}

double SwitchingFunction::value(double t) const
{
    if (!is_gaussian()) {
        throw DomainError("a Dirac switching has no pointwise value");
    }
    const auto& g = as_gaussian();
    const double u = (t - g.center) / g.width;
    return std::exp(-u * u);
}

SwitchingFunction SwitchingFunction::shifted(double dt) const
{
    if (is_gaussian()) {
        return gaussian(as_gaussian().center + dt, as_gaussian().width);
    }
    return dirac(as_dirac().instant + dt, as_dirac().strength);
}

SpatialProfile SpatialProfile::point(Position pos)
{
    return SpatialProfile(pos, 0.0);
}

SpatialProfile SpatialProfile::ball(Position pos, double sigma)
{
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw DomainError("Gaussian ball needs sigma > 0");
    }
    return SpatialProfile(pos, sigma);
}

double SpatialProfile::density(double x, double y, double z) const
{
    if (is_point()) {
        throw DomainError("a point profile has no pointwise density");
    }
    const double dx = x - pos_.x, dy = y - pos_.y, dz = z - pos_.z;
    const double s2 = sigma_ * sigma_;
    return std::pow(kPi * s2, -1.5) * std::exp(-(dx * dx + dy * dy + dz * dz) / s2);
}

QubitState::QubitState(cplx alpha, cplx beta) : alpha_(alpha), beta_(beta)
{
    const double n = std::norm(alpha) + std::norm(beta);
    if (!(std::abs(n - 1.0) <= 1e-12)) {
        throw DomainError("qubit amplitudes must satisfy |alpha|^2 + |beta|^2 = 1");
    }
}

QubitState QubitState::normalized(cplx alpha, cplx beta)
{
    const double n = std::sqrt(std::norm(alpha) + std::norm(beta));
    if (!(n > 0.0)) {
        throw DomainError("cannot normalise a zero qubit vector");
    }
    return QubitState(alpha / n, beta / n);
}

void Detector::validate() const
{
    if (!(gap >= 0.0) || !std::isfinite(gap)) {
        throw DomainError("detector gap must be >= 0");
    }
    if (!(coupling >= 0.0) || !std::isfinite(coupling)) {
        throw DomainError("detector coupling must be >= 0");
    }
}

Event Detector::center() const
{
    const auto& p = profile.position();
    return {switching.center(), p.x, p.y, p.z};
}

Detector Detector::placed_at(const Event& e) const
{
    Detector d = *this;
    d.switching = switching.shifted(e.t - switching.center());
    d.profile = profile.moved_to({e.x, e.y, e.z});
    return d;
}

void PairGeometry::validate(Placement mode) const
{
    if (!(L > 0.0) || !std::isfinite(L)) {
        throw DomainError("pair separation L must be > 0");
    }
    if (mode == Placement::theta) {
        // Rounding slack so grids that end at pi/2 are accepted.
        if (!(theta >= -1e-12 && theta <= kPi / 2 + 1e-12)) {
            throw DomainError("theta must lie in [0, pi/2]");
        }
    } else if (!std::isfinite(t0)) {
        throw DomainError("delay t0 must be finite");
    }
}

std::pair<Event, Event> geometry_to_centers(const PairGeometry& g, Placement mode)
{
    g.validate(mode);
    Event a{};
    Event b{};
    if (mode == Placement::theta) {
        b.t = g.L * std::sin(g.theta);
        b.x = g.L * std::cos(g.theta);
    } else {
        b.t = g.t0;
        b.x = g.L;
    }
    return {a, b};
}

std::pair<Detector, Detector> place_pair(const Detector& a, const Detector& b,
                                         const PairGeometry& g, Placement mode)
{
    auto [ea, eb] = geometry_to_centers(g, mode);
    return {a.placed_at(ea), b.placed_at(eb)};
}

std::string to_string(CausalClass c)
{
    switch (c) {
    case CausalClass::effectively_spacelike: return "effectively-spacelike";
    case CausalClass::light_contact: return "light-contact";
    case CausalClass::timelike: return "timelike";
    }
    return "unknown";
}

std::string to_string(Placement p)
{
    return p == Placement::theta ? "theta" : "delay";
}

namespace {

std::pair<double, double> strong_window(const SwitchingFunction& s)
{
    if (s.is_gaussian()) {
        const auto& g = s.as_gaussian();
        return {g.center - kStrongSupportWidths * g.width, g.center + kStrongSupportWidths * g.width};
    }
    return {s.as_dirac().instant, s.as_dirac().instant};
}

}  // namespace

CausalClass causal_class(const Detector& a, const Detector& b)
{
    const double r = a.center().spatial_distance(b.center());
    auto [a1, a2] = strong_window(a.switching);
    auto [b1, b2] = strong_window(b.switching);
    // Range of t_b - t_a over the two windows.
    const double lo = b1 - a2;
    const double hi = b2 - a1;
    const double tol = 1e-12 * std::max({1.0, r, std::abs(lo), std::abs(hi)});

    const auto touches = [&](double c) { return lo - tol <= c && c <= hi + tol; };
    if (touches(r) || touches(-r)) {
        return CausalClass::light_contact;
    }
    if (lo > -r && hi < r) {
        return CausalClass::effectively_spacelike;
    }
    return CausalClass::timelike;
}

CausalClass causal_class(const Detector& a, const Detector& b, const PairGeometry& g,
                         Placement mode)
{
    auto [pa, pb] = place_pair(a, b, g, mode);
    return causal_class(pa, pb);
}

}  // namespace udw
