#pragma once

// Spacetime, detector and geometry data model.
//
// Natural units hbar = c = 1. Every time and length is measured in units of
// the Gaussian switching width T of detector A, so the dimensionless inputs
// Omega*T, L/T and t0/T are the canonical API surface.

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace udw {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Half-width of the strong support of a Gaussian switching, in units of its
/// width. 99.9999% of the switching area lies inside [t_c - 3.5T, t_c + 3.5T].
inline constexpr double kStrongSupportWidths = 3.5;

// ---------------------------------------------------------------------------
// Errors

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when two kernel arguments sit on the same worldline (r = 0) or on an
/// exact lightcone where a regular part is singular.
class SingularGeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivergentSelfEnergyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OrderingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonIdenticalDetectorsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateReceiverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Spacetime

struct Event {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool finite() const;
    double spatial_distance(const Event& other) const;
};

/// Minkowski interval s^2 = -(dt)^2 + |dx|^2.
double interval(const Event& a, const Event& b);

// ---------------------------------------------------------------------------
// Switching functions

struct GaussianSwitching {
    double center = 0.0;  // t_c
    double width = 1.0;   // T > 0
};

struct DiracSwitching {
    double instant = 0.0;   // t_i
    double strength = 1.0;  // eta
};

class SwitchingFunction {
public:
    static SwitchingFunction gaussian(double center, double width);
    static SwitchingFunction dirac(double instant, double strength);

    bool is_gaussian() const { return std::holds_alternative<GaussianSwitching>(v_); }
    bool is_dirac() const { return std::holds_alternative<DiracSwitching>(v_); }
    const GaussianSwitching& as_gaussian() const { return std::get<GaussianSwitching>(v_); }
    const DiracSwitching& as_dirac() const { return std::get<DiracSwitching>(v_); }

    /// Peak time for Gaussians, instant for Dirac deltas.
    double center() const;

    /// exp(-(t - t_c)^2 / T^2); Dirac switchings have no pointwise value.
    double value(double t) const;

    SwitchingFunction shifted(double dt) const;

private:
    explicit SwitchingFunction(std::variant<GaussianSwitching, DiracSwitching> v) : v_(v) {}
    std::variant<GaussianSwitching, DiracSwitching> v_;
};

// ---------------------------------------------------------------------------
// Spatial profiles

struct Position {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Point profile, delta^(3)(x - pos), or a unit-normalised Gaussian ball
/// (pi sigma^2)^(-3/2) exp(-|x - pos|^2 / sigma^2).
class SpatialProfile {
public:
    static SpatialProfile point(Position pos);
    static SpatialProfile ball(Position pos, double sigma);

    bool is_point() const { return sigma_ == 0.0; }
    const Position& position() const { return pos_; }
    double sigma() const { return sigma_; }

    double density(double x, double y, double z) const;
    SpatialProfile moved_to(Position pos) const { return SpatialProfile(pos, sigma_); }

private:
    SpatialProfile(Position pos, double sigma) : pos_(pos), sigma_(sigma) {}
    Position pos_;
    double sigma_ = 0.0;
};

// ---------------------------------------------------------------------------
// Detectors

class QubitState {
public:
    QubitState() = default;
    /// Throws DomainError unless |alpha|^2 + |beta|^2 = 1 within 1e-12.
    QubitState(cplx alpha, cplx beta);

    static QubitState ground() { return {}; }
    static QubitState excited() { return QubitState(0.0, 1.0); }
    /// Normalises (alpha, beta) before construction.
    static QubitState normalized(cplx alpha, cplx beta);

    cplx alpha() const { return alpha_; }
    cplx beta() const { return beta_; }

private:
    cplx alpha_ = 1.0;
    cplx beta_ = 0.0;
};

struct Detector {
    double gap = 0.0;       // Omega, in units of 1/T
    double coupling = 0.0;  // lambda
    SwitchingFunction switching = SwitchingFunction::gaussian(0.0, 1.0);
    SpatialProfile profile = SpatialProfile::point({});
    QubitState initial_state{};

    /// Throws DomainError on negative gap or coupling.
    void validate() const;

    /// Center of the spacetime interaction region.
    Event center() const;

    /// Copy placed with its interaction centered on the event `e`.
    Detector placed_at(const Event& e) const;
};

// ---------------------------------------------------------------------------
// Pair geometry

enum class Placement { theta, delay };

struct PairGeometry {
    double L = 10.0;      // separation
    double t0 = 0.0;      // delay (delay mode)
    double theta = 0.0;   // radians in [0, pi/2] (theta mode)

    void validate(Placement mode) const;
};

/// A-center and B-center events. In theta mode B = (L sin(theta), L cos(theta), 0, 0);
/// in delay mode B = (t0, L, 0, 0). A always sits at the origin.
std::pair<Event, Event> geometry_to_centers(const PairGeometry& g, Placement mode);

/// Places `a` at the A-center and `b` at the B-center of `g`.
std::pair<Detector, Detector> place_pair(const Detector& a, const Detector& b,
                                         const PairGeometry& g, Placement mode);

enum class CausalClass { effectively_spacelike, light_contact, timelike };

std::string to_string(CausalClass c);
std::string to_string(Placement p);

/// Classifies two placed detectors by comparing the strong-support windows of
/// their switchings (exact instants for Dirac deltas) against the lightcone of
/// their spatial separation.
CausalClass causal_class(const Detector& a, const Detector& b);

/// Convenience overload: places the pair with `g` first.
CausalClass causal_class(const Detector& a, const Detector& b, const PairGeometry& g,
                         Placement mode);

}  // namespace udw
