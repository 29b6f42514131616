#pragma once

// Parameter sweeps over one axis with everything else fixed.

#include <optional>
#include <string>
#include <vector>

#include "udw/information.hpp"

namespace udw {

enum class SweepAxis { theta, omega_t, l_over_t, t0_over_t, nu_b };
enum class Observable {
    negativity_leading,
    negativity_exact,
    capacity_perturbative,
    capacity_delta,
    amplitudes,
    purity
};
enum class SwitchingKind { gaussian, delta };

std::string to_string(SweepAxis a);
std::string to_string(Observable o);
std::string to_string(SwitchingKind s);
SweepAxis sweep_axis_from_string(const std::string& s);
Observable observable_from_string(const std::string& s);
SwitchingKind switching_from_string(const std::string& s);

struct SweepRange {
    double min = 0.0;
    double max = 1.0;
    int steps = 2;
};

/// One detector in units of the switching width T of detector A.
struct DetectorParams {
    double omega_t = 10.0;
    double lambda = 0.01;
    double width = 1.0;   // Gaussian width
    double eta = 1.0;     // Dirac strength
    double sigma = 0.0;   // ball width, 0 for pointlike
    cplx alpha{1.0, 0.0};
    cplx beta{0.0, 0.0};
};

struct SweepPlan {
    std::string name = "custom";
    SweepAxis axis = SweepAxis::theta;
    SweepRange range{0.0, kPi / 2, 100};
    Observable observable = Observable::negativity_leading;
    std::vector<Model> models{Model::qc, Model::quantum};
    SwitchingKind switching = SwitchingKind::gaussian;
    Placement placement = Placement::theta;
    PairGeometry geometry{10.0, 0.0, 0.0};
    DetectorParams a;
    DetectorParams b;

    /// Throws DomainError on an invalid plan.
    void validate() const;
    std::vector<double> grid() const;
};

struct SweepRow {
    std::string axis_name;
    double axis_value = 0.0;
    Model model = Model::quantum;
    std::string observable;
    double value = 0.0;
    double est_error = 0.0;
    std::string causal_class;
    /// Set when this grid point failed; value is NaN then.
    std::string error;
};

/// Detectors placed at the plan's geometry for one axis value.
std::pair<Detector, Detector> plan_detectors(const SweepPlan& plan, double axis_value);

/// Rows for one grid point.
std::vector<SweepRow> evaluate_point(const SweepPlan& plan, double axis_value, const QuadratureSpec& spec);

/// Rows in axis order, grid points in parallel. Identical to run_sweep_serial.
std::vector<SweepRow> run_sweep(const SweepPlan& plan, const QuadratureSpec& spec);
std::vector<SweepRow> run_sweep_serial(const SweepPlan& plan, const QuadratureSpec& spec);

/// Built-in figure-family plans: fig2, fig3, fig4, fig5.
SweepPlan preset(const std::string& name);

}  // namespace udw
