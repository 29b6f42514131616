#pragma once

// Entanglement and channel-capacity measures on assembled states.

#include <map>
#include <string>

#include "udw/models.hpp"

namespace udw {

/// |sum of negative eigenvalues| of the partial transpose on B. X-shaped
/// inputs are diagonalised per 2x2 block in closed form, which keeps
/// eigenvalues of order 1e-30 accurate next to an O(1) population.
double negativity_exact(const TwoQubitState& s);

/// Partial transpose on subsystem B (or A).
Eigen::Matrix4cd partial_transpose(const Eigen::Matrix4cd& rho, bool on_b = true);

/// qc: |M_c|. quantum: max(0, |M| - L_aa), identical detectors only.
/// `identical_tol` is relative to max(L_aa, L_bb).
Scaled negativity_leading_scaled(const AmplitudeSet& amps, Model model, double identical_tol = 1e-6);
double negativity_leading(const AmplitudeSet& amps, Model model, double identical_tol = 1e-6);

double purity(const TwoQubitState& s);

/// Base-2 binary entropy with H(0) = H(1) = 0.
double binary_entropy(double x);

struct ChannelReport {
    double capacity = 0.0;
    double signalling_term = 0.0;
    Model model = Model::quantum;
    double nu_b = 1.0;
    std::map<std::string, double> params;
};

/// S_ab for the quantum field (retarded kernel, prefactor -4 lambda^2) or
/// the qc field (half the symmetric kernel, prefactor -2 lambda^2), for
/// placed detectors with arbitrary pure initial states.
Scaled signalling_term_scaled(const Detector& a, const Detector& b, Model model, const QuadratureSpec& spec);
double signalling_term(const Detector& a, const Detector& b, Model model, const QuadratureSpec& spec);
double signalling_term(const Detector& a, const Detector& b, const PairGeometry& g, Placement mode,
                       Model model, const QuadratureSpec& spec);

/// Leading-order lower bound (2 / ln 2) (S / (4 |alpha_b| |beta_b|))^2, in bits.
ChannelReport capacity_perturbative(const Detector& a, const Detector& b, Model model,
                                    const QuadratureSpec& spec);
ChannelReport capacity_perturbative(const Detector& a, const Detector& b, const PairGeometry& g,
                                    Placement mode, Model model, const QuadratureSpec& spec);

/// H(1/2 + nu |cos theta| / 2) - H(1/2 + nu / 2).
double capacity_delta_formula(double theta_e, double nu_b);

ChannelReport capacity_delta(const Detector& a, const Detector& b, Model model, const QuadratureSpec& spec);
ChannelReport capacity_delta(const Detector& a, const Detector& b, const PairGeometry& g, Placement mode,
                             Model model, const QuadratureSpec& spec);

}  // namespace udw
