#pragma once

// Leading-order joint detector states for the two mediation models, and the
// delta-coupled receiver state.
//
// Basis order is {g_A g_B, g_A e_B, e_A g_B, e_A e_B}, i.e. index 2a + b.

#include <Eigen/Dense>

#include "udw/bilinear.hpp"

namespace udw {

enum class Model { quantum, qc };
std::string to_string(Model m);
Model model_from_string(const std::string& s);

/// Second order for the quantum field; the qc state keeps its closed-form
/// |M_c|^2 fourth-order entries.
enum class OrderTag { second, fourth_qc };
std::string to_string(OrderTag t);

struct TwoQubitState {
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    OrderTag order = OrderTag::second;

    /// Throws DomainError unless Hermitian and unit trace (1e-12) with
    /// diagonal entries >= -1e-12.
    void check_invariants() const;
};

struct AmplitudeSet {
    Scaled Mc;
    Scaled Nc;
    Scaled M;
    Scaled Laa;
    Scaled Lbb;
    Scaled Lab;

    // Quadrature error estimates, same order.
    Scaled Mc_err;
    Scaled Nc_err;
    Scaled M_err;
    Scaled Laa_err;
    Scaled Lbb_err;
    Scaled Lab_err;
};

/// Amplitudes for placed detectors a, b.
AmplitudeSet compute_amplitudes(const Detector& a, const Detector& b, const QuadratureSpec& spec);

AmplitudeSet compute_amplitudes(const Detector& a, const Detector& b, const PairGeometry& g,
                                Placement mode, const QuadratureSpec& spec);

/// Only M_c and N_c; the quantum entries stay zero. Usable where the
/// quantum self terms diverge (pointlike Dirac detectors).
AmplitudeSet compute_qc_amplitudes(const Detector& a, const Detector& b, const QuadratureSpec& spec);

TwoQubitState assemble_qc_state(const AmplitudeSet& amps);
TwoQubitState assemble_qft_state(const AmplitudeSet& amps);

/// max_ij |rho_qc - rho_qft|_ij evaluated from the amplitudes in scaled
/// form, so it stays meaningful when every entry underflows a double.
Scaled qc_qft_entrywise_distance(const AmplitudeSet& amps);

/// max_ij |x_ij - y_ij|.
double entrywise_distance(const TwoQubitState& x, const TwoQubitState& y);

/// Phase variable theta_E = 2 * (smeared causal kernel including couplings
/// and strengths) and the receiver vacuum term L_bb for delta-coupled,
/// ball-shaped detectors with t_a < t_b.
struct DeltaCouplingData {
    double theta_e = 0.0;
    double L_bb = 0.0;
    double nu_b = 1.0;
    /// Tr(mu_a(t_a) rho_a,0).
    double theta_a = 0.0;
};

DeltaCouplingData delta_coupling_data(const Detector& a, const Detector& b, Model model,
                                      const QuadratureSpec& spec);

/// Receiver state after the delta-coupled protocol, 2x2 in basis {g, e}.
Eigen::Matrix2cd receiver_state_from(const DeltaCouplingData& d, const Detector& b);

Eigen::Matrix2cd delta_receiver_state(const Detector& a, const Detector& b, const PairGeometry& g,
                                      Placement mode, Model model, const QuadratureSpec& spec);

/// Monopole e^{i Omega t} sigma+ + e^{-i Omega t} sigma- in basis {g, e}.
Eigen::Matrix2cd monopole(double gap, double t);

}  // namespace udw
