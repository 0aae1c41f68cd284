#pragma once

#include "eforce/config.hpp"
#include "eforce/constants.hpp"
#include "eforce/modes.hpp"

namespace eforce {

/// Free-space Larmor damping rate of a charge oscillating at omega:
/// e^2 omega^2 / (6 pi eps0 m c^3).
double gamma_larmor_free(double omega,
                         const PhysConstants& pc = PhysConstants::codata());

/// Cavity-suppressed Larmor rate e^2 pi^2/(6 V Q eps0 m omega_z) with the
/// loaded quality factor Q = omega_k/kappa.
double gamma_larmor_cavity(const ElectronModes& modes, const CavityConfig& cavity,
                           const PhysConstants& pc = PhysConstants::codata());

/// Ohmic damping through the antenna image current: (e/2z0)^2 R_d/m with
/// R_d = rho l / A.
double gamma_antenna(const TrapConfig& trap, const AntennaConfig& antenna,
                     const ElectronModes& modes,
                     const PhysConstants& pc = PhysConstants::codata());

/// DC shifts, Duffing terms and cross-Kerr couplings induced by the trap
/// non-idealities.  All vanish for the ideal trap.
struct KerrCoefficients {
    double d_omega_z;      // rad/s
    double d_omega_plus;   // rad/s
    double d_omega_minus;  // rad/s
    double omega_zz;       // rad/s (Duffing)
    double omega_pp;       // rad/s
    double omega_mm;       // rad/s
    double omega_pz;       // rad/s (cross-Kerr, drives axial dephasing)
    double omega_mz;       // rad/s
    double omega_pm;       // rad/s
};

KerrCoefficients kerr_coefficients(const ElectronModes& modes, const TrapConfig& trap,
                                   const NonIdealityConfig& nonideal,
                                   const PhysConstants& pc = PhysConstants::codata());

/// Symmetrized number-fluctuation spectrum of a radiatively damped mode,
/// 2 n (n+1) gamma / (gamma^2 + (omega - 2*omega_mode)^2), positive
/// frequencies only.
double s_number_cyclotron(double omega, double n_plus, double gamma_plus,
                          double omega_plus);

/// Dephasing-induced axial damping from cyclotron number fluctuations,
/// with gamma_plus the free-space Larmor rate at omega_plus and
/// n = n_th[omega_plus].
double gamma_dephasing(const ElectronModes& modes, const KerrCoefficients& kerr,
                       double temperature,
                       const PhysConstants& pc = PhysConstants::codata());

/// Small-occupancy limit gamma_plus * n * (omega_pz/(2 omega_plus))^2.
double gamma_dephasing_small_n(const ElectronModes& modes,
                               const KerrCoefficients& kerr, double temperature,
                               const PhysConstants& pc = PhysConstants::codata());

/// Diagnostic only: magnetron dephasing into the axial and cyclotron modes.
/// Not part of the damping budget.
struct MagnetronDephasing {
    double via_axial;      // rad/s
    double via_cyclotron;  // rad/s
};
MagnetronDephasing magnetron_dephasing(const ElectronModes& modes,
                                       const KerrCoefficients& kerr,
                                       double gamma_z, double temperature,
                                       const PhysConstants& pc = PhysConstants::codata());

struct DampingBreakdown {
    double gamma_larmor;   // rad/s
    double gamma_antenna;  // rad/s
    double gamma_ba;       // rad/s
    double gamma_dephase;  // rad/s
    double gamma_eff;      // rad/s, sum of the four

    /// Damping not mediated by the readout cavity mode.
    double intrinsic() const { return gamma_larmor + gamma_antenna + gamma_dephase; }
};

DampingBreakdown compose_damping(const TrapConfig& trap, const CavityConfig& cavity,
                                 const AntennaConfig& antenna,
                                 const NonIdealityConfig& nonideal, double g,
                                 double temperature,
                                 const PhysConstants& pc = PhysConstants::codata());

}  // namespace eforce
