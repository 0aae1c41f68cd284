#pragma once

#include <complex>

#include "eforce/config.hpp"
#include "eforce/constants.hpp"

namespace eforce {

/// Complex susceptibility sample; magnitude/phase via std::abs / std::arg.
using ComplexResponse = std::complex<double>;

/// Co-rotating cavity response (kappa/2 - i(omega - omega_k))^-1.  Units: s.
ComplexResponse chi_cavity(double omega, const CavityConfig& cavity);

/// Counter-rotating response (kappa/2 - i(omega + omega_k))^-1, i.e. the
/// conjugate response [chi_k(-omega)]^*.  This is the unique reading that
/// reproduces the sign of the backaction frequency shift.
ComplexResponse chi_cavity_counter(double omega, const CavityConfig& cavity);

/// Bare mechanical response (omega_z^2 - omega^2 - i*gamma*omega)^-1 / m.
/// Units: s^2/kg.  Throws SingularResponse at the undamped pole.
ComplexResponse chi_mech(double omega, double omega_z, double gamma, double mass);

/// Antenna-mediated interaction strength G = alpha e (l/2z0) sqrt(Wk/2 hbar eps0 V),
/// in Hz/m.  Auto antenna length resolves to pi*c/omega_z.
double coupling_strength(const TrapConfig& trap, const CavityConfig& cavity,
                         const AntennaConfig& antenna,
                         const PhysConstants& pc = PhysConstants::codata());

struct BackactionShift {
    double omega_ba;  // rad/s
    double gamma_ba;  // rad/s, > 0 for all positive inputs
};

/// Dynamical backaction shift and damping evaluated at the given frequency.
BackactionShift dynamical_backaction_at(double omega, double omega_z,
                                        const CavityConfig& cavity, double g,
                                        double mass,
                                        const PhysConstants& pc = PhysConstants::codata());

/// The usual high-Q figures: the shift evaluated at omega = omega_z.
BackactionShift dynamical_backaction(double omega_z, const CavityConfig& cavity,
                                     double g, double mass,
                                     const PhysConstants& pc = PhysConstants::codata());

/// Effective mechanical response including the frequency-dependent dynamical
/// backaction term chi_dyn^-1 = -i hbar G^2 (chi_k - chi_k_counter).
ComplexResponse chi_eff(double omega, double omega_z, double gamma_intrinsic,
                        const CavityConfig& cavity, double g, double mass,
                        const PhysConstants& pc = PhysConstants::codata());

}  // namespace eforce
