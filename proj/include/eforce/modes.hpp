#pragma once

#include "eforce/config.hpp"
#include "eforce/constants.hpp"

namespace eforce {

/// Eigenfrequencies of the ideal trap plus the axial zero-point scale.
/// omega_minus is computed as omega_z^2/(2*omega_plus) so that both algebraic
/// identities (sum = omega_c, product = omega_z^2/2) hold to a few ulp.
struct ElectronModes {
    double omega_z;      // rad/s, axial
    double omega_c;      // rad/s, bare cyclotron (q/m)B0
    double omega_plus;   // rad/s, modified cyclotron
    double omega_minus;  // rad/s, magnetron
    double omega_l;      // rad/s, sqrt(omega_c^2 - 2*omega_z^2)
    double z_zp;         // m, sqrt(hbar/(2 m omega_z))
    bool stable;         // always true on return; kept for serialization
};

bool trap_stable(const TrapConfig& trap,
                 const PhysConstants& pc = PhysConstants::codata());

/// Throws TrapUnstable when omega_c^2 <= 2*omega_z^2.
ElectronModes derive_modes(const TrapConfig& trap,
                           const PhysConstants& pc = PhysConstants::codata());

/// Bose occupation (exp(hbar*omega/kB T) - 1)^-1; 0 at T = 0.
/// Throws DomainError for omega <= 0.
double thermal_occupation(double omega, double temperature,
                          const PhysConstants& pc = PhysConstants::codata());

}  // namespace eforce
