#pragma once

#include "eforce/constants.hpp"

namespace eforce {

/// Penning trap geometry and static fields. Frequencies derived from these
/// live in ElectronModes (see modes.hpp).
struct TrapConfig {
    double v0 = 19.3;           // V, base trapping potential
    double b0 = 0.5;            // T, axial field
    double z0 = 50e-6;          // m, axial half-gap
    double rho0 = 0.0;          // m, radial half-size; 0 -> z0*sqrt(2) (d == z0)
    double alpha_geom = 1.0;    // image-charge factor, (0, 1]
    double t_trap = 4.0;        // K

    double resolved_rho0() const;
    /// Characteristic size d = sqrt((z0^2 + rho0^2/2)/2).
    double d() const;
    void validate() const;
};

struct CavityConfig {
    double omega_k = two_pi * 5.5e9;   // rad/s, mode frequency
    double q_int = 1e5;
    double q_ext = 1e3;
    double lx = 0.256, ly = 0.027, lz = 0.150;  // m, physical box
    double omega_in = 0.0;             // rad/s, drive; 0 -> on resonance
    double theta_lo = pi / 2;          // rad, homodyne quadrature angle
    double t_cav = 4.0;                // K

    double kappa_in() const { return omega_k / (2.0 * q_ext); }
    double kappa_add() const { return omega_k / (2.0 * q_int); }
    double kappa() const { return kappa_in() + kappa_add(); }
    /// Loaded quality factor omega_k / kappa.
    double q_loaded() const { return omega_k / kappa(); }
    double volume() const { return lx * ly * lz; }
    double resolved_omega_in() const { return omega_in > 0.0 ? omega_in : omega_k; }
    void validate() const;
};

struct AntennaConfig {
    double length = 0.0;          // m; 0 -> auto, pi*c/omega_z
    double width = 0.05;          // m
    double thickness = 200e-9;    // m
    double resistivity = 22.1e-9; // Ohm*m

    double area() const { return width * thickness; }
    double resolved_length(double omega_z, const PhysConstants& pc) const;
    void validate() const;
};

/// Trap electrode stack seen by the electron (metal film on a lossy layer).
struct ElectrodeMaterial {
    double resistivity = 22.1e-9;  // Ohm*m
    double t_metal = 200e-9;       // m
    double t_dielectric = 2e-9;    // m
    double eps_dielectric = 0.0;   // F/m, absolute permittivity; 0 -> 2*eps0
    double loss_tangent = 0.01;    // dimensionless, in (0, 1)
    double standoff = 0.0;         // m, particle-electrode distance; 0 -> z0

    double resolved_eps(const PhysConstants& pc) const;
    double resolved_standoff(double z0) const { return standoff > 0.0 ? standoff : z0; }
    void validate() const;
};

/// Permanent-magnet material driving the Barkhausen estimate.
struct MagnetMaterial {
    double g_s = 7.120;            // spin g-factor
    double v_uc = 84.703e-30;      // m^3, unit-cell volume
    double t_c = 800.0;            // K, critical temperature
    double alpha_lo = two_pi * 1.0;    // rad/s, relaxation-constant range
    double alpha_hi = two_pi * 1e6;    // rad/s
    double t_mag = 4.0;            // K

    void validate() const;
};

struct TlsMaterial {
    double p0 = 4.35e44;       // states / (J*m^3); SI, converted once from
                               // the tabulated 4.35e31 erg^-1 cm^-3
    double a_rate = 1e8;       // 1/(s*K^3)
    double dipole = 0.5 * debye;  // C*m
    double eps_r = 3.7;
    double t_exp = 1e5;        // s, experiment timescale t0
    double volume = 0.0;       // m^3; 0 -> l*2d*w from the resolved design

    void validate() const;
};

/// Electrostatic/magnetic multipole corrections; the zero vector is the
/// ideal trap.
struct NonIdealityConfig {
    double phi40 = 0.0;  // V
    double phi22 = 0.0;  // V
    double phi04 = 0.0;  // V
    double b20 = 0.0;    // T
    double b02 = 0.0;    // T

    bool is_zero() const;
    void validate() const;
};

struct SystemConfig {
    TrapConfig trap;
    CavityConfig cavity;
    AntennaConfig antenna;
    ElectrodeMaterial electrode;
    MagnetMaterial magnet;
    TlsMaterial tls;
    NonIdealityConfig nonideal;
    bool include_uncertain = false;  // fold Barkhausen/TLS into the total
    bool retune_antenna = true;      // re-derive auto length per sweep voltage

    void validate() const;
    /// Set trap, cavity, and magnet temperatures jointly.
    void set_temperature(double kelvin);
};

/// The design the repository ships as configs/paper.cfg.
SystemConfig reference_design();

}  // namespace eforce
