#include "eforce/damping.hpp"

#include <cmath>

#include "eforce/errors.hpp"
#include "eforce/response.hpp"

namespace eforce {

double gamma_larmor_free(double omega, const PhysConstants& pc) {
    if (!(omega > 0.0)) throw DomainError("gamma_larmor_free: omega must be > 0");
    const double c3 = pc.c_light * pc.c_light * pc.c_light;
    return pc.e_charge * pc.e_charge * omega * omega /
           (6.0 * pi * pc.eps0 * pc.m_electron * c3);
}

double gamma_larmor_cavity(const ElectronModes& modes, const CavityConfig& cavity,
                           const PhysConstants& pc) {
    const double q = cavity.q_loaded();
    return pc.e_charge * pc.e_charge * pi * pi /
           (6.0 * cavity.volume() * q * pc.eps0 * pc.m_electron * modes.omega_z);
}

double gamma_antenna(const TrapConfig& trap, const AntennaConfig& antenna,
                     const ElectronModes& modes, const PhysConstants& pc) {
    const double l = antenna.resolved_length(modes.omega_z, pc);
    const double r_d = antenna.resistivity * l / antenna.area();
    const double q_over_gap = pc.e_charge / (2.0 * trap.z0);
    return q_over_gap * q_over_gap * r_d / pc.m_electron;
}

KerrCoefficients kerr_coefficients(const ElectronModes& modes, const TrapConfig& trap,
                                   const NonIdealityConfig& nonideal,
                                   const PhysConstants& pc) {
    const double d = trap.d();
    const double d2 = d * d;
    const double m = pc.m_electron;
    const double wl2 = modes.omega_l * modes.omega_l;
    if (!(wl2 > 0.0)) throw TrapUnstable(modes.omega_c, modes.omega_z);

    const double ca = pc.hbar * pc.e_charge / (d2 * d2 * m * m * wl2);
    const double cb = pc.hbar * pc.e_charge * pc.e_charge * trap.b0 / (d2 * m * m * m * wl2);
    const double cc = pc.hbar * pc.e_charge / (d2 * m * m * modes.omega_l);

    const double phi40 = nonideal.phi40, phi22 = nonideal.phi22, phi04 = nonideal.phi04;
    const double b20 = nonideal.b20, b02 = nonideal.b02;

    KerrCoefficients k;
    k.d_omega_z = ca * (3.0 * phi04 + 2.0 * phi22) + cb * b02 / 2.0;
    k.d_omega_plus = ca * (16.0 * phi40 + phi22) + 2.0 * cb * b20 +
                     (cb - cc) * (2.0 * b20 + b02 / 4.0);
    k.d_omega_minus = ca * (16.0 * phi40 + phi22) + 2.0 * cb * b20 +
                      (cb + cc) * (2.0 * b20 + b02 / 4.0);
    k.omega_zz = 1.5 * ca * phi04;
    k.omega_pp = 4.0 * ca * phi40 + (cb - cc) * b20;
    k.omega_mm = 4.0 * ca * phi40 + (cb + cc) * b20;
    k.omega_pz = 2.0 * ca * phi22 + 0.5 * (cb - cc) * b02;
    k.omega_mz = 2.0 * ca * phi22 + 0.5 * (cb + cc) * b02;
    k.omega_pm = 16.0 * ca * phi40 + 4.0 * cb * b20;
    return k;
}

double s_number_cyclotron(double omega, double n_plus, double gamma_plus,
                          double omega_plus) {
    if (!(omega > 0.0)) throw DomainError("s_number_cyclotron: omega must be > 0");
    if (!(gamma_plus > 0.0)) throw DomainError("s_number_cyclotron: gamma_plus must be > 0");
    const double det = omega - 2.0 * omega_plus;
    return 2.0 * n_plus * (n_plus + 1.0) * gamma_plus /
           (gamma_plus * gamma_plus + det * det);
}

double gamma_dephasing(const ElectronModes& modes, const KerrCoefficients& kerr,
                       double temperature, const PhysConstants& pc) {
    if (temperature == 0.0) return 0.0;
    const double gp = gamma_larmor_free(modes.omega_plus, pc);
    const double n = thermal_occupation(modes.omega_plus, temperature, pc);
    // Omega_pz^2/2 * S_nn[omega_z], with S_nn the cyclotron Lorentzian.
    return 0.5 * kerr.omega_pz * kerr.omega_pz *
           s_number_cyclotron(modes.omega_z, n, gp, modes.omega_plus);
}

double gamma_dephasing_small_n(const ElectronModes& modes, const KerrCoefficients& kerr,
                               double temperature, const PhysConstants& pc) {
    if (temperature == 0.0) return 0.0;
    const double gp = gamma_larmor_free(modes.omega_plus, pc);
    const double n = thermal_occupation(modes.omega_plus, temperature, pc);
    const double r = kerr.omega_pz / (2.0 * modes.omega_plus);
    return gp * n * r * r;
}

MagnetronDephasing magnetron_dephasing(const ElectronModes& modes,
                                       const KerrCoefficients& kerr, double gamma_z,
                                       double temperature, const PhysConstants& pc) {
    MagnetronDephasing out{0.0, 0.0};
    if (temperature == 0.0) return out;
    if (gamma_z > 0.0) {
        const double nz = thermal_occupation(modes.omega_z, temperature, pc);
        out.via_axial = 0.5 * kerr.omega_mz * kerr.omega_mz *
                        s_number_cyclotron(modes.omega_minus, nz, gamma_z, modes.omega_z);
    }
    const double gp = gamma_larmor_free(modes.omega_plus, pc);
    const double np = thermal_occupation(modes.omega_plus, temperature, pc);
    out.via_cyclotron = 0.5 * kerr.omega_pm * kerr.omega_pm *
                        s_number_cyclotron(modes.omega_minus, np, gp, modes.omega_plus);
    return out;
}

DampingBreakdown compose_damping(const TrapConfig& trap, const CavityConfig& cavity,
                                 const AntennaConfig& antenna,
                                 const NonIdealityConfig& nonideal, double g,
                                 double temperature, const PhysConstants& pc) {
    const ElectronModes modes = derive_modes(trap, pc);
    DampingBreakdown b;
    b.gamma_larmor = gamma_larmor_cavity(modes, cavity, pc);
    b.gamma_antenna = gamma_antenna(trap, antenna, modes, pc);
    b.gamma_ba = dynamical_backaction(modes.omega_z, cavity, g, pc.m_electron, pc).gamma_ba;
    b.gamma_dephase =
        nonideal.is_zero()
            ? 0.0
            : gamma_dephasing(modes, kerr_coefficients(modes, trap, nonideal, pc),
                              temperature, pc);
    b.gamma_eff = b.gamma_larmor + b.gamma_antenna + b.gamma_ba + b.gamma_dephase;
    return b;
}

}  // namespace eforce
