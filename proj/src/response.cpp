#include "eforce/response.hpp"

#include <cmath>

#include "eforce/errors.hpp"

namespace eforce {

ComplexResponse chi_cavity(double omega, const CavityConfig& cavity) {
    return 1.0 / ComplexResponse(0.5 * cavity.kappa(), -(omega - cavity.omega_k));
}

ComplexResponse chi_cavity_counter(double omega, const CavityConfig& cavity) {
    return 1.0 / ComplexResponse(0.5 * cavity.kappa(), -(omega + cavity.omega_k));
}

ComplexResponse chi_mech(double omega, double omega_z, double gamma, double mass) {
    if (!(mass > 0.0)) throw DomainError("chi_mech: mass must be > 0");
    if (gamma < 0.0) throw DomainError("chi_mech: gamma must be >= 0");
    const ComplexResponse den(mass * (omega_z - omega) * (omega_z + omega),
                              -mass * gamma * omega);
    if (den == ComplexResponse(0.0, 0.0))
        throw SingularResponse("chi_mech: undamped pole at omega = omega_z");
    return 1.0 / den;
}

double coupling_strength(const TrapConfig& trap, const CavityConfig& cavity,
                         const AntennaConfig& antenna, const PhysConstants& pc) {
    trap.validate();
    cavity.validate();
    antenna.validate();
    const double d = trap.d();
    const double omega_z = std::sqrt(pc.e_charge * trap.v0 / (pc.m_electron * d * d));
    const double l = antenna.resolved_length(omega_z, pc);
    const double zp_field =
        std::sqrt(cavity.omega_k / (2.0 * pc.hbar * pc.eps0 * cavity.volume()));
    return trap.alpha_geom * pc.e_charge * (l / (2.0 * trap.z0)) * zp_field;
}

BackactionShift dynamical_backaction_at(double omega, double omega_z,
                                        const CavityConfig& cavity, double g,
                                        double mass, const PhysConstants& pc) {
    const double h = 0.5 * cavity.kappa();
    const double dm = omega - cavity.omega_k;
    const double dp = omega + cavity.omega_k;
    const double den_m = dm * dm + h * h;
    const double den_p = dp * dp + h * h;
    const double scale = pc.hbar * g * g / (2.0 * mass * omega_z);
    BackactionShift s;
    s.omega_ba = scale * (dm / den_m - dp / den_p);
    s.gamma_ba = scale * cavity.kappa() * (1.0 / den_m - 1.0 / den_p);
    return s;
}

BackactionShift dynamical_backaction(double omega_z, const CavityConfig& cavity,
                                     double g, double mass, const PhysConstants& pc) {
    return dynamical_backaction_at(omega_z, omega_z, cavity, g, mass, pc);
}

ComplexResponse chi_eff(double omega, double omega_z, double gamma_intrinsic,
                        const CavityConfig& cavity, double g, double mass,
                        const PhysConstants& pc) {
    const ComplexResponse inv_mech(mass * (omega_z - omega) * (omega_z + omega),
                                   -mass * gamma_intrinsic * omega);
    const ComplexResponse i(0.0, 1.0);
    const ComplexResponse inv_dyn =
        -i * pc.hbar * g * g *
        (chi_cavity(omega, cavity) - chi_cavity_counter(omega, cavity));
    const ComplexResponse den = inv_mech + inv_dyn;
    if (den == ComplexResponse(0.0, 0.0))
        throw SingularResponse("chi_eff: exact pole");
    return 1.0 / den;
}

}  // namespace eforce
