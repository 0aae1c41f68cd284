#include "eforce/modes.hpp"

#include <cmath>

#include "eforce/errors.hpp"

namespace eforce {

namespace {
double omega_z_squared(const TrapConfig& trap, const PhysConstants& pc) {
    const double d = trap.d();
    return pc.e_charge * trap.v0 / (pc.m_electron * d * d);
}
}  // namespace

bool trap_stable(const TrapConfig& trap, const PhysConstants& pc) {
    const double wz2 = omega_z_squared(trap, pc);
    const double wc = pc.e_charge * trap.b0 / pc.m_electron;
    return wc * wc > 2.0 * wz2;
}

ElectronModes derive_modes(const TrapConfig& trap, const PhysConstants& pc) {
    trap.validate();
    const double wz2 = omega_z_squared(trap, pc);
    const double wz = std::sqrt(wz2);
    const double wc = pc.e_charge * trap.b0 / pc.m_electron;
    const double disc = wc * wc - 2.0 * wz2;
    if (disc <= 0.0) throw TrapUnstable(wc, wz);

    const double wl = std::sqrt(disc);
    const double wp = 0.5 * (wc + wl);
    // wz^2/(2 wp) rather than (wc - wl)/2: avoids cancellation for wz << wc
    // and keeps both algebraic identities at a few ulp.
    const double wm = wz2 / (2.0 * wp);

    ElectronModes m;
    m.omega_z = wz;
    m.omega_c = wc;
    m.omega_plus = wp;
    m.omega_minus = wm;
    m.omega_l = wl;
    m.z_zp = std::sqrt(pc.hbar / (2.0 * pc.m_electron * wz));
    m.stable = true;
    return m;
}

double thermal_occupation(double omega, double temperature, const PhysConstants& pc) {
    if (!(omega > 0.0)) throw DomainError("thermal_occupation: omega must be > 0");
    if (temperature < 0.0) throw DomainError("thermal_occupation: T must be >= 0");
    if (temperature == 0.0) return 0.0;
    const double x = pc.hbar * omega / (pc.k_b * temperature);
    const double em1 = std::expm1(x);
    return std::isinf(em1) ? 0.0 : 1.0 / em1;
}

}  // namespace eforce
