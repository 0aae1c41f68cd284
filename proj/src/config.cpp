#include "eforce/config.hpp"

#include <cmath>
#include <string>

#include "eforce/errors.hpp"

namespace eforce {

namespace {
void require(bool ok, const std::string& what) {
    if (!ok) throw ConfigError("invalid config: " + what);
}
bool finite(double v) { return std::isfinite(v); }
}  // namespace

double TrapConfig::resolved_rho0() const {
    return rho0 > 0.0 ? rho0 : z0 * std::sqrt(2.0);
}

double TrapConfig::d() const {
    const double r = resolved_rho0();
    return std::sqrt(0.5 * (z0 * z0 + 0.5 * r * r));
}

void TrapConfig::validate() const {
    require(finite(v0) && v0 > 0.0, "trap.v0_volt must be > 0");
    require(finite(b0) && b0 > 0.0, "trap.b0_tesla must be > 0");
    require(finite(z0) && z0 > 0.0, "trap.z0_m must be > 0");
    require(finite(rho0) && rho0 >= 0.0, "trap.rho0_m must be >= 0");
    require(finite(alpha_geom) && alpha_geom > 0.0 && alpha_geom <= 1.0,
            "trap.alpha_geom must be in (0, 1]");
    require(finite(t_trap) && t_trap >= 0.0, "trap.temperature_k must be >= 0");
    require(finite(d()) && d() > 0.0, "trap characteristic size");
}

void CavityConfig::validate() const {
    require(finite(omega_k) && omega_k > 0.0, "cavity.f_k_hz must be > 0");
    require(finite(q_int) && q_int > 0.0, "cavity.q_int must be > 0");
    require(finite(q_ext) && q_ext > 0.0, "cavity.q_ext must be > 0");
    require(kappa_in() > 0.0 && kappa_add() > 0.0, "cavity linewidths");
    require(lx > 0.0 && ly > 0.0 && lz > 0.0 && finite(volume()),
            "cavity dimensions must be > 0");
    require(finite(omega_in) && omega_in >= 0.0, "cavity.f_drive_hz must be >= 0");
    require(finite(theta_lo) && theta_lo >= 0.0 && theta_lo < two_pi,
            "cavity.theta_lo_rad must be in [0, 2pi)");
    require(finite(t_cav) && t_cav >= 0.0, "cavity.temperature_k must be >= 0");
}

double AntennaConfig::resolved_length(double omega_z, const PhysConstants& pc) const {
    return length > 0.0 ? length : pi * pc.c_light / omega_z;
}

void AntennaConfig::validate() const {
    require(finite(length) && length >= 0.0, "antenna.length_m must be >= 0");
    require(finite(width) && width > 0.0, "antenna.width_m must be > 0");
    require(finite(thickness) && thickness > 0.0, "antenna.thickness_m must be > 0");
    require(area() > 0.0, "antenna cross-section");
    require(finite(resistivity) && resistivity >= 0.0,
            "antenna.resistivity_ohm_m must be >= 0");
}

double ElectrodeMaterial::resolved_eps(const PhysConstants& pc) const {
    return eps_dielectric > 0.0 ? eps_dielectric : 2.0 * pc.eps0;
}

void ElectrodeMaterial::validate() const {
    require(finite(resistivity) && resistivity > 0.0,
            "electrode.resistivity_ohm_m must be > 0");
    require(finite(t_metal) && t_metal > 0.0, "electrode.t_metal_m must be > 0");
    require(finite(t_dielectric) && t_dielectric >= 0.0,
            "electrode.t_dielectric_m must be >= 0");
    require(finite(eps_dielectric) && eps_dielectric >= 0.0,
            "electrode.eps_rel must be > 0");
    require(finite(loss_tangent) && loss_tangent > 0.0 && loss_tangent < 1.0,
            "electrode.loss_tangent must be in (0, 1)");
    require(finite(standoff) && standoff >= 0.0, "electrode.standoff_m must be >= 0");
}

void MagnetMaterial::validate() const {
    require(finite(g_s) && g_s > 0.0, "magnet.g_s must be > 0");
    require(finite(v_uc) && v_uc > 0.0, "magnet.v_uc_m3 must be > 0");
    require(finite(t_c) && t_c > 0.0, "magnet.t_c_k must be > 0");
    require(finite(alpha_lo) && alpha_lo > 0.0, "magnet.alpha_lo_hz must be > 0");
    require(finite(alpha_hi) && alpha_hi >= alpha_lo,
            "magnet.alpha_hi_hz must be >= alpha_lo_hz");
    require(finite(t_mag) && t_mag >= 0.0, "magnet.temperature_k must be >= 0");
}

void TlsMaterial::validate() const {
    require(finite(p0) && p0 > 0.0, "tls.p0_j_m3 must be > 0");
    require(finite(a_rate) && a_rate > 0.0, "tls.a_rate_k3 must be > 0");
    require(finite(dipole) && dipole > 0.0, "tls.dipole_debye must be > 0");
    require(finite(eps_r) && eps_r > 1.0, "tls.eps_r must be > 1");
    require(finite(t_exp) && t_exp > 0.0, "tls.t_exp_s must be > 0");
    require(finite(volume) && volume >= 0.0, "tls.volume_m3 must be >= 0");
}

bool NonIdealityConfig::is_zero() const {
    return phi40 == 0.0 && phi22 == 0.0 && phi04 == 0.0 && b20 == 0.0 && b02 == 0.0;
}

void NonIdealityConfig::validate() const {
    require(finite(phi40) && finite(phi22) && finite(phi04) && finite(b20) && finite(b02),
            "nonideal coefficients must be finite");
}

void SystemConfig::validate() const {
    trap.validate();
    cavity.validate();
    antenna.validate();
    electrode.validate();
    magnet.validate();
    tls.validate();
    nonideal.validate();
}

void SystemConfig::set_temperature(double kelvin) {
    trap.t_trap = kelvin;
    cavity.t_cav = kelvin;
    magnet.t_mag = kelvin;
}

SystemConfig reference_design() {
    SystemConfig c;
    c.trap = TrapConfig{19.3, 0.5, 50e-6, 0.0, 1.0, 4.0};
    c.cavity = CavityConfig{two_pi * 5.5e9, 1e5, 1e3,   0.256, 0.027,
                            0.150,          0.0, pi / 2, 4.0};
    c.antenna = AntennaConfig{0.0, 0.05, 200e-9, 22.1e-9};
    c.electrode = ElectrodeMaterial{22.1e-9, 200e-9, 2e-9, 0.0, 0.01, 0.0};
    c.magnet = MagnetMaterial{7.120, 84.703e-30, 800.0, two_pi * 1.0, two_pi * 1e6, 4.0};
    c.tls = TlsMaterial{4.35e44, 1e8, 0.5 * debye, 3.7, 1e5, 0.0};
    c.nonideal = NonIdealityConfig{};
    c.include_uncertain = false;
    c.retune_antenna = true;
    return c;
}

}  // namespace eforce
