#include "eforce/spectra.hpp"

#include <cmath>
#include <limits>

#include "eforce/errors.hpp"

namespace eforce {

namespace {

// n_th[|x|] + 1/2; the thermal weight diverges at zero detuning for T > 0.
double thermal_weight(double abs_omega, double temperature, const PhysConstants& pc) {
    if (abs_omega == 0.0)
        return temperature == 0.0 ? 0.5 : std::numeric_limits<double>::infinity();
    return thermal_occupation(abs_omega, temperature, pc) + 0.5;
}

double norm2(ComplexResponse z) { return std::norm(z); }

ComplexResponse homodyne_denominator(ComplexResponse chi, ComplexResponse chi_bar,
                                     double theta) {
    const ComplexResponse em(std::cos(theta), -std::sin(theta));
    const ComplexResponse ep(std::cos(theta), std::sin(theta));
    return chi * em - chi_bar * ep;
}

void check_quadrature(ComplexResponse den, ComplexResponse chi, ComplexResponse chi_bar) {
    const double scale = std::abs(chi) + std::abs(chi_bar);
    if (std::norm(den) <= 1e-24 * scale * scale)
        throw QuadratureSingular(
            "homodyne quadrature carries no motional information at this frequency");
}

}  // namespace

double s_ff_intrinsic(double omega, double mass, double gamma_eff, double temperature,
                      const PhysConstants& pc) {
    if (gamma_eff < 0.0) throw DomainError("s_ff_intrinsic: gamma must be >= 0");
    const double w = thermal_occupation(omega, temperature, pc) + 0.5;
    return 2.0 * pc.hbar * mass * omega * gamma_eff * w;
}

double s_ff_backaction_full(double omega, const CavityConfig& cavity, double g,
                            double temperature, const PhysConstants& pc) {
    const double win = cavity.resolved_omega_in();
    const double wm = thermal_weight(std::fabs(omega - win), temperature, pc);
    const double wp = thermal_weight(std::fabs(omega + win), temperature, pc);
    const double pre = pc.hbar * pc.hbar * g * g * cavity.kappa_in();
    return pre * (norm2(chi_cavity(omega, cavity)) * wm +
                  norm2(chi_cavity_counter(omega, cavity)) * wp);
}

double s_ff_backaction_approx(double omega, const CavityConfig& cavity, double g,
                              double temperature, const PhysConstants& pc) {
    const double win = cavity.resolved_omega_in();
    const double wm = thermal_weight(std::fabs(omega - win), temperature, pc);
    const double pre = pc.hbar * pc.hbar * g * g * cavity.kappa_in();
    return pre * norm2(chi_cavity(omega, cavity)) * wm;
}

double s_ff_imprecision_full(double omega, const CavityConfig& cavity, double g,
                             ComplexResponse chi_eff_value, double theta,
                             double temperature, const PhysConstants& pc) {
    const double win = cavity.resolved_omega_in();
    const double kin = cavity.kappa_in();
    const ComplexResponse chi = chi_cavity(omega, cavity);
    const ComplexResponse chi_bar = chi_cavity_counter(omega, cavity);
    const ComplexResponse den = homodyne_denominator(chi, chi_bar, theta);
    check_quadrature(den, chi, chi_bar);

    const double wm = thermal_weight(std::fabs(omega - win), temperature, pc);
    const double wp = thermal_weight(std::fabs(omega + win), temperature, pc);
    const double num = norm2(1.0 - kin * chi) * wm + norm2(1.0 - kin * chi_bar) * wp;
    return num / (g * g * kin * norm2(chi_eff_value) * norm2(den));
}

double s_ff_imprecision_approx(double omega, const CavityConfig& cavity, double g,
                               ComplexResponse chi_eff_value, double temperature,
                               const PhysConstants& pc) {
    const double win = cavity.resolved_omega_in();
    const double h = 0.5 * cavity.kappa();
    const double det = omega - cavity.omega_k;
    const double wm = thermal_weight(std::fabs(omega - win), temperature, pc);
    return (det * det + h * h) * wm /
           (g * g * cavity.kappa_in() * norm2(chi_eff_value));
}

std::complex<double> s_ff_cross_full(double omega, const CavityConfig& cavity, double g,
                                     ComplexResponse chi_eff_value, double theta,
                                     double temperature, const PhysConstants& pc) {
    // The coupling cancels between backaction (prop. to G) and imprecision
    // (prop. to 1/G); with no coupling there is no backaction to correlate.
    if (g == 0.0) return {0.0, 0.0};
    const double win = cavity.resolved_omega_in();
    const double kin = cavity.kappa_in();
    const ComplexResponse chi = chi_cavity(omega, cavity);
    const ComplexResponse chi_bar = chi_cavity_counter(omega, cavity);
    const ComplexResponse den = homodyne_denominator(chi, chi_bar, theta);
    check_quadrature(den, chi, chi_bar);

    const double wm = thermal_weight(std::fabs(omega - win), temperature, pc);
    const double wp = thermal_weight(std::fabs(omega + win), temperature, pc);
    const ComplexResponse em(std::cos(theta), -std::sin(theta));
    const ComplexResponse ep(std::cos(theta), std::sin(theta));
    const ComplexResponse num = (1.0 - kin * chi) * std::conj(chi) * em * wm +
                                (1.0 - kin * chi_bar) * std::conj(chi_bar) * ep * wp;
    const ComplexResponse i(0.0, 1.0);
    return i * pc.hbar / chi_eff_value * num / den;
}

double sql_bound(ComplexResponse chi_eff_value, const PhysConstants& pc) {
    const double mag = std::abs(chi_eff_value);
    if (!(mag > 0.0)) throw SingularResponse("sql_bound: vanishing response");
    return pc.hbar / mag;
}

ReadoutAdditional s_ff_readout_additional(double omega, const CavityConfig& cavity,
                                          double g, ComplexResponse chi_eff_value,
                                          double temperature, const PhysConstants& pc) {
    const double kadd = cavity.kappa_add();
    const double w0 = thermal_weight(std::fabs(omega), temperature, pc);
    const ComplexResponse chi = chi_cavity(omega, cavity);
    const ComplexResponse chi_bar = chi_cavity_counter(omega, cavity);
    const double both = norm2(chi) + norm2(chi_bar);

    ReadoutAdditional out;
    out.ba_add = pc.hbar * pc.hbar * g * g * kadd * w0 * both;
    // phase quadrature: |chi e^{-i pi/2} - chi_bar e^{i pi/2}|^2 = |chi + chi_bar|^2
    out.imp_add = kadd * w0 / (g * g * norm2(chi_eff_value)) * both / norm2(chi + chi_bar);
    return out;
}

double skin_depth(double omega, double resistivity, const PhysConstants& pc) {
    if (!(omega > 0.0)) throw DomainError("skin_depth: omega must be > 0");
    return std::sqrt(2.0 * resistivity / (pc.mu0 * omega));
}

double s_ff_johnson(double omega, const ElectrodeMaterial& electrode, double temperature,
                    const PhysConstants& pc) {
    const double z = electrode.standoff;
    if (!(z > 0.0)) throw DomainError("s_ff_johnson: standoff must be resolved (> 0)");
    const double delta = skin_depth(omega, electrode.resistivity, pc);
    // Governing length: skin depth for thick films, metal thickness for thin.
    const double len = std::min(electrode.t_metal, delta);
    const double pre = 3.0 * pc.e_charge * pc.e_charge * pc.k_b * temperature *
                       electrode.resistivity / (2.0 * pi);
    return z > len ? pre / (z * z * len) : pre / (z * z * z);
}

double s_ff_dielectric(double omega, const ElectrodeMaterial& electrode,
                       double temperature, const PhysConstants& pc) {
    if (!(omega > 0.0)) throw DomainError("s_ff_dielectric: omega must be > 0");
    const double z = electrode.standoff;
    if (!(z > 0.0)) throw DomainError("s_ff_dielectric: standoff must be resolved (> 0)");
    const double eps = electrode.resolved_eps(pc);
    const double t = electrode.loss_tangent;
    const double z4 = z * z * z * z;
    return 3.0 * pc.e_charge * pc.e_charge * (3.0 / (4.0 * pi)) *
           (t / (eps * (1.0 + t * t))) * pc.k_b * temperature *
           electrode.t_dielectric / (omega * z4);
}

double magnetization_variance(const MagnetMaterial& magnet, double mean_magnetization,
                              const PhysConstants& pc) {
    const double t = magnet.t_mag;
    if (t < 0.0) throw DomainError("magnetization_variance: T must be >= 0");
    if (t == 0.0) return 0.0;  // frozen-spin limit
    const double scale = magnet.g_s * pc.mu_bohr / (2.0 * magnet.v_uc);
    const double arg =
        2.0 * magnet.v_uc * mean_magnetization * magnet.t_c / (magnet.g_s * pc.mu_bohr * t);
    const double ch = std::cosh(arg);
    const double denom = magnet.t_c / t + ch * ch;  // overflow -> variance 0
    return scale * scale / denom;
}

double s_bb_barkhausen(double omega, const MagnetMaterial& magnet, double alpha_decay,
                       const PhysConstants& pc) {
    if (!(alpha_decay > 0.0)) throw DomainError("s_bb_barkhausen: alpha must be > 0");
    const double scale = magnet.g_s * pc.mu0 * pc.mu_bohr / (2.0 * magnet.v_uc);
    const double lorentz = 2.0 * alpha_decay / (omega * omega + alpha_decay * alpha_decay);
    const double thermal = magnet.t_mag / (magnet.t_mag + magnet.t_c);
    return scale * scale * lorentz * thermal;
}

MeanOrbit mean_orbit(const ElectronModes& modes, double temperature,
                     const PhysConstants& pc) {
    if (!(modes.omega_l > 0.0)) throw TrapUnstable(modes.omega_c, modes.omega_z);
    const double np =
        temperature > 0.0 ? thermal_occupation(modes.omega_plus, temperature, pc) : 0.0;
    const double nm =
        temperature > 0.0 ? thermal_occupation(modes.omega_minus, temperature, pc) : 0.0;
    MeanOrbit orbit;
    orbit.rho_bar =
        std::sqrt(2.0 * pc.hbar / (pc.m_electron * modes.omega_l)) * (1.0 + np + nm);
    orbit.omega_bar =
        (pc.hbar / pc.m_electron) * (np - nm) / (orbit.rho_bar * orbit.rho_bar);
    return orbit;
}

double s_ff_barkhausen(double omega, const MagnetMaterial& magnet, double alpha_decay,
                       const ElectronModes& modes, double temperature,
                       const PhysConstants& pc) {
    const MeanOrbit orbit = mean_orbit(modes, temperature, pc);
    const double transduction = pc.e_charge * orbit.omega_bar * orbit.rho_bar;
    return transduction * transduction * s_bb_barkhausen(omega, magnet, alpha_decay, pc);
}

namespace detail {

namespace {
struct SimpsonState {
    double (*f)(double, const void*);
    const void* ctx;
    double eps;
    bool failed = false;
};

double simpson_recurse(SimpsonState& st, double a, double fa, double b, double fb,
                       double m, double fm, double whole, double eps, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = st.f(lm, st.ctx);
    const double frm = st.f(rm, st.ctx);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * eps || (b - a) < 1e-300)
        return left + right + delta / 15.0;
    if (depth <= 0) {
        st.failed = true;
        return left + right;
    }
    return simpson_recurse(st, a, fa, m, fm, lm, flm, left, 0.5 * eps, depth - 1) +
           simpson_recurse(st, m, fm, b, fb, rm, frm, right, 0.5 * eps, depth - 1);
}
}  // namespace

double adaptive_simpson(double (*f)(double, const void*), const void* ctx, double a,
                        double b, double rel_tol, int max_depth) {
    if (a == b) return 0.0;
    const double fa = f(a, ctx);
    const double fb = f(b, ctx);
    const double m = 0.5 * (a + b);
    const double fm = f(m, ctx);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double scale = std::fabs(whole) > 0.0 ? std::fabs(whole)
                                                : (b - a) * std::fabs(fm) + 1e-300;
    SimpsonState st{f, ctx, 0.0, false};
    const double eps = rel_tol * scale;
    const double result = simpson_recurse(st, a, fa, b, fb, m, fm, whole, eps, max_depth);
    if (st.failed || !std::isfinite(result))
        throw IntegrationFailure("adaptive quadrature did not converge");
    return result;
}

namespace {
struct RelaxCtx {
    double a;  // omega * tau_min
};
// Near tau_min, substitute u = sqrt(1 - tau_min/tau); the square-root edge
// becomes the smooth integrand 2 a u^2 / ((1-u^2)^2 + a^2).
double relax_near(double u, const void* ctx) {
    const double a = static_cast<const RelaxCtx*>(ctx)->a;
    const double one_m_u2 = (1.0 - u) * (1.0 + u);
    return 2.0 * a * u * u / (one_m_u2 * one_m_u2 + a * a);
}
// Away from tau_min, substitute v = 1/(omega tau) and integrate in log v:
// integrand sqrt(1 - a v) * v / (1 + v^2), bounded and smooth.
double relax_far(double logv, const void* ctx) {
    const double a = static_cast<const RelaxCtx*>(ctx)->a;
    const double v = std::exp(logv);
    return std::sqrt(std::max(0.0, 1.0 - a * v)) * v / (1.0 + v * v);
}
}  // namespace

double tls_relaxation_integral(double omega, double tau_min, double t0) {
    const RelaxCtx ctx{omega * tau_min};
    // split at tau1 = 100 tau_min: keeps (1-u^2) >= 0.01 in the near piece
    const double tau1 = std::min(t0, 100.0 * tau_min);
    const double u1 = std::sqrt(1.0 - tau_min / tau1);
    double total = adaptive_simpson(relax_near, &ctx, 0.0, u1, 1e-8, 48);
    if (t0 > tau1) {
        const double v_lo = 1.0 / (omega * t0);
        const double v_hi = 1.0 / (omega * tau1);
        total += adaptive_simpson(relax_far, &ctx, std::log(v_lo), std::log(v_hi),
                                  1e-8, 48);
    }
    return total;
}

}  // namespace detail

double tls_loss_tangent(double omega, const TlsMaterial& tls, double temperature,
                        const PhysConstants& pc) {
    if (!(omega > 0.0)) throw DomainError("tls_loss_tangent: omega must be > 0");
    if (!(temperature > 0.0)) throw DomainError("tls_loss_tangent: T must be > 0");
    const double tau_min = 1.0 / (tls.a_rate * temperature * temperature * temperature);
    if (tls.t_exp <= tau_min)
        throw DomainError("tls_loss_tangent: t_exp must exceed tau_min");

    const double pre = tls.p0 * tls.dipole * tls.dipole / (pc.eps0 * tls.eps_r);
    const double resonant =
        pre * pi / 3.0 * std::tanh(pc.hbar * omega / (2.0 * pc.k_b * temperature));
    const double relaxation = pre * detail::tls_relaxation_integral(omega, tau_min, tls.t_exp);
    return resonant + relaxation;
}

double s_ff_tls(double omega, const TlsMaterial& tls, const CavityConfig& cavity,
                double g, double temperature, const PhysConstants& pc) {
    if (temperature == 0.0) return 0.0;
    const double beta = tls.volume;
    if (!(beta > 0.0)) throw DomainError("s_ff_tls: TLS volume must be resolved (> 0)");
    const double tan_d = tls_loss_tangent(omega, tls, temperature, pc);
    const double inv_eps = 1.0 - 1.0 / tls.eps_r;
    const double s_ee = (2.0 * pc.k_b * temperature / omega) /
                        (pc.eps0 * tls.eps_r * beta) * tan_d /
                        (inv_eps * inv_eps + tan_d * tan_d);
    // (hbar G / E_zp)^2 with E_zp = sqrt(hbar omega_k / 2 eps0 V): the cavity
    // volume cancels and the prefactor is the effective dipole charge squared.
    const double e_zp =
        std::sqrt(pc.hbar * cavity.omega_k / (2.0 * pc.eps0 * cavity.volume()));
    const double dipole_charge = pc.hbar * g / e_zp;
    return dipole_charge * dipole_charge * s_ee;
}

}  // namespace eforce
