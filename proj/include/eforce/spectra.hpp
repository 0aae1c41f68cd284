#pragma once

#include <complex>

#include "eforce/config.hpp"
#include "eforce/constants.hpp"
#include "eforce/modes.hpp"
#include "eforce/response.hpp"

// Symmetrized force-noise spectral densities, N^2/Hz on double-sided
// convention, frequencies in rad/s.

namespace eforce {

/// Fluctuation-dissipation force noise 2 hbar m omega gamma (n_th + 1/2).
double s_ff_intrinsic(double omega, double mass, double gamma_eff,
                      double temperature,
                      const PhysConstants& pc = PhysConstants::codata());

/// Stochastic backaction from the input port, both sidebands with thermal
/// weights n_th[|omega -+ omega_in|] + 1/2.
double s_ff_backaction_full(double omega, const CavityConfig& cavity, double g,
                            double temperature,
                            const PhysConstants& pc = PhysConstants::codata());

/// Co-rotating Lorentzian approximation, valid kappa << |omega-omega_k| << omega_k.
double s_ff_backaction_approx(double omega, const CavityConfig& cavity, double g,
                              double temperature,
                              const PhysConstants& pc = PhysConstants::codata());

/// Force-referred imprecision of homodyne readout at quadrature angle theta.
/// Throws QuadratureSingular when the quadrature carries no motional signal.
double s_ff_imprecision_full(double omega, const CavityConfig& cavity, double g,
                             ComplexResponse chi_eff_value, double theta,
                             double temperature,
                             const PhysConstants& pc = PhysConstants::codata());

/// Phase-quadrature approximation ((omega-omega_k)^2 + (kappa/2)^2) *
/// (n_th+1/2) / (G^2 kappa_in |chi_eff|^2).
double s_ff_imprecision_approx(double omega, const CavityConfig& cavity, double g,
                               ComplexResponse chi_eff_value, double temperature,
                               const PhysConstants& pc = PhysConstants::codata());

/// Imprecision-backaction cross spectrum (complex); the budget adds
/// 2 Re of this.
std::complex<double> s_ff_cross_full(double omega, const CavityConfig& cavity,
                                     double g, ComplexResponse chi_eff_value,
                                     double theta, double temperature,
                                     const PhysConstants& pc = PhysConstants::codata());

/// Standard quantum limit hbar/|chi_eff| for this readout.
double sql_bound(ComplexResponse chi_eff_value,
                 const PhysConstants& pc = PhysConstants::codata());

/// Backaction and imprecision added by internal cavity loss (kappa_add),
/// phase quadrature.
struct ReadoutAdditional {
    double ba_add;   // N^2/Hz
    double imp_add;  // N^2/Hz
};
ReadoutAdditional s_ff_readout_additional(double omega, const CavityConfig& cavity,
                                          double g, ComplexResponse chi_eff_value,
                                          double temperature,
                                          const PhysConstants& pc = PhysConstants::codata());

/// sqrt(2 rho / (mu0 omega)).  Throws DomainError for omega <= 0.
double skin_depth(double omega, double resistivity,
                  const PhysConstants& pc = PhysConstants::codata());

/// Electrode Johnson force noise; branches on metal thickness vs skin depth,
/// then on the particle standoff vs the governing length.  Includes the
/// factor 3 for two endcaps plus the ring electrode.
double s_ff_johnson(double omega, const ElectrodeMaterial& electrode,
                    double temperature,
                    const PhysConstants& pc = PhysConstants::codata());

/// Thin lossy surface layer on the electrodes (1/f character).
double s_ff_dielectric(double omega, const ElectrodeMaterial& electrode,
                       double temperature,
                       const PhysConstants& pc = PhysConstants::codata());

/// Thermal spin-flip magnetisation variance around the mean-field state.
double magnetization_variance(const MagnetMaterial& magnet, double mean_magnetization,
                              const PhysConstants& pc = PhysConstants::codata());

/// Radial field noise Lorentzian (T^2/Hz) for relaxation constant
/// alpha_decay, zero mean magnetisation.
double s_bb_barkhausen(double omega, const MagnetMaterial& magnet,
                       double alpha_decay,
                       const PhysConstants& pc = PhysConstants::codata());

/// Thermal mean radial coordinate and angular velocity of the trajectory.
struct MeanOrbit {
    double rho_bar;    // m
    double omega_bar;  // rad/s, signed
};
MeanOrbit mean_orbit(const ElectronModes& modes, double temperature,
                     const PhysConstants& pc = PhysConstants::codata());

/// Axial force noise |e Omega_bar rho_bar|^2 S_BB.
double s_ff_barkhausen(double omega, const MagnetMaterial& magnet,
                       double alpha_decay, const ElectronModes& modes,
                       double temperature,
                       const PhysConstants& pc = PhysConstants::codata());

/// Resonant (tanh) plus relaxation (quadrature) loss tangent of the TLS
/// bath.  Throws DomainError if t_exp <= tau_min, IntegrationFailure if the
/// quadrature cannot reach 1e-6 relative accuracy.
double tls_loss_tangent(double omega, const TlsMaterial& tls, double temperature,
                        const PhysConstants& pc = PhysConstants::codata());

/// Intracavity TLS field noise referred to a force through the coupling;
/// prefactor reduces exactly to (alpha e l / 2 z0)^2.
double s_ff_tls(double omega, const TlsMaterial& tls, const CavityConfig& cavity,
                double g, double temperature,
                const PhysConstants& pc = PhysConstants::codata());

namespace detail {
/// Adaptive Simpson on [a, b]; relative tolerance on the running total.
double adaptive_simpson(double (*f)(double, const void*), const void* ctx, double a,
                        double b, double rel_tol, int max_depth);
/// Relaxation-absorption integral in the smooth substituted variable,
/// exposed for the dense-reference cross-check in tests.
double tls_relaxation_integral(double omega, double tau_min, double t0);
}  // namespace detail

}  // namespace eforce
