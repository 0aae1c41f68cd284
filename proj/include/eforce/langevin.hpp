#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eforce/constants.hpp"

namespace eforce {

enum class Frame { lab, rotating };

/// Dimensionless (hbar = m = kB = 1) parameter set for the time-domain
/// oracle.  Frequencies in units of an arbitrary reference; dt in its
/// inverse.
struct SimConfig {
    double omega_z = 1.0;
    double omega_k = 0.8;
    double kappa_in = 0.05;
    double kappa_add = 0.0;
    // Coupling kept weak enough that the first-order backaction formulas
    // describe the observed line to well below the statistical errors.
    double gamma = 0.002;
    double g = 0.025;
    double temperature = 0.0;   // bath temperature, same units as omega
    double omega_in = 0.0;      // drive; 0 -> on cavity resonance
    double theta = pi / 2;      // homodyne angle
    double dt = 0.08;
    std::int64_t n_steps = 1 << 19;    // recorded steps per trajectory
    int n_trajectories = 64;
    std::uint64_t seed = 1;
    Frame frame = Frame::lab;
    int segment = 1 << 18;      // Welch segment (power of two)
    int burn_in_steps = -1;     // -1 -> ceil(8/(gamma_total * dt))

    double resolved_omega_in() const { return omega_in > 0.0 ? omega_in : omega_k; }
    /// Throws StepTooLarge / DomainError on invariant violations.
    void validate() const;
};

struct LorentzianFit {
    double center = 0.0;     // rad/s
    double width = 0.0;      // rad/s, FWHM of the fitted Lorentzian
    double amplitude = 0.0;
    double floor = 0.0;
    double center_err = 0.0;  // 1 sigma from trajectory-group scatter
    double width_err = 0.0;
};

struct SimResult {
    // Averaged two-sided PSDs (see psd.hpp convention).
    std::vector<double> omega_mech;   // rad/s, lab frequencies for psd_z
    std::vector<double> psd_z;
    std::vector<double> omega_out;    // rad/s, envelope frequency (lab - drive)
    std::vector<double> psd_q;        // homodyne quadrature PSD
    LorentzianFit mech_fit;           // of the psd_z resonance
    double mean_z2 = 0.0;             // time-averaged <z^2>
    int segments = 0;
    int trajectories = 0;
};

/// Integrate the coupled electron-cavity Langevin system with
/// classical-equivalent symmetrized noise (n_th + 1/2 per quadrature per
/// bath) using an exponential Euler-Maruyama step (exact linear drift).
/// n_threads = 0 resolves from NOISE_BUDGET_THREADS / hardware.
SimResult simulate(const SimConfig& sim, int n_threads = 0);

/// Analytic two-sided PSD of the measured quadrature at envelope
/// frequencies omega_env, assembled from the measurement-chain spectra in
/// natural units.
std::vector<double> analytic_output_psd(const SimConfig& sim,
                                        const std::vector<double>& omega_env);

/// Analytic PSD packaged with its grid, so comparisons can detect mismatch.
struct AnalyticPsd {
    std::vector<double> omega;  // rad/s envelope frequencies
    std::vector<double> psd;
};
AnalyticPsd analytic_output_psd(const SimConfig& sim);

struct ComparisonReport {
    bool pass = false;
    double ratio_tol = 0.10;
    double band_lo = 0.0, band_hi = 0.0;    // rad/s, half-power band
    double mean_ratio = 0.0;                // sim/analytic averaged over band
    double rms_rel_dev = 0.0;
    double max_rel_dev = 0.0;
    double center_analytic = 0.0, center_sim = 0.0, center_sigma = 0.0;
    double width_analytic = 0.0, width_sim = 0.0, width_sigma = 0.0;
    std::string to_json() const;
};

/// Ratio of simulated to analytic quadrature PSD across the half-power band
/// of the mechanical feature, plus the fitted-line comparison.  Throws
/// GridMismatch when the analytic grid does not match the simulated one.
ComparisonReport compare_to_analytic(const SimResult& result, const SimConfig& sim,
                                     const AnalyticPsd& analytic,
                                     double ratio_tol = 0.10);

/// Convenience: build the analytic side from the same SimConfig.
ComparisonReport compare_to_analytic(const SimResult& result, const SimConfig& sim,
                                     double ratio_tol = 0.10);

}  // namespace eforce
