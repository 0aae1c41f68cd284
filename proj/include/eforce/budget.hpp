#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eforce/config.hpp"
#include "eforce/damping.hpp"
#include "eforce/modes.hpp"
#include "eforce/spectra.hpp"

namespace eforce {

enum class GridKind { linear, logarithmic, resonance_refined };

/// Strictly increasing frequency grid in Hz (external unit); the engine
/// converts to rad/s per point.
struct FrequencyGrid {
    std::vector<double> points_hz;
    GridKind kind = GridKind::logarithmic;

    static FrequencyGrid linear(double f_lo, double f_hi, int n);
    static FrequencyGrid logarithmic(double f_lo, double f_hi, int n);
    /// Log base grid plus a dense linear window (n_window >= 200 points)
    /// around f_center +- halfwidth.
    static FrequencyGrid resonance_refined(double f_lo, double f_hi, int n_total,
                                           double f_center, double halfwidth,
                                           int n_window = 512);
    void validate() const;
};

/// Named spectral channel on the budget grid, N^2/Hz (cross2re is signed).
struct SpectrumChannel {
    std::string name;
    std::vector<double> values;
};

/// Everything derived while resolving a SystemConfig into a working design.
struct DesignPoint {
    ElectronModes modes;
    double g = 0.0;                // Hz/m
    double antenna_length = 0.0;   // m, resolved
    double tls_volume = 0.0;       // m^3, resolved
    double standoff = 0.0;         // m, resolved
    DampingBreakdown damping;
    double omega_z_eff = 0.0;      // rad/s, omega_z + omega_ba
    double f_z_eff_hz = 0.0;
};

DesignPoint resolve_design(const SystemConfig& config,
                           const PhysConstants& pc = PhysConstants::codata());

struct NoiseBudget {
    FrequencyGrid grid;
    // PSD channels, N^2/Hz, aligned with grid.points_hz.
    std::vector<double> intrinsic;
    std::vector<double> ba;
    std::vector<double> imp;
    std::vector<double> cross2re;  // signed, 2*Re of the cross spectrum
    std::vector<double> read_add;
    std::vector<double> johnson;
    std::vector<double> dielectric;
    std::vector<double> barkhausen_lo;
    std::vector<double> barkhausen_hi;
    std::vector<double> tls;
    std::vector<double> sql;
    std::vector<double> total;
    bool includes_uncertain = false;

    SystemConfig config;
    DesignPoint design;

    /// Channels in the serialization order of the CSV schema.
    std::vector<SpectrumChannel> channel_view() const;
};

/// Evaluate every channel on the grid and compose the total.  Uncertain
/// channels (Barkhausen band and TLS) are computed always and folded into
/// the total only when config.include_uncertain is set (upper band edge).
/// Throws RefusesGrid when the effective resonance lies outside the grid.
NoiseBudget assemble_budget(const SystemConfig& config, const FrequencyGrid& grid,
                            const PhysConstants& pc = PhysConstants::codata());

/// Grid used by the CLI: for resonance_refined the window is
/// f_z_eff +- 10*gamma_eff/2pi.
FrequencyGrid default_grid(const SystemConfig& config, GridKind kind, int points,
                           double f_lo = 1e9, double f_hi = 20e9,
                           const PhysConstants& pc = PhysConstants::codata());

struct BudgetMinimum {
    double f_min_hz;
    double amp_min;  // N/sqrt(Hz)
};

/// Parabolic refinement of the discrete minimum of the total in
/// log-amplitude.  Requires a resonance-refined grid.
BudgetMinimum find_minimum(const NoiseBudget& budget);

struct BroadbandEnvelope {
    std::vector<double> voltages;                       // V
    std::vector<BudgetMinimum> minima;                  // per stable voltage
    FrequencyGrid grid;                                 // common grid
    std::vector<double> envelope;                       // N^2/Hz pointwise min
    std::vector<std::pair<double, std::string>> skipped;  // unstable voltages
};

/// Per-voltage budgets on a common grid; the envelope is the pointwise
/// minimum of the totals.  Antenna length is re-derived per voltage when
/// the config keeps it on auto and retune_antenna is set.
BroadbandEnvelope voltage_sweep(const SystemConfig& config, double v_lo,
                                double v_hi, int n_steps,
                                const FrequencyGrid& common_grid,
                                const PhysConstants& pc = PhysConstants::codata());

}  // namespace eforce
