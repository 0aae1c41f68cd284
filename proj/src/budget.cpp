#include "eforce/budget.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eforce/errors.hpp"
#include "eforce/parallel.hpp"
#include "eforce/response.hpp"

namespace eforce {

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    return v;
}

}  // namespace

FrequencyGrid FrequencyGrid::linear(double f_lo, double f_hi, int n) {
    if (!(f_lo > 0.0) || !(f_hi > f_lo) || n < 2)
        throw UsageError("FrequencyGrid: need 0 < f_lo < f_hi and n >= 2");
    FrequencyGrid g;
    g.kind = GridKind::linear;
    g.points_hz = linspace(f_lo, f_hi, n);
    return g;
}

FrequencyGrid FrequencyGrid::logarithmic(double f_lo, double f_hi, int n) {
    if (!(f_lo > 0.0) || !(f_hi > f_lo) || n < 2)
        throw UsageError("FrequencyGrid: need 0 < f_lo < f_hi and n >= 2");
    FrequencyGrid g;
    g.kind = GridKind::logarithmic;
    const double llo = std::log(f_lo), lhi = std::log(f_hi);
    g.points_hz.resize(n);
    for (int i = 0; i < n; ++i)
        g.points_hz[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / (n - 1));
    g.points_hz.front() = f_lo;
    g.points_hz.back() = f_hi;
    return g;
}

FrequencyGrid FrequencyGrid::resonance_refined(double f_lo, double f_hi, int n_total,
                                               double f_center, double halfwidth,
                                               int n_window) {
    if (n_window < 200) n_window = 200;
    if (n_total < n_window + 2)
        throw UsageError("FrequencyGrid: refined grid needs n_total > n_window");
    FrequencyGrid base = logarithmic(f_lo, f_hi, n_total - n_window);
    const double w_lo = std::max(f_lo, f_center - halfwidth);
    const double w_hi = std::min(f_hi, f_center + halfwidth);
    std::vector<double> merged = base.points_hz;
    if (w_hi > w_lo) {
        const std::vector<double> window = linspace(w_lo, w_hi, n_window);
        merged.insert(merged.end(), window.begin(), window.end());
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    FrequencyGrid g;
    g.kind = GridKind::resonance_refined;
    g.points_hz = std::move(merged);
    g.validate();
    return g;
}

void FrequencyGrid::validate() const {
    if (points_hz.size() < 2) throw UsageError("FrequencyGrid: need >= 2 points");
    for (std::size_t i = 0; i < points_hz.size(); ++i) {
        if (!(points_hz[i] > 0.0) || !std::isfinite(points_hz[i]))
            throw UsageError("FrequencyGrid: points must be positive and finite");
        if (i > 0 && !(points_hz[i] > points_hz[i - 1]))
            throw UsageError("FrequencyGrid: points must be strictly increasing");
    }
}

DesignPoint resolve_design(const SystemConfig& config, const PhysConstants& pc) {
    config.validate();
    DesignPoint d;
    d.modes = derive_modes(config.trap, pc);
    d.antenna_length = config.antenna.resolved_length(d.modes.omega_z, pc);
    d.standoff = config.electrode.resolved_standoff(config.trap.z0);
    d.tls_volume = config.tls.volume > 0.0
                       ? config.tls.volume
                       : d.antenna_length * 2.0 * config.trap.d() * config.antenna.width;
    d.g = coupling_strength(config.trap, config.cavity, config.antenna, pc);
    d.damping = compose_damping(config.trap, config.cavity, config.antenna,
                                config.nonideal, d.g, config.trap.t_trap, pc);
    const BackactionShift shift =
        dynamical_backaction(d.modes.omega_z, config.cavity, d.g, pc.m_electron, pc);
    d.omega_z_eff = d.modes.omega_z + shift.omega_ba;
    d.f_z_eff_hz = to_hz(d.omega_z_eff);
    return d;
}

FrequencyGrid default_grid(const SystemConfig& config, GridKind kind, int points,
                           double f_lo, double f_hi, const PhysConstants& pc) {
    switch (kind) {
        case GridKind::linear:
            return FrequencyGrid::linear(f_lo, f_hi, points);
        case GridKind::logarithmic:
            return FrequencyGrid::logarithmic(f_lo, f_hi, points);
        case GridKind::resonance_refined: {
            const DesignPoint d = resolve_design(config, pc);
            const double halfwidth = 10.0 * d.damping.gamma_eff / two_pi;
            const int n_window = std::max(256, points / 8);
            return FrequencyGrid::resonance_refined(f_lo, f_hi, points, d.f_z_eff_hz,
                                                    halfwidth, n_window);
        }
    }
    throw UsageError("default_grid: unknown grid kind");
}

std::vector<SpectrumChannel> NoiseBudget::channel_view() const {
    return {
        {"total", total},
        {"int", intrinsic},
        {"ba", ba},
        {"imp", imp},
        {"cross2re", cross2re},
        {"read_add", read_add},
        {"johnson", johnson},
        {"dielectric", dielectric},
        {"barkhausen_lo", barkhausen_lo},
        {"barkhausen_hi", barkhausen_hi},
        {"tls", tls},
        {"sql", sql},
    };
}

NoiseBudget assemble_budget(const SystemConfig& config, const FrequencyGrid& grid,
                            const PhysConstants& pc) {
    grid.validate();
    NoiseBudget b;
    b.grid = grid;
    b.config = config;
    b.design = resolve_design(config, pc);
    b.includes_uncertain = config.include_uncertain;

    if (b.design.f_z_eff_hz < grid.points_hz.front() ||
        b.design.f_z_eff_hz > grid.points_hz.back())
        throw RefusesGrid("grid does not cover the effective resonance at " +
                          std::to_string(b.design.f_z_eff_hz) + " Hz");

    ElectrodeMaterial electrode = config.electrode;
    electrode.standoff = b.design.standoff;
    TlsMaterial tls_mat = config.tls;
    tls_mat.volume = b.design.tls_volume;

    const int n = static_cast<int>(grid.points_hz.size());
    for (auto* ch : {&b.intrinsic, &b.ba, &b.imp, &b.cross2re, &b.read_add, &b.johnson,
                     &b.dielectric, &b.barkhausen_lo, &b.barkhausen_hi, &b.tls, &b.sql,
                     &b.total})
        ch->assign(n, 0.0);

    const double mass = pc.m_electron;
    const double gamma_int = b.design.damping.intrinsic();
    const double gamma_eff = b.design.damping.gamma_eff;
    const double t_trap = config.trap.t_trap;
    const double t_cav = config.cavity.t_cav;
    const double theta = config.cavity.theta_lo;
    const double g = b.design.g;

    parallel_for(n, [&](int i) {
        const double omega = rad_per_sec(grid.points_hz[i]);
        const ComplexResponse chi =
            chi_eff(omega, b.design.modes.omega_z, gamma_int, config.cavity, g, mass, pc);

        b.intrinsic[i] = s_ff_intrinsic(omega, mass, gamma_eff, t_trap, pc);
        b.ba[i] = s_ff_backaction_full(omega, config.cavity, g, t_cav, pc);
        b.imp[i] = s_ff_imprecision_full(omega, config.cavity, g, chi, theta, t_cav, pc);
        b.cross2re[i] =
            2.0 * std::real(s_ff_cross_full(omega, config.cavity, g, chi, theta, t_cav, pc));
        const ReadoutAdditional add =
            s_ff_readout_additional(omega, config.cavity, g, chi, t_cav, pc);
        b.read_add[i] = add.ba_add + add.imp_add;
        b.johnson[i] = s_ff_johnson(omega, electrode, t_trap, pc);
        b.dielectric[i] = s_ff_dielectric(omega, electrode, t_trap, pc);
        b.barkhausen_lo[i] = s_ff_barkhausen(omega, config.magnet, config.magnet.alpha_lo,
                                             b.design.modes, t_trap, pc);
        b.barkhausen_hi[i] = s_ff_barkhausen(omega, config.magnet, config.magnet.alpha_hi,
                                             b.design.modes, t_trap, pc);
        b.tls[i] = s_ff_tls(omega, tls_mat, config.cavity, g, t_cav, pc);
        b.sql[i] = sql_bound(chi, pc);

        double sum = b.intrinsic[i] + b.ba[i] + b.imp[i] + b.cross2re[i] + b.read_add[i] +
                     b.johnson[i] + b.dielectric[i];
        if (config.include_uncertain) sum += b.barkhausen_hi[i] + b.tls[i];
        b.total[i] = sum;
    });

    return b;
}

BudgetMinimum find_minimum(const NoiseBudget& budget) {
    if (budget.grid.kind != GridKind::resonance_refined)
        throw RefusesGrid("find_minimum requires a resonance-refined grid");
    const auto& f = budget.grid.points_hz;
    const auto& s = budget.total;
    const std::size_t idx = static_cast<std::size_t>(
        std::min_element(s.begin(), s.end()) - s.begin());

    if (idx == 0 || idx + 1 == s.size())
        return {f[idx], std::sqrt(s[idx])};

    // Parabolic vertex through the bracketing triple in log-PSD.
    const double x0 = f[idx - 1], x1 = f[idx], x2 = f[idx + 1];
    const double y0 = std::log(s[idx - 1]), y1 = std::log(s[idx]), y2 = std::log(s[idx + 1]);
    const double d01 = (y1 - y0) / (x1 - x0);
    const double d12 = (y2 - y1) / (x2 - x1);
    const double curv = (d12 - d01) / (x2 - x0);
    if (!(curv > 0.0)) return {x1, std::sqrt(s[idx])};
    const double xv = std::clamp(0.5 * (x0 + x1 - d01 / curv), x0, x2);
    const double yv = y0 + d01 * (xv - x0) + curv * (xv - x0) * (xv - x1);
    return {xv, std::sqrt(std::exp(yv))};
}

BroadbandEnvelope voltage_sweep(const SystemConfig& config, double v_lo, double v_hi,
                                int n_steps, const FrequencyGrid& common_grid,
                                const PhysConstants& pc) {
    if (!(v_lo > 0.0) || !(v_lo < v_hi) || n_steps < 1)
        throw UsageError("voltage_sweep: need 0 < v_lo < v_hi and n_steps >= 1");
    common_grid.validate();

    SystemConfig base = config;
    if (!config.retune_antenna && config.antenna.length <= 0.0) {
        // Pin the auto length at the base design instead of re-deriving it.
        base.antenna.length =
            config.antenna.resolved_length(derive_modes(config.trap, pc).omega_z, pc);
    }

    BroadbandEnvelope env;
    env.grid = common_grid;
    env.envelope.assign(common_grid.points_hz.size(),
                        std::numeric_limits<double>::infinity());

    for (int i = 0; i < n_steps; ++i) {
        const double v =
            n_steps == 1 ? v_lo : v_lo + (v_hi - v_lo) * static_cast<double>(i) / (n_steps - 1);
        SystemConfig cfg = base;
        cfg.trap.v0 = v;
        if (!trap_stable(cfg.trap, pc)) {
            env.skipped.emplace_back(v, "trap unstable at this voltage");
            continue;
        }
        try {
            const NoiseBudget on_common = assemble_budget(cfg, common_grid, pc);
            for (std::size_t k = 0; k < env.envelope.size(); ++k)
                env.envelope[k] = std::min(env.envelope[k], on_common.total[k]);

            const FrequencyGrid refined =
                default_grid(cfg, GridKind::resonance_refined, 1536,
                             common_grid.points_hz.front(), common_grid.points_hz.back(), pc);
            env.minima.push_back(find_minimum(assemble_budget(cfg, refined, pc)));
            env.voltages.push_back(v);
        } catch (const TrapUnstable&) {
            env.skipped.emplace_back(v, "trap unstable at this voltage");
        } catch (const RefusesGrid& e) {
            env.skipped.emplace_back(v, e.what());
        }
    }
    return env;
}

}  // namespace eforce
