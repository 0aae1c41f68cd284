#include "eforce/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "eforce/errors.hpp"

namespace eforce {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

double* field_ptr(SystemConfig& c, std::string_view name) {
    struct Entry {
        const char* key;
        double* ptr;
    };
    const Entry table[] = {
        {"trap.v0_volt", &c.trap.v0},
        {"trap.b0_tesla", &c.trap.b0},
        {"trap.z0_m", &c.trap.z0},
        {"trap.rho0_m", &c.trap.rho0},
        {"trap.alpha_geom", &c.trap.alpha_geom},
        {"trap.temperature_k", &c.trap.t_trap},
        {"cavity.q_int", &c.cavity.q_int},
        {"cavity.q_ext", &c.cavity.q_ext},
        {"cavity.lx_m", &c.cavity.lx},
        {"cavity.ly_m", &c.cavity.ly},
        {"cavity.lz_m", &c.cavity.lz},
        {"cavity.theta_lo_rad", &c.cavity.theta_lo},
        {"cavity.temperature_k", &c.cavity.t_cav},
        {"antenna.length_m", &c.antenna.length},
        {"antenna.width_m", &c.antenna.width},
        {"antenna.thickness_m", &c.antenna.thickness},
        {"antenna.resistivity_ohm_m", &c.antenna.resistivity},
        {"electrode.resistivity_ohm_m", &c.electrode.resistivity},
        {"electrode.t_metal_m", &c.electrode.t_metal},
        {"electrode.t_dielectric_m", &c.electrode.t_dielectric},
        {"electrode.loss_tangent", &c.electrode.loss_tangent},
        {"electrode.standoff_m", &c.electrode.standoff},
        {"magnet.t_c_k", &c.magnet.t_c},
        {"magnet.temperature_k", &c.magnet.t_mag},
        {"tls.eps_r", &c.tls.eps_r},
        {"tls.t_exp_s", &c.tls.t_exp},
        {"tls.volume_m3", &c.tls.volume},
    };
    for (const auto& e : table)
        if (name == e.key) return e.ptr;
    return nullptr;
}

}  // namespace

void apply_param(SystemConfig& config, std::string_view name, double value) {
    // Hz-valued and composite knobs first.
    if (name == "trap.d_m") {
        config.trap.z0 = value;
        config.trap.rho0 = 0.0;  // auto: z0 sqrt 2, so d() == value
        return;
    }
    if (name == "cavity.f_k_hz") {
        config.cavity.omega_k = rad_per_sec(value);
        return;
    }
    if (name == "cavity.f_drive_hz") {
        config.cavity.omega_in = rad_per_sec(value);
        return;
    }
    if (name == "temperature_k") {
        config.set_temperature(value);
        return;
    }
    if (double* p = field_ptr(config, name)) {
        *p = value;
        return;
    }
    throw ConfigError("unknown parameter name: " + std::string(name));
}

double get_param(const SystemConfig& config, std::string_view name) {
    if (name == "trap.d_m") return config.trap.d();
    if (name == "cavity.f_k_hz") return to_hz(config.cavity.omega_k);
    if (name == "cavity.f_drive_hz") return to_hz(config.cavity.resolved_omega_in());
    if (name == "temperature_k") return config.trap.t_trap;
    SystemConfig copy = config;
    if (const double* p = field_ptr(copy, name)) return *p;
    throw ConfigError("unknown parameter name: " + std::string(name));
}

void ParamSpace::validate() const {
    if (entries.empty()) throw UsageError("ParamSpace: empty");
    for (const auto& e : entries) {
        // lower == upper is allowed for one-at-a-time scans.
        if (!std::isfinite(e.lower) || !std::isfinite(e.upper) || !(e.lower <= e.upper))
            throw UsageError("ParamSpace: bounds must be finite with lower <= upper: " +
                             e.name);
        if (e.scale == ParamRange::Scale::log && !(e.lower > 0.0))
            throw UsageError("ParamSpace: log-scaled bounds must be positive: " + e.name);
        SystemConfig probe;
        apply_param(probe, e.name, e.lower);  // rejects unknown names
    }
}

namespace detail {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0, double step,
                             const NelderMeadOptions& options) {
    const std::size_t dim = x0.size();
    struct Vertex {
        std::vector<double> x;
        double value;
    };
    std::vector<Vertex> simplex;
    simplex.reserve(dim + 1);
    int evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        const double v = f(x);
        return std::isnan(v) ? inf : v;
    };

    simplex.push_back({x0, eval(x0)});
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<double> x = x0;
        x[i] += step;
        simplex.push_back({x, eval(x)});
    }

    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
    auto by_value = [](const Vertex& a, const Vertex& b) { return a.value < b.value; };

    while (evals < options.max_evals) {
        std::sort(simplex.begin(), simplex.end(), by_value);

        double diameter = 0.0;
        for (std::size_t i = 1; i <= dim; ++i)
            for (std::size_t k = 0; k < dim; ++k)
                diameter = std::max(diameter,
                                    std::fabs(simplex[i].x[k] - simplex[0].x[k]));
        if (diameter < options.diameter_tol) break;

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[i].x[k] / dim;

        Vertex& worst = simplex.back();
        std::vector<double> xr(dim);
        for (std::size_t k = 0; k < dim; ++k)
            xr[k] = centroid[k] + alpha * (centroid[k] - worst.x[k]);
        const double fr = eval(xr);

        if (fr < simplex.front().value) {
            std::vector<double> xe(dim);
            for (std::size_t k = 0; k < dim; ++k)
                xe[k] = centroid[k] + gamma * (xr[k] - centroid[k]);
            const double fe = eval(xe);
            if (fe < fr)
                worst = {xe, fe};
            else
                worst = {xr, fr};
        } else if (fr < simplex[dim - 1].value) {
            worst = {xr, fr};
        } else {
            std::vector<double> xc(dim);
            const bool outside = fr < worst.value;
            const std::vector<double>& towards = outside ? xr : worst.x;
            for (std::size_t k = 0; k < dim; ++k)
                xc[k] = centroid[k] + rho * (towards[k] - centroid[k]);
            const double fc = eval(xc);
            if (fc < std::min(fr, worst.value)) {
                worst = {xc, fc};
            } else {
                for (std::size_t i = 1; i <= dim; ++i) {
                    for (std::size_t k = 0; k < dim; ++k)
                        simplex[i].x[k] =
                            simplex[0].x[k] + sigma * (simplex[i].x[k] - simplex[0].x[k]);
                    simplex[i].value = eval(simplex[i].x);
                    if (evals >= options.max_evals) break;
                }
            }
        }
    }

    std::sort(simplex.begin(), simplex.end(), by_value);
    return {simplex.front().x, simplex.front().value, evals};
}

}  // namespace detail

namespace {

// Map between scaled [0,1] coordinates and parameter values.
double to_value(const ParamRange& r, double t) {
    t = std::clamp(t, 0.0, 1.0);
    if (r.scale == ParamRange::Scale::log)
        return r.lower * std::pow(r.upper / r.lower, t);
    return r.lower + (r.upper - r.lower) * t;
}

SystemConfig at_point(const SystemConfig& base, const ParamSpace& space,
                      const std::vector<double>& t) {
    SystemConfig cfg = base;
    for (std::size_t i = 0; i < space.entries.size(); ++i)
        apply_param(cfg, space.entries[i].name, to_value(space.entries[i], t[i]));
    return cfg;
}

double budget_objective(const SystemConfig& cfg, const Objective& objective,
                        const PhysConstants& pc) {
    if (!trap_stable(cfg.trap, pc)) return inf;
    try {
        const FrequencyGrid grid =
            default_grid(cfg, GridKind::resonance_refined, 1280, 1e9, 20e9, pc);
        const NoiseBudget budget = assemble_budget(cfg, grid, pc);
        if (objective.kind == Objective::Kind::min_floor)
            return find_minimum(budget).amp_min;
        double best = inf;
        for (std::size_t i = 0; i < grid.points_hz.size(); ++i)
            if (grid.points_hz[i] >= objective.f_lo && grid.points_hz[i] <= objective.f_hi)
                best = std::min(best, std::sqrt(budget.total[i]));
        return best;
    } catch (const PhysicsError&) {
        return inf;
    } catch (const RefusesGrid&) {
        return inf;
    }
}

}  // namespace

OptResult optimize(const SystemConfig& base, const ParamSpace& space, Objective objective,
                   int budget_evals, std::uint64_t seed, const PhysConstants& pc,
                   const std::function<double(const SystemConfig&)>& objective_override) {
    space.validate();
    for (const auto& e : space.entries)
        if (!(e.lower < e.upper))
            throw UsageError("optimize: zero-width axis: " + e.name);
    if (budget_evals < 20) throw UsageError("optimize: budget_evals must be >= 20");
    if (objective.kind == Objective::Kind::band_min &&
        !(objective.f_lo > 0.0 && objective.f_hi > objective.f_lo))
        throw UsageError("optimize: band_min needs 0 < f_lo < f_hi");

    const std::size_t dim = space.entries.size();
    OptResult result;
    result.evaluations = 0;

    auto eval_point = [&](const std::vector<double>& t) {
        const SystemConfig cfg = at_point(base, space, t);
        const double v = objective_override ? objective_override(cfg)
                                            : budget_objective(cfg, objective, pc);
        result.trace.emplace_back(result.evaluations, v);
        ++result.evaluations;
        return v;
    };

    // Latin-hypercube seeding: one stratum per sample per axis.
    const int n_seed =
        std::max<int>(static_cast<int>(dim) + 2, std::min<int>(budget_evals / 4, 24));
    std::mt19937_64 rng(seed);
    std::vector<std::vector<double>> seeds(n_seed, std::vector<double>(dim));
    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<int> strata(n_seed);
        std::iota(strata.begin(), strata.end(), 0);
        std::shuffle(strata.begin(), strata.end(), rng);
        std::uniform_real_distribution<double> jitter(0.0, 1.0);
        for (int s = 0; s < n_seed; ++s)
            seeds[s][k] = (strata[s] + jitter(rng)) / n_seed;
    }

    std::vector<std::pair<double, std::vector<double>>> seeded;
    for (const auto& t : seeds) seeded.emplace_back(eval_point(t), t);
    std::stable_sort(seeded.begin(), seeded.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!std::isfinite(seeded.front().first))
        throw NoFeasiblePoint("optimize: every seed evaluated infeasible");

    std::vector<double> best_x = seeded.front().second;
    double best_v = seeded.front().first;

    const int restarts = std::min<int>(3, n_seed);
    for (int r = 0; r < restarts && result.evaluations < budget_evals; ++r) {
        detail::NelderMeadOptions opts;
        opts.max_evals = std::max(
            1, std::min((budget_evals - result.evaluations),
                        (budget_evals - result.evaluations) / (restarts - r) + 1));
        opts.diameter_tol = 1e-4;
        const auto nm = detail::nelder_mead(
            [&](const std::vector<double>& t) { return eval_point(t); },
            seeded[r].second, 0.15, opts);
        if (nm.value < best_v) {
            best_v = nm.value;
            best_x = nm.x;
        }
    }

    if (!std::isfinite(best_v)) throw NoFeasiblePoint("optimize: no feasible point found");
    result.best_config = at_point(base, space, best_x);
    result.best_objective = best_v;
    return result;
}

std::vector<SensitivityRow> sensitivity_table(const SystemConfig& base,
                                              const ParamSpace& space, int n_per_axis,
                                              const PhysConstants& pc) {
    space.validate();
    if (n_per_axis < 3) throw UsageError("sensitivity_table: n_per_axis must be >= 3");
    std::vector<SensitivityRow> rows;
    for (const auto& range : space.entries) {
        const bool degenerate = range.upper == range.lower;
        const int n = degenerate ? 1 : n_per_axis;
        for (int i = 0; i < n; ++i) {
            const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
            SystemConfig cfg = base;
            const double value = to_value(range, t);
            apply_param(cfg, range.name, value);
            rows.push_back({range.name, value,
                            budget_objective(cfg, Objective{}, pc)});
        }
    }
    return rows;
}

}  // namespace eforce
