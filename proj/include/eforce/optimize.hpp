#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "eforce/budget.hpp"
#include "eforce/config.hpp"

namespace eforce {

struct ParamRange {
    std::string name;  // dotted config key, e.g. "antenna.width_m"
    double lower;
    double upper;
    enum class Scale { linear, log } scale = Scale::linear;
};

struct ParamSpace {
    std::vector<ParamRange> entries;
    void validate() const;
};

struct Objective {
    enum class Kind { min_floor, band_min } kind = Kind::min_floor;
    double f_lo = 0.0;  // Hz, band_min only
    double f_hi = 0.0;
};

struct OptResult {
    SystemConfig best_config;
    double best_objective;                        // N/sqrt(Hz)
    std::vector<std::pair<int, double>> trace;    // (evaluation index, objective)
    int evaluations;
};

/// Set/read a numeric config field by its dotted key.  Throws ConfigError
/// for unknown names.
void apply_param(SystemConfig& config, std::string_view name, double value);
double get_param(const SystemConfig& config, std::string_view name);

/// Latin-hypercube seeding followed by downhill-simplex refinement (3
/// restarts from the best seeds); deterministic for a given seed.  Unstable
/// samples get +inf.  Throws NoFeasiblePoint when nothing evaluates finite.
/// objective_override is a test hook substituting the budget objective.
OptResult optimize(const SystemConfig& base, const ParamSpace& space,
                   Objective objective, int budget_evals, std::uint64_t seed,
                   const PhysConstants& pc = PhysConstants::codata(),
                   const std::function<double(const SystemConfig&)>& objective_override = {});

struct SensitivityRow {
    std::string param;
    double value;
    double floor;  // N/sqrt(Hz); +inf for infeasible points
};

/// One-at-a-time scans of each space axis around the base config.
std::vector<SensitivityRow> sensitivity_table(const SystemConfig& base,
                                              const ParamSpace& space,
                                              int n_per_axis,
                                              const PhysConstants& pc = PhysConstants::codata());

namespace detail {

struct NelderMeadOptions {
    int max_evals = 200;
    double diameter_tol = 1e-4;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value;
    int evaluations;
};

/// Downhill simplex in scaled coordinates; deterministic.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0, double step,
                             const NelderMeadOptions& options);

}  // namespace detail

}  // namespace eforce
