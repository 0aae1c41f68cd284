#pragma once

#include <string>

#include "eforce/budget.hpp"
#include "eforce/config.hpp"
#include "eforce/optimize.hpp"

namespace eforce {

/// Optimizer settings parsed from the [optimize] config section.
struct OptimizeSettings {
    ParamSpace space;
    Objective objective;
    int budget_evals = 120;
};

struct LoadedConfig {
    SystemConfig system;
    OptimizeSettings optimize;
    bool has_optimize = false;
};

/// Load an INI (key = value under [section]) or JSON config; the format is
/// chosen by extension (.json) with an INI fallback.  Unknown keys are
/// rejected with the offending dotted path named.
LoadedConfig load_config(const std::string& path);
LoadedConfig parse_ini(const std::string& text, const std::string& origin = "");
LoadedConfig parse_json_config(const std::string& text, const std::string& origin = "");

std::string to_ini(const SystemConfig& config);
std::string to_json_string(const SystemConfig& config);

/// CSV schema: frequency_hz,total,int,ba,imp,cross2re,read_add,johnson,
/// dielectric,barkhausen_lo,barkhausen_hi,tls,sql -- amplitudes in
/// N/sqrt(Hz), 17 significant digits, signed sqrt for cross2re.
std::string budget_csv(const NoiseBudget& budget);
std::string budget_json(const NoiseBudget& budget);

std::string envelope_csv(const BroadbandEnvelope& envelope);
std::string envelope_json(const BroadbandEnvelope& envelope);

std::string sensitivity_csv(const std::vector<SensitivityRow>& rows);

std::string opt_result_json(const OptResult& result, const Objective& objective);

/// Derived-quantity listing used by the `params` subcommand.
std::string params_report(const SystemConfig& config, const DesignPoint& design);

}  // namespace eforce
