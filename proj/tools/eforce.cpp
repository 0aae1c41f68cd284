// eforce: force-noise budgeting for a cavity-coupled trapped electron.
//
// Subcommands: budget, sweep, optimize, validate, params.  Data goes to
// --out (or stdout); diagnostics go to stderr.  Exit codes: 0 success,
// 1 usage/config error, 2 physics error (e.g. unstable trap), 3 numerical
// failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "eforce/budget.hpp"
#include "eforce/config_io.hpp"
#include "eforce/errors.hpp"
#include "eforce/langevin.hpp"
#include "eforce/optimize.hpp"

namespace {

using namespace eforce;

void write_output(const std::string& out_path, const std::string& data) {
    if (out_path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw UsageError("cannot open output file: " + out_path);
    os << data;
}

GridKind parse_grid_kind(const std::string& s) {
    if (s == "lin") return GridKind::linear;
    if (s == "log") return GridKind::logarithmic;
    if (s == "refined") return GridKind::resonance_refined;
    throw UsageError("unknown grid kind: " + s + " (expected lin|log|refined)");
}

struct CommonArgs {
    std::string config_path;
    std::string out_path;
    std::string grid = "refined";
    int points = 4096;
    bool include_uncertain = false;
    std::string format = "csv";
};

SystemConfig load_system(const CommonArgs& args, LoadedConfig* loaded_out = nullptr) {
    LoadedConfig loaded;
    if (!args.config_path.empty())
        loaded = load_config(args.config_path);
    else
        loaded.system = reference_design();
    if (args.include_uncertain) loaded.system.include_uncertain = true;
    if (loaded_out) *loaded_out = loaded;
    return loaded.system;
}

ParamSpace default_space() {
    ParamSpace space;
    space.entries = {
        {"antenna.width_m", 5e-3, 0.2, ParamRange::Scale::log},
        {"cavity.f_k_hz", 4.5e9, 6.5e9, ParamRange::Scale::linear},
        {"trap.v0_volt", 10.0, 50.0, ParamRange::Scale::linear},
        {"cavity.q_ext", 1e2, 1e5, ParamRange::Scale::log},
    };
    return space;
}

int run(int argc, char** argv) {
    CLI::App app{"force-noise budget of a cavity-coupled trapped electron"};
    app.require_subcommand(1);

    CommonArgs args;
    double v_lo = 10.0, v_hi = 50.0;
    int v_steps = 21;
    std::uint64_t seed = 1;

    auto add_common = [&](CLI::App* cmd, bool with_grid) {
        cmd->add_option("--config", args.config_path, "configuration file (.cfg INI or .json)");
        cmd->add_option("--out", args.out_path, "output path (default: stdout)");
        cmd->add_option("--format", args.format, "csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
        if (with_grid) {
            cmd->add_option("--grid", args.grid, "lin|log|refined")
                ->check(CLI::IsMember({"lin", "log", "refined"}));
            cmd->add_option("--points", args.points, "grid size")
                ->check(CLI::PositiveNumber);
            cmd->add_flag("--include-uncertain", args.include_uncertain,
                          "fold Barkhausen/TLS estimates into the total");
        }
    };

    CLI::App* cmd_budget = app.add_subcommand("budget", "evaluate the noise budget");
    add_common(cmd_budget, true);

    CLI::App* cmd_sweep =
        app.add_subcommand("sweep", "broadband envelope over trap voltage");
    add_common(cmd_sweep, true);
    cmd_sweep->add_option("--vlo", v_lo, "lowest voltage");
    cmd_sweep->add_option("--vhi", v_hi, "highest voltage");
    cmd_sweep->add_option("--vsteps", v_steps, "number of voltages")
        ->check(CLI::PositiveNumber);

    CLI::App* cmd_optimize =
        app.add_subcommand("optimize", "derivative-free design optimization");
    add_common(cmd_optimize, false);
    cmd_optimize->add_option("--seed", seed, "random seed");

    CLI::App* cmd_validate =
        app.add_subcommand("validate", "time-domain oracle vs analytic budget");
    add_common(cmd_validate, false);
    cmd_validate->add_option("--seed", seed, "random seed");

    CLI::App* cmd_params =
        app.add_subcommand("params", "print resolved derived quantities");
    add_common(cmd_params, false);

    CLI11_PARSE(app, argc, argv);

    if (cmd_budget->parsed()) {
        const SystemConfig cfg = load_system(args);
        const FrequencyGrid grid =
            default_grid(cfg, parse_grid_kind(args.grid), args.points);
        const NoiseBudget budget = assemble_budget(cfg, grid);
        write_output(args.out_path,
                     args.format == "json" ? budget_json(budget) : budget_csv(budget));
        if (grid.kind == GridKind::resonance_refined) {
            const BudgetMinimum m = find_minimum(budget);
            std::cerr << "minimum " << m.amp_min << " N/sqrt(Hz) at " << m.f_min_hz
                      << " Hz\n";
        }
        return 0;
    }

    if (cmd_sweep->parsed()) {
        const SystemConfig cfg = load_system(args);
        const GridKind kind = parse_grid_kind(args.grid);
        const FrequencyGrid common =
            kind == GridKind::linear
                ? FrequencyGrid::linear(1e9, 20e9, args.points)
                : FrequencyGrid::logarithmic(1e9, 20e9, args.points);
        const BroadbandEnvelope env = voltage_sweep(cfg, v_lo, v_hi, v_steps, common);
        write_output(args.out_path,
                     args.format == "json" ? envelope_json(env) : envelope_csv(env));
        for (const auto& [v, why] : env.skipped)
            std::cerr << "skipped " << v << " V: " << why << "\n";
        return 0;
    }

    if (cmd_optimize->parsed()) {
        LoadedConfig loaded;
        const SystemConfig cfg = load_system(args, &loaded);
        const OptimizeSettings settings =
            loaded.has_optimize ? loaded.optimize
                                : OptimizeSettings{default_space(), Objective{}, 120};
        const OptResult result = optimize(cfg, settings.space, settings.objective,
                                          settings.budget_evals, seed);
        write_output(args.out_path, opt_result_json(result, settings.objective));
        std::cerr << "best objective " << result.best_objective << " N/sqrt(Hz) after "
                  << result.evaluations << " evaluations\n";
        return 0;
    }

    if (cmd_validate->parsed()) {
        SimConfig sim;
        sim.seed = seed;
        const SimResult result = simulate(sim);
        const ComparisonReport report = compare_to_analytic(result, sim);
        write_output(args.out_path, report.to_json());
        return report.pass ? 0 : 3;
    }

    if (cmd_params->parsed()) {
        const SystemConfig cfg = load_system(args);
        write_output(args.out_path, params_report(cfg, resolve_design(cfg)));
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const eforce::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const eforce::PhysicsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const eforce::NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
