#include "eforce/config_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "eforce/errors.hpp"
#include "eforce/optimize.hpp"

namespace eforce {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

double parse_number(const std::string& value, const std::string& path) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config value for " + path + " is not a number: '" + value + "'");
    }
}

bool parse_bool(const std::string& value, const std::string& path) {
    const std::string v = lower(value);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError("config value for " + path + " is not a boolean: '" + value + "'");
}

// "auto" maps to the 0.0 sentinel for resolvable fields.
double parse_auto(const std::string& value, const std::string& path) {
    if (lower(value) == "auto") return 0.0;
    return parse_number(value, path);
}

struct Setter {
    const char* path;
    enum Kind { number, number_or_auto, boolean, hz_to_rad, debye_units } kind;
    void (*apply)(SystemConfig&, double);
};

const Setter kSetters[] = {
    {"temperature_k", Setter::number,
     [](SystemConfig& c, double v) { c.set_temperature(v); }},
    {"trap.v0_volt", Setter::number, [](SystemConfig& c, double v) { c.trap.v0 = v; }},
    {"trap.b0_tesla", Setter::number, [](SystemConfig& c, double v) { c.trap.b0 = v; }},
    {"trap.z0_m", Setter::number, [](SystemConfig& c, double v) { c.trap.z0 = v; }},
    {"trap.rho0_m", Setter::number_or_auto,
     [](SystemConfig& c, double v) { c.trap.rho0 = v; }},
    {"trap.d_m", Setter::number,
     [](SystemConfig& c, double v) {
         // z0 = d with rho0 left on auto (= z0 sqrt 2) keeps d() == v
         c.trap.z0 = v;
         c.trap.rho0 = 0.0;
     }},
    {"trap.alpha_geom", Setter::number,
     [](SystemConfig& c, double v) { c.trap.alpha_geom = v; }},
    {"trap.temperature_k", Setter::number,
     [](SystemConfig& c, double v) { c.trap.t_trap = v; }},
    {"cavity.f_k_hz", Setter::hz_to_rad,
     [](SystemConfig& c, double v) { c.cavity.omega_k = v; }},
    {"cavity.q_int", Setter::number, [](SystemConfig& c, double v) { c.cavity.q_int = v; }},
    {"cavity.q_ext", Setter::number, [](SystemConfig& c, double v) { c.cavity.q_ext = v; }},
    {"cavity.lx_m", Setter::number, [](SystemConfig& c, double v) { c.cavity.lx = v; }},
    {"cavity.ly_m", Setter::number, [](SystemConfig& c, double v) { c.cavity.ly = v; }},
    {"cavity.lz_m", Setter::number, [](SystemConfig& c, double v) { c.cavity.lz = v; }},
    {"cavity.f_drive_hz", Setter::hz_to_rad,
     [](SystemConfig& c, double v) { c.cavity.omega_in = v; }},
    {"cavity.theta_lo_rad", Setter::number,
     [](SystemConfig& c, double v) { c.cavity.theta_lo = v; }},
    {"cavity.temperature_k", Setter::number,
     [](SystemConfig& c, double v) { c.cavity.t_cav = v; }},
    {"antenna.length_m", Setter::number_or_auto,
     [](SystemConfig& c, double v) { c.antenna.length = v; }},
    {"antenna.width_m", Setter::number,
     [](SystemConfig& c, double v) { c.antenna.width = v; }},
    {"antenna.thickness_m", Setter::number,
     [](SystemConfig& c, double v) { c.antenna.thickness = v; }},
    {"antenna.resistivity_ohm_m", Setter::number,
     [](SystemConfig& c, double v) { c.antenna.resistivity = v; }},
    {"electrode.resistivity_ohm_m", Setter::number,
     [](SystemConfig& c, double v) { c.electrode.resistivity = v; }},
    {"electrode.t_metal_m", Setter::number,
     [](SystemConfig& c, double v) { c.electrode.t_metal = v; }},
    {"electrode.t_dielectric_m", Setter::number,
     [](SystemConfig& c, double v) { c.electrode.t_dielectric = v; }},
    {"electrode.eps_rel", Setter::number,
     [](SystemConfig& c, double v) {
         c.electrode.eps_dielectric = v * PhysConstants::codata().eps0;
     }},
    {"electrode.loss_tangent", Setter::number,
     [](SystemConfig& c, double v) { c.electrode.loss_tangent = v; }},
    {"electrode.standoff_m", Setter::number_or_auto,
     [](SystemConfig& c, double v) { c.electrode.standoff = v; }},
    {"magnet.g_s", Setter::number, [](SystemConfig& c, double v) { c.magnet.g_s = v; }},
    {"magnet.v_uc_m3", Setter::number,
     [](SystemConfig& c, double v) { c.magnet.v_uc = v; }},
    {"magnet.t_c_k", Setter::number, [](SystemConfig& c, double v) { c.magnet.t_c = v; }},
    {"magnet.alpha_lo_hz", Setter::hz_to_rad,
     [](SystemConfig& c, double v) { c.magnet.alpha_lo = v; }},
    {"magnet.alpha_hi_hz", Setter::hz_to_rad,
     [](SystemConfig& c, double v) { c.magnet.alpha_hi = v; }},
    {"magnet.temperature_k", Setter::number,
     [](SystemConfig& c, double v) { c.magnet.t_mag = v; }},
    {"tls.p0_j_m3", Setter::number, [](SystemConfig& c, double v) { c.tls.p0 = v; }},
    {"tls.a_rate_k3", Setter::number, [](SystemConfig& c, double v) { c.tls.a_rate = v; }},
    {"tls.dipole_debye", Setter::debye_units,
     [](SystemConfig& c, double v) { c.tls.dipole = v; }},
    {"tls.eps_r", Setter::number, [](SystemConfig& c, double v) { c.tls.eps_r = v; }},
    {"tls.t_exp_s", Setter::number, [](SystemConfig& c, double v) { c.tls.t_exp = v; }},
    {"tls.volume_m3", Setter::number_or_auto,
     [](SystemConfig& c, double v) { c.tls.volume = v; }},
    {"nonideal.phi40_volt", Setter::number,
     [](SystemConfig& c, double v) { c.nonideal.phi40 = v; }},
    {"nonideal.phi22_volt", Setter::number,
     [](SystemConfig& c, double v) { c.nonideal.phi22 = v; }},
    {"nonideal.phi04_volt", Setter::number,
     [](SystemConfig& c, double v) { c.nonideal.phi04 = v; }},
    {"nonideal.b20_tesla", Setter::number,
     [](SystemConfig& c, double v) { c.nonideal.b20 = v; }},
    {"nonideal.b02_tesla", Setter::number,
     [](SystemConfig& c, double v) { c.nonideal.b02 = v; }},
};

const Setter* find_setter(const std::string& path) {
    for (const auto& s : kSetters)
        if (path == s.path) return &s;
    return nullptr;
}

void apply_scalar(SystemConfig& cfg, const std::string& path, const std::string& value) {
    // boolean switches live under [budget]
    if (path == "budget.include_uncertain") {
        cfg.include_uncertain = parse_bool(value, path);
        return;
    }
    if (path == "budget.retune_antenna") {
        cfg.retune_antenna = parse_bool(value, path);
        return;
    }
    const Setter* s = find_setter(path);
    if (!s) throw ConfigError("unknown config key: " + path);
    double v = 0.0;
    switch (s->kind) {
        case Setter::number: v = parse_number(value, path); break;
        case Setter::number_or_auto: v = parse_auto(value, path); break;
        case Setter::hz_to_rad: v = rad_per_sec(parse_number(value, path)); break;
        case Setter::debye_units: v = parse_number(value, path) * debye; break;
        case Setter::boolean: break;  // handled above
    }
    s->apply(cfg, v);
}

ParamRange parse_param_range(const std::string& value, const std::string& path) {
    std::istringstream is(value);
    ParamRange r;
    std::string scale = "linear";
    if (!(is >> r.name >> r.lower >> r.upper))
        throw ConfigError(path + ": expected 'name lower upper [linear|log]', got '" +
                          value + "'");
    is >> scale;
    if (scale == "log")
        r.scale = ParamRange::Scale::log;
    else if (scale == "linear")
        r.scale = ParamRange::Scale::linear;
    else
        throw ConfigError(path + ": unknown scale '" + scale + "'");
    return r;
}

void apply_optimize_key(OptimizeSettings& opt, const std::string& key,
                        const std::string& value, const std::string& path) {
    if (key == "objective") {
        const std::string v = lower(value);
        if (v == "min_floor")
            opt.objective.kind = Objective::Kind::min_floor;
        else if (v == "band_min")
            opt.objective.kind = Objective::Kind::band_min;
        else
            throw ConfigError(path + ": unknown objective '" + value + "'");
    } else if (key == "band_lo_hz") {
        opt.objective.f_lo = parse_number(value, path);
    } else if (key == "band_hi_hz") {
        opt.objective.f_hi = parse_number(value, path);
    } else if (key == "budget_evals") {
        opt.budget_evals = static_cast<int>(parse_number(value, path));
    } else if (key == "param") {
        opt.space.entries.push_back(parse_param_range(value, path));
    } else {
        throw ConfigError("unknown config key: " + path);
    }
}

}  // namespace

LoadedConfig parse_ini(const std::string& text, const std::string& origin) {
    LoadedConfig out;
    std::istringstream is(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::size_t comment = line.find_first_of("#;");
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(origin + ": malformed section header at line " +
                                  std::to_string(lineno));
            section = lower(trim(line.substr(1, line.size() - 2)));
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ": expected key = value at line " +
                              std::to_string(lineno));
        const std::string key = lower(trim(line.substr(0, eq)));
        const std::string value = trim(line.substr(eq + 1));
        const std::string path = section.empty() ? key : section + "." + key;
        if (section == "optimize") {
            out.has_optimize = true;
            apply_optimize_key(out.optimize, key, value, path);
        } else {
            apply_scalar(out.system, path, value);
        }
    }
    return out;
}

LoadedConfig parse_json_config(const std::string& text, const std::string& origin) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(origin + ": JSON parse error: " + e.what());
    }
    if (!j.is_object()) throw ConfigError(origin + ": top level must be an object");

    LoadedConfig out;
    auto scalar_to_string = [&](const nlohmann::json& v, const std::string& path) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_boolean()) return std::string(v.get<bool>() ? "true" : "false");
        if (v.is_number()) return fmt(v.get<double>());
        throw ConfigError(path + ": unsupported JSON value type");
    };

    for (const auto& [section, body] : j.items()) {
        if (section == "optimize") {
            out.has_optimize = true;
            if (!body.is_object()) throw ConfigError("optimize: must be an object");
            for (const auto& [key, v] : body.items()) {
                if (key == "space") {
                    if (!v.is_array()) throw ConfigError("optimize.space: must be an array");
                    for (const auto& e : v) {
                        ParamRange r;
                        for (const auto& [k2, v2] : e.items()) {
                            if (k2 == "name")
                                r.name = v2.get<std::string>();
                            else if (k2 == "lower")
                                r.lower = v2.get<double>();
                            else if (k2 == "upper")
                                r.upper = v2.get<double>();
                            else if (k2 == "scale")
                                r.scale = v2.get<std::string>() == "log"
                                              ? ParamRange::Scale::log
                                              : ParamRange::Scale::linear;
                            else
                                throw ConfigError("unknown config key: optimize.space." + k2);
                        }
                        out.optimize.space.entries.push_back(r);
                    }
                } else {
                    apply_optimize_key(out.optimize, key, scalar_to_string(v, key),
                                       "optimize." + key);
                }
            }
            continue;
        }
        if (!body.is_object()) {
            apply_scalar(out.system, section, scalar_to_string(body, section));
            continue;
        }
        for (const auto& [key, v] : body.items()) {
            const std::string path = section + "." + key;
            apply_scalar(out.system, path, scalar_to_string(v, path));
        }
    }
    return out;
}

LoadedConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const bool json = path.size() > 5 && path.substr(path.size() - 5) == ".json";
    return json ? parse_json_config(text, path) : parse_ini(text, path);
}

namespace {
std::string auto_or(double v) { return v > 0.0 ? fmt(v) : "auto"; }
}  // namespace

std::string to_ini(const SystemConfig& c) {
    const double eps0 = PhysConstants::codata().eps0;
    std::ostringstream os;
    os << "[trap]\n"
       << "v0_volt = " << fmt(c.trap.v0) << "\n"
       << "b0_tesla = " << fmt(c.trap.b0) << "\n"
       << "z0_m = " << fmt(c.trap.z0) << "\n"
       << "rho0_m = " << auto_or(c.trap.rho0) << "\n"
       << "alpha_geom = " << fmt(c.trap.alpha_geom) << "\n"
       << "temperature_k = " << fmt(c.trap.t_trap) << "\n\n"
       << "[cavity]\n"
       << "f_k_hz = " << fmt(to_hz(c.cavity.omega_k)) << "\n"
       << "q_int = " << fmt(c.cavity.q_int) << "\n"
       << "q_ext = " << fmt(c.cavity.q_ext) << "\n"
       << "lx_m = " << fmt(c.cavity.lx) << "\n"
       << "ly_m = " << fmt(c.cavity.ly) << "\n"
       << "lz_m = " << fmt(c.cavity.lz) << "\n"
       << "f_drive_hz = " << fmt(to_hz(c.cavity.resolved_omega_in())) << "\n"
       << "theta_lo_rad = " << fmt(c.cavity.theta_lo) << "\n"
       << "temperature_k = " << fmt(c.cavity.t_cav) << "\n\n"
       << "[antenna]\n"
       << "length_m = " << auto_or(c.antenna.length) << "\n"
       << "width_m = " << fmt(c.antenna.width) << "\n"
       << "thickness_m = " << fmt(c.antenna.thickness) << "\n"
       << "resistivity_ohm_m = " << fmt(c.antenna.resistivity) << "\n\n"
       << "[electrode]\n"
       << "resistivity_ohm_m = " << fmt(c.electrode.resistivity) << "\n"
       << "t_metal_m = " << fmt(c.electrode.t_metal) << "\n"
       << "t_dielectric_m = " << fmt(c.electrode.t_dielectric) << "\n"
       << "eps_rel = " << fmt(c.electrode.resolved_eps(PhysConstants::codata()) / eps0)
       << "\n"
       << "loss_tangent = " << fmt(c.electrode.loss_tangent) << "\n"
       << "standoff_m = " << auto_or(c.electrode.standoff) << "\n\n"
       << "[magnet]\n"
       << "g_s = " << fmt(c.magnet.g_s) << "\n"
       << "v_uc_m3 = " << fmt(c.magnet.v_uc) << "\n"
       << "t_c_k = " << fmt(c.magnet.t_c) << "\n"
       << "alpha_lo_hz = " << fmt(to_hz(c.magnet.alpha_lo)) << "\n"
       << "alpha_hi_hz = " << fmt(to_hz(c.magnet.alpha_hi)) << "\n"
       << "temperature_k = " << fmt(c.magnet.t_mag) << "\n\n"
       << "[tls]\n"
       << "p0_j_m3 = " << fmt(c.tls.p0) << "\n"
       << "a_rate_k3 = " << fmt(c.tls.a_rate) << "\n"
       << "dipole_debye = " << fmt(c.tls.dipole / debye) << "\n"
       << "eps_r = " << fmt(c.tls.eps_r) << "\n"
       << "t_exp_s = " << fmt(c.tls.t_exp) << "\n"
       << "volume_m3 = " << auto_or(c.tls.volume) << "\n\n"
       << "[nonideal]\n"
       << "phi40_volt = " << fmt(c.nonideal.phi40) << "\n"
       << "phi22_volt = " << fmt(c.nonideal.phi22) << "\n"
       << "phi04_volt = " << fmt(c.nonideal.phi04) << "\n"
       << "b20_tesla = " << fmt(c.nonideal.b20) << "\n"
       << "b02_tesla = " << fmt(c.nonideal.b02) << "\n\n"
       << "[budget]\n"
       << "include_uncertain = " << (c.include_uncertain ? "true" : "false") << "\n"
       << "retune_antenna = " << (c.retune_antenna ? "true" : "false") << "\n";
    return os.str();
}

std::string to_json_string(const SystemConfig& c) {
    const double eps0 = PhysConstants::codata().eps0;
    nlohmann::json j;
    j["trap"] = {{"v0_volt", c.trap.v0},
                 {"b0_tesla", c.trap.b0},
                 {"z0_m", c.trap.z0},
                 {"rho0_m", c.trap.rho0 > 0.0 ? nlohmann::json(c.trap.rho0)
                                              : nlohmann::json("auto")},
                 {"alpha_geom", c.trap.alpha_geom},
                 {"temperature_k", c.trap.t_trap}};
    j["cavity"] = {{"f_k_hz", to_hz(c.cavity.omega_k)},
                   {"q_int", c.cavity.q_int},
                   {"q_ext", c.cavity.q_ext},
                   {"lx_m", c.cavity.lx},
                   {"ly_m", c.cavity.ly},
                   {"lz_m", c.cavity.lz},
                   {"f_drive_hz", to_hz(c.cavity.resolved_omega_in())},
                   {"theta_lo_rad", c.cavity.theta_lo},
                   {"temperature_k", c.cavity.t_cav}};
    j["antenna"] = {{"length_m", c.antenna.length > 0.0 ? nlohmann::json(c.antenna.length)
                                                        : nlohmann::json("auto")},
                    {"width_m", c.antenna.width},
                    {"thickness_m", c.antenna.thickness},
                    {"resistivity_ohm_m", c.antenna.resistivity}};
    j["electrode"] = {
        {"resistivity_ohm_m", c.electrode.resistivity},
        {"t_metal_m", c.electrode.t_metal},
        {"t_dielectric_m", c.electrode.t_dielectric},
        {"eps_rel", c.electrode.resolved_eps(PhysConstants::codata()) / eps0},
        {"loss_tangent", c.electrode.loss_tangent},
        {"standoff_m", c.electrode.standoff > 0.0 ? nlohmann::json(c.electrode.standoff)
                                                  : nlohmann::json("auto")}};
    j["magnet"] = {{"g_s", c.magnet.g_s},
                   {"v_uc_m3", c.magnet.v_uc},
                   {"t_c_k", c.magnet.t_c},
                   {"alpha_lo_hz", to_hz(c.magnet.alpha_lo)},
                   {"alpha_hi_hz", to_hz(c.magnet.alpha_hi)},
                   {"temperature_k", c.magnet.t_mag}};
    j["tls"] = {{"p0_j_m3", c.tls.p0},
                {"a_rate_k3", c.tls.a_rate},
                {"dipole_debye", c.tls.dipole / debye},
                {"eps_r", c.tls.eps_r},
                {"t_exp_s", c.tls.t_exp},
                {"volume_m3", c.tls.volume > 0.0 ? nlohmann::json(c.tls.volume)
                                                 : nlohmann::json("auto")}};
    j["nonideal"] = {{"phi40_volt", c.nonideal.phi40},
                     {"phi22_volt", c.nonideal.phi22},
                     {"phi04_volt", c.nonideal.phi04},
                     {"b20_tesla", c.nonideal.b20},
                     {"b02_tesla", c.nonideal.b02}};
    j["budget"] = {{"include_uncertain", c.include_uncertain},
                   {"retune_antenna", c.retune_antenna}};
    return j.dump(2) + "\n";
}

namespace {
double signed_sqrt(double v) {
    return v >= 0.0 ? std::sqrt(v) : -std::sqrt(-v);
}
}  // namespace

std::string budget_csv(const NoiseBudget& b) {
    std::ostringstream os;
    os << "frequency_hz,total,int,ba,imp,cross2re,read_add,johnson,dielectric,"
          "barkhausen_lo,barkhausen_hi,tls,sql\n";
    const auto channels = b.channel_view();
    for (std::size_t i = 0; i < b.grid.points_hz.size(); ++i) {
        os << fmt(b.grid.points_hz[i]);
        for (const auto& ch : channels) os << "," << fmt(signed_sqrt(ch.values[i]));
        os << "\n";
    }
    return os.str();
}

namespace {
nlohmann::json meta_json(const NoiseBudget& b) {
    const DampingBreakdown& d = b.design.damping;
    return nlohmann::json{
        {"f_z_hz", to_hz(b.design.modes.omega_z)},
        {"f_c_hz", to_hz(b.design.modes.omega_c)},
        {"f_plus_hz", to_hz(b.design.modes.omega_plus)},
        {"f_minus_hz", to_hz(b.design.modes.omega_minus)},
        {"f_z_eff_hz", b.design.f_z_eff_hz},
        {"z_zp_m", b.design.modes.z_zp},
        {"stable", b.design.modes.stable},
        {"g_hz_per_m", b.design.g},
        {"kappa_rad_s", b.config.cavity.kappa()},
        {"kappa_in_rad_s", b.config.cavity.kappa_in()},
        {"kappa_add_rad_s", b.config.cavity.kappa_add()},
        {"antenna_length_m", b.design.antenna_length},
        {"tls_volume_m3", b.design.tls_volume},
        {"standoff_m", b.design.standoff},
        {"gamma_larmor_rad_s", d.gamma_larmor},
        {"gamma_antenna_rad_s", d.gamma_antenna},
        {"gamma_ba_rad_s", d.gamma_ba},
        {"gamma_dephase_rad_s", d.gamma_dephase},
        {"gamma_eff_rad_s", d.gamma_eff},
        {"includes_uncertain", b.includes_uncertain},
    };
}
}  // namespace

std::string budget_json(const NoiseBudget& b) {
    nlohmann::json j;
    j["meta"] = meta_json(b);
    j["config"] = nlohmann::json::parse(to_json_string(b.config));
    j["units"] = "N/sqrt(Hz), signed sqrt for cross2re";
    j["frequency_hz"] = b.grid.points_hz;
    nlohmann::json ch;
    for (const auto& c : b.channel_view()) {
        std::vector<double> amp(c.values.size());
        for (std::size_t i = 0; i < c.values.size(); ++i) amp[i] = signed_sqrt(c.values[i]);
        ch[c.name] = amp;
    }
    j["channels"] = ch;
    return j.dump(2) + "\n";
}

std::string envelope_csv(const BroadbandEnvelope& e) {
    std::ostringstream os;
    os << "frequency_hz,envelope\n";
    for (std::size_t i = 0; i < e.grid.points_hz.size(); ++i)
        os << fmt(e.grid.points_hz[i]) << "," << fmt(signed_sqrt(e.envelope[i])) << "\n";
    os << "\nvoltage_v,f_min_hz,amp_min\n";
    for (std::size_t i = 0; i < e.voltages.size(); ++i)
        os << fmt(e.voltages[i]) << "," << fmt(e.minima[i].f_min_hz) << ","
           << fmt(e.minima[i].amp_min) << "\n";
    for (const auto& [v, why] : e.skipped)
        os << "# skipped " << fmt(v) << " V: " << why << "\n";
    return os.str();
}

std::string envelope_json(const BroadbandEnvelope& e) {
    nlohmann::json j;
    j["frequency_hz"] = e.grid.points_hz;
    std::vector<double> amp(e.envelope.size());
    for (std::size_t i = 0; i < e.envelope.size(); ++i) amp[i] = signed_sqrt(e.envelope[i]);
    j["envelope"] = amp;
    nlohmann::json minima = nlohmann::json::array();
    for (std::size_t i = 0; i < e.voltages.size(); ++i)
        minima.push_back({{"voltage_v", e.voltages[i]},
                          {"f_min_hz", e.minima[i].f_min_hz},
                          {"amp_min", e.minima[i].amp_min}});
    j["minima"] = minima;
    nlohmann::json skipped = nlohmann::json::array();
    for (const auto& [v, why] : e.skipped)
        skipped.push_back({{"voltage_v", v}, {"reason", why}});
    j["skipped"] = skipped;
    return j.dump(2) + "\n";
}

std::string sensitivity_csv(const std::vector<SensitivityRow>& rows) {
    std::ostringstream os;
    os << "param,value,floor\n";
    for (const auto& r : rows)
        os << r.param << "," << fmt(r.value) << "," << fmt(r.floor) << "\n";
    return os.str();
}

std::string opt_result_json(const OptResult& result, const Objective& objective) {
    nlohmann::json j;
    j["objective"] =
        objective.kind == Objective::Kind::min_floor ? "min_floor" : "band_min";
    if (objective.kind == Objective::Kind::band_min) {
        j["band_lo_hz"] = objective.f_lo;
        j["band_hi_hz"] = objective.f_hi;
    }
    j["best_objective"] = result.best_objective;
    j["evaluations"] = result.evaluations;
    j["best_config"] = nlohmann::json::parse(to_json_string(result.best_config));
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& [i, v] : result.trace) trace.push_back({{"eval", i}, {"objective", v}});
    j["trace"] = trace;
    return j.dump(2) + "\n";
}

std::string params_report(const SystemConfig& config, const DesignPoint& d) {
    std::ostringstream os;
    os << "f_z_hz                = " << fmt(to_hz(d.modes.omega_z)) << "\n"
       << "f_c_hz                = " << fmt(to_hz(d.modes.omega_c)) << "\n"
       << "f_plus_hz             = " << fmt(to_hz(d.modes.omega_plus)) << "\n"
       << "f_minus_hz            = " << fmt(to_hz(d.modes.omega_minus)) << "\n"
       << "f_z_eff_hz            = " << fmt(d.f_z_eff_hz) << "\n"
       << "z_zp_m                = " << fmt(d.modes.z_zp) << "\n"
       << "d_m                   = " << fmt(config.trap.d()) << "\n"
       << "antenna_length_m      = " << fmt(d.antenna_length) << "\n"
       << "tls_volume_m3         = " << fmt(d.tls_volume) << "\n"
       << "standoff_m            = " << fmt(d.standoff) << "\n"
       << "g_hz_per_m            = " << fmt(d.g) << "\n"
       << "kappa_rad_s           = " << fmt(config.cavity.kappa()) << "\n"
       << "kappa_in_rad_s        = " << fmt(config.cavity.kappa_in()) << "\n"
       << "kappa_add_rad_s       = " << fmt(config.cavity.kappa_add()) << "\n"
       << "q_loaded              = " << fmt(config.cavity.q_loaded()) << "\n"
       << "gamma_larmor_rad_s    = " << fmt(d.damping.gamma_larmor) << "\n"
       << "gamma_antenna_rad_s   = " << fmt(d.damping.gamma_antenna) << "\n"
       << "gamma_ba_rad_s        = " << fmt(d.damping.gamma_ba) << "\n"
       << "gamma_dephase_rad_s   = " << fmt(d.damping.gamma_dephase) << "\n"
       << "gamma_eff_rad_s       = " << fmt(d.damping.gamma_eff) << "\n";
    return os.str();
}

}  // namespace eforce
