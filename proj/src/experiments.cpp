#include "aerolink/experiments.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace aerolink::experiments {

namespace pt = boost::property_tree;
using relaying::Fig2Config;
using relaying::Method;

namespace {

std::string format_shortest(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string format_probability(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 8);
    return std::string(buf, res.ptr);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const char* expected) {
    throw std::invalid_argument("config key '" + key + "': expected " + expected + ", got '" + value + "'");
}

double parse_double(const std::string& key, const std::string& text) {
    double x = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (first != last && *first == '+') ++first;
    const auto res = std::from_chars(first, last, x);
    if (res.ec != std::errc{} || res.ptr != last) bad_value(key, text, "a number");
    return x;
}

template <class Int>
Int parse_int(const std::string& key, const std::string& text) {
    Int x{};
    int base = 10;
    const char* first = text.data();
    const char* last = first + text.size();
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        base = 16;
        first += 2;
    }
    const auto res = std::from_chars(first, last, x, base);
    if (res.ec != std::errc{} || res.ptr != last) bad_value(key, text, "an integer");
    return x;
}

bool parse_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    bad_value(key, text, "true/false");
}

std::string join_configs(const std::vector<Fig2Config>& configs) {
    std::string out;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        if (i) out += ',';
        out += relaying::preset_id(configs[i]);
    }
    return out;
}

std::vector<Fig2Config> parse_configs(const std::string& key, const std::string& text) {
    std::vector<Fig2Config> configs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) bad_value(key, text, "a comma-separated preset list");
        const auto id = item.substr(b, e - b + 1);
        const auto which = relaying::parse_preset_id(id);
        if (!which) bad_value(key, id, "one of fig2a, fig2b, fig2c, fig2d");
        configs.push_back(*which);
    }
    return configs;
}

using Setter = std::function<void(ConfigFile&, const std::string& key, const std::string& value)>;

// Key tables per section. Values are applied in file order, then checked as a whole.
const std::map<std::string, std::map<std::string, Setter>>& schema() {
    static const std::map<std::string, std::map<std::string, Setter>> table = [] {
        std::map<std::string, std::map<std::string, Setter>> t;
        auto num = [](double ScenarioConfig::*field) -> Setter {
            return [field](ConfigFile& c, const std::string& k, const std::string& v) {
                c.scenario.*field = parse_double(k, v);
            };
        };
        t["link"] = {
            {"wavelength_nm", num(&ScenarioConfig::wavelength_nm)},
            {"threshold_db", num(&ScenarioConfig::threshold_db)},
            {"nakagami_m",
             [](ConfigFile& c, const std::string& k, const std::string& v) {
                 c.scenario.nakagami_m = parse_int<int>(k, v);
             }},
            {"oe_ratio", num(&ScenarioConfig::oe_ratio)},
            {"interference_db", num(&ScenarioConfig::interference_db)},
            {"interference_gain", num(&ScenarioConfig::interference_gain)},
            {"horizontal_m", num(&ScenarioConfig::horizontal_m)},
            {"urn_altitude_m", num(&ScenarioConfig::urn_altitude_m)},
            {"haps_altitude_m", num(&ScenarioConfig::haps_altitude_m)},
            {"carrier_hz", num(&ScenarioConfig::carrier_hz)},
            {"pl_exponent", num(&ScenarioConfig::pl_exponent)},
            {"tx_power_dbm", num(&ScenarioConfig::tx_power_dbm)},
            {"noise_power_dbm", num(&ScenarioConfig::noise_power_dbm)},
        };
        t["atmosphere"] = {
            {"attenuation",
             [](ConfigFile& c, const std::string& k, const std::string& v) {
                 if (auto label = atmosphere::parse_fog_label(v)) {
                     c.scenario.attenuation = *label;
                 } else {
                     c.scenario.attenuation = links::AttenuationDbPerKm{parse_double(k, v)};
                 }
             }},
            {"visibility_km",
             [](ConfigFile& c, const std::string& k, const std::string& v) {
                 c.scenario.attenuation = links::Visibility{parse_double(k, v)};
             }},
            {"wind_speed_mps", num(&ScenarioConfig::wind_speed_mps)},
            {"ground_cn2", num(&ScenarioConfig::ground_cn2)},
        };
        auto ew_field = [](double fading::EwParams::*field) -> Setter {
            return [field](ConfigFile& c, const std::string& k, const std::string& v) {
                if (!c.scenario.ew) c.scenario.ew = fading::EwParams{};
                (*c.scenario.ew).*field = parse_double(k, v);
            };
        };
        t["turbulence"] = {
            {"ew",
             [](ConfigFile& c, const std::string& k, const std::string& v) {
                 if (v == "derived") {
                     c.scenario.ew.reset();
                 } else if (v == "explicit") {
                     if (!c.scenario.ew) c.scenario.ew = fading::EwParams{};
                 } else {
                     bad_value(k, v, "derived or explicit");
                 }
             }},
            {"ew_alpha", ew_field(&fading::EwParams::alpha)},
            {"ew_beta", ew_field(&fading::EwParams::beta)},
            {"ew_eta", ew_field(&fading::EwParams::eta)},
        };
        t["relaying"] = {
            {"parallel_branches",
             [](ConfigFile& c, const std::string& k, const std::string& v) {
                 c.scenario.parallel_branches = parse_int<int>(k, v);
             }},
            {"mean_snr_mode",
             [](ConfigFile& c, const std::string& k, const std::string& v) {
                 if (v == "equal") c.scenario.mean_snr_mode = MeanSnrMode::Equal;
                 else if (v == "physical") c.scenario.mean_snr_mode = MeanSnrMode::Physical;
                 else bad_value(k, v, "equal or physical");
             }},
            {"hybrid_atg",
             [](ConfigFile& c, const std::string& k, const std::string& v) {
                 c.scenario.hybrid_atg = parse_bool(k, v);
             }},
        };
        t["montecarlo"] = {
            {"samples",
             [](ConfigFile& c, const std::string& k, const std::string& v) {
                 c.mc.samples = parse_int<std::uint64_t>(k, v);
             }},
            {"seed",
             [](ConfigFile& c, const std::string& k, const std::string& v) {
                 c.mc.master_seed = parse_int<std::uint64_t>(k, v);
                 c.mc_seed_set = true;
             }},
            {"batch_size",
             [](ConfigFile& c, const std::string& k, const std::string& v) {
                 c.mc.batch_size = parse_int<std::uint64_t>(k, v);
             }},
            {"threads",
             [](ConfigFile& c, const std::string& k, const std::string& v) {
                 c.mc.threads = parse_int<unsigned>(k, v);
             }},
        };
        auto sweep = [](ConfigFile& c) -> SweepSpec& {
            if (!c.sweep) c.sweep = SweepSpec{};
            return *c.sweep;
        };
        t["sweep"] = {
            {"variable",
             [sweep](ConfigFile& c, const std::string& k, const std::string& v) {
                 const auto var = parse_sweep_variable(v);
                 if (!var) bad_value(k, v, "horizontal_m, urn_altitude_m, interference_db or threshold_db");
                 sweep(c).variable = *var;
             }},
            {"start",
             [sweep](ConfigFile& c, const std::string& k, const std::string& v) {
                 sweep(c).start = parse_double(k, v);
             }},
            {"stop",
             [sweep](ConfigFile& c, const std::string& k, const std::string& v) {
                 sweep(c).stop = parse_double(k, v);
             }},
            {"steps",
             [sweep](ConfigFile& c, const std::string& k, const std::string& v) {
                 sweep(c).steps = parse_int<int>(k, v);
             }},
            {"configs",
             [sweep](ConfigFile& c, const std::string& k, const std::string& v) {
                 sweep(c).configs = parse_configs(k, v);
             }},
            {"method",
             [sweep](ConfigFile& c, const std::string& k, const std::string& v) {
                 const auto m = parse_sweep_method(v);
                 if (!m) bad_value(k, v, "analytical, montecarlo or both");
                 sweep(c).method = *m;
             }},
        };
        return t;
    }();
    return table;
}

}  // namespace

std::string_view to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::HorizontalM: return "horizontal_m";
        case SweepVariable::UrnAltitudeM: return "urn_altitude_m";
        case SweepVariable::InterferenceDb: return "interference_db";
        case SweepVariable::ThresholdDb: return "threshold_db";
    }
    return "";
}

std::string_view to_string(SweepMethod m) {
    switch (m) {
        case SweepMethod::Analytical: return "analytical";
        case SweepMethod::MonteCarlo: return "montecarlo";
        case SweepMethod::Both: return "both";
    }
    return "";
}

std::optional<SweepVariable> parse_sweep_variable(std::string_view text) {
    for (auto v : {SweepVariable::HorizontalM, SweepVariable::UrnAltitudeM, SweepVariable::InterferenceDb,
                   SweepVariable::ThresholdDb}) {
        if (to_string(v) == text) return v;
    }
    return std::nullopt;
}

std::optional<SweepMethod> parse_sweep_method(std::string_view text) {
    for (auto m : {SweepMethod::Analytical, SweepMethod::MonteCarlo, SweepMethod::Both}) {
        if (to_string(m) == text) return m;
    }
    return std::nullopt;
}

void validate(const SweepSpec& sweep) {
    if (!(std::isfinite(sweep.start) && std::isfinite(sweep.stop) && sweep.start < sweep.stop)) {
        throw std::invalid_argument("sweep range needs finite start < stop");
    }
    if (sweep.steps < 2) {
        throw std::invalid_argument("sweep needs at least 2 steps");
    }
    if (sweep.configs.empty()) {
        throw std::invalid_argument("sweep needs at least one preset");
    }
}

std::vector<double> sweep_values(const SweepSpec& sweep) {
    validate(sweep);
    std::vector<double> values(static_cast<std::size_t>(sweep.steps));
    const double span = sweep.stop - sweep.start;
    for (int i = 0; i < sweep.steps; ++i) {
        values[static_cast<std::size_t>(i)] = sweep.start + span * i / (sweep.steps - 1);
    }
    values.back() = sweep.stop;
    return values;
}

ScenarioConfig apply(ScenarioConfig scenario, SweepVariable variable, double value) {
    switch (variable) {
        case SweepVariable::HorizontalM: scenario.horizontal_m = value; break;
        case SweepVariable::UrnAltitudeM: scenario.urn_altitude_m = value; break;
        case SweepVariable::InterferenceDb: scenario.interference_db = value; break;
        case SweepVariable::ThresholdDb: scenario.threshold_db = value; break;
    }
    return scenario;
}

ResultTable run_sweep(const ScenarioConfig& scenario, const SweepSpec& sweep, const mc::McConfig& mc) {
    validate(sweep);
    const bool want_mc = sweep.method != SweepMethod::Analytical;
    const bool want_analytical = sweep.method != SweepMethod::MonteCarlo;
    if (want_mc) {
        mc::validate(mc);
    }

    const auto values = sweep_values(sweep);
    std::vector<ScenarioConfig> points;
    points.reserve(values.size());
    for (double v : values) {
        points.push_back(apply(scenario, sweep.variable, v));
        validate(points.back());
    }

    ResultTable table;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t c = 0; c < sweep.configs.size(); ++c) {
            const auto which = sweep.configs[c];
            const auto topology = relaying::build_fig2_config(which, points[i]);
            if (want_analytical) {
                const auto est = relaying::outage_analytical(topology);
                table.push_back({sweep.variable, values[i], which, Method::Analytical, est.p_out, 0.0, 0});
            }
            if (want_mc) {
                auto cfg = mc;
                cfg.point_index = i * sweep.configs.size() + c;
                const auto est = mc::mc_outage(topology, cfg);
                table.push_back({sweep.variable, values[i], which, Method::MonteCarlo, est.p_out,
                                 est.ci95_halfwidth, est.samples});
            }
        }
    }
    return table;
}

std::string format_csv(const ResultTable& table) {
    std::string out(csv_header);
    out += '\n';
    for (const auto& row : table) {
        out += to_string(row.variable);
        out += ',';
        out += format_shortest(row.value);
        out += ',';
        out += relaying::preset_id(row.config);
        out += ',';
        out += relaying::to_string(row.method);
        out += ',';
        out += format_probability(row.p_out);
        out += ',';
        out += format_probability(row.ci95);
        out += ',';
        out += std::to_string(row.samples);
        out += '\n';
    }
    return out;
}

void emit_csv(const ResultTable& table, const std::filesystem::path& destination) {
    if (table.empty()) {
        throw std::invalid_argument("refusing to write an empty result table to " + destination.string());
    }
    const std::string text = format_csv(table);
    auto tmp = destination;
    tmp += ".partial";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + destination.string());
        }
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("cannot write " + destination.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, destination, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error("cannot write " + destination.string() + ": " + ec.message());
    }
}

ConfigFile parse_config(std::istream& in) {
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw std::invalid_argument(std::string("malformed config: ") + e.message() + " (line " +
                                    std::to_string(e.line()) + ")");
    }

    ConfigFile config;
    const auto& sections = schema();
    for (const auto& [section_name, section] : tree) {
        const auto known = sections.find(section_name);
        if (known == sections.end()) {
            throw std::invalid_argument("unknown config section [" + section_name + "]");
        }
        if (section.empty() && !section.data().empty()) {
            throw std::invalid_argument("config key '" + section_name + "' outside any section");
        }
        std::set<std::string> attenuation_keys;
        for (const auto& [key, value] : section) {
            const auto setter = known->second.find(key);
            if (setter == known->second.end()) {
                throw std::invalid_argument("unknown config key '" + key + "' in [" + section_name + "]");
            }
            if (key == "attenuation" || key == "visibility_km") attenuation_keys.insert(key);
            setter->second(config, key, value.data());
        }
        if (attenuation_keys.size() > 1) {
            throw std::invalid_argument("[atmosphere] takes exactly one of attenuation or visibility_km");
        }
    }
    if (const auto t = tree.get_child_optional("turbulence")) {
        const bool any_explicit = t->count("ew_alpha") + t->count("ew_beta") + t->count("ew_eta") > 0;
        if (any_explicit && t->get_optional<std::string>("ew") == std::string("derived")) {
            throw std::invalid_argument("ew = derived conflicts with explicit ew_* keys");
        }
    }
    if (config.scenario.ew) {
        const auto t = tree.get_child_optional("turbulence");
        for (const char* key : {"ew_alpha", "ew_beta", "ew_eta"}) {
            if (!t || !t->get_child_optional(key)) {
                throw std::invalid_argument(std::string("explicit EW parameters need ") + key);
            }
        }
    }

    validate(config.scenario);
    if (config.sweep) validate(*config.sweep);
    try {
        mc::validate(config.mc);
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(std::string("[montecarlo]: ") + e.what());
    }
    return config;
}

ConfigFile parse_config_text(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

ConfigFile load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read config " + path.string());
    }
    return parse_config(in);
}

std::string serialize_config(const ConfigFile& config) {
    const auto& s = config.scenario;
    std::ostringstream out;
    const auto kv = [&](const char* key, const std::string& value) { out << key << " = " << value << '\n'; };
    const auto num = [&](const char* key, double value) { kv(key, format_shortest(value)); };

    out << "[link]\n";
    num("wavelength_nm", s.wavelength_nm);
    num("threshold_db", s.threshold_db);
    kv("nakagami_m", std::to_string(s.nakagami_m));
    num("oe_ratio", s.oe_ratio);
    num("interference_db", s.interference_db);
    num("interference_gain", s.interference_gain);
    num("horizontal_m", s.horizontal_m);
    num("urn_altitude_m", s.urn_altitude_m);
    num("haps_altitude_m", s.haps_altitude_m);
    num("carrier_hz", s.carrier_hz);
    num("pl_exponent", s.pl_exponent);
    num("tx_power_dbm", s.tx_power_dbm);
    num("noise_power_dbm", s.noise_power_dbm);

    out << "\n[atmosphere]\n";
    if (const auto* label = std::get_if<atmosphere::FogLabel>(&s.attenuation)) {
        kv("attenuation", std::string(atmosphere::to_string(*label)));
    } else if (const auto* a = std::get_if<links::AttenuationDbPerKm>(&s.attenuation)) {
        num("attenuation", a->value);
    } else {
        num("visibility_km", std::get<links::Visibility>(s.attenuation).km);
    }
    num("wind_speed_mps", s.wind_speed_mps);
    num("ground_cn2", s.ground_cn2);

    out << "\n[turbulence]\n";
    if (s.ew) {
        kv("ew", "explicit");
        num("ew_alpha", s.ew->alpha);
        num("ew_beta", s.ew->beta);
        num("ew_eta", s.ew->eta);
    } else {
        kv("ew", "derived");
    }

    out << "\n[relaying]\n";
    kv("parallel_branches", std::to_string(s.parallel_branches));
    kv("mean_snr_mode", s.mean_snr_mode == MeanSnrMode::Equal ? "equal" : "physical");
    kv("hybrid_atg", s.hybrid_atg ? "true" : "false");

    out << "\n[montecarlo]\n";
    kv("samples", std::to_string(config.mc.samples));
    if (config.mc_seed_set) kv("seed", std::to_string(config.mc.master_seed));
    kv("batch_size", std::to_string(config.mc.batch_size));
    kv("threads", std::to_string(config.mc.threads));

    if (config.sweep) {
        const auto& w = *config.sweep;
        out << "\n[sweep]\n";
        kv("variable", std::string(to_string(w.variable)));
        num("start", w.start);
        num("stop", w.stop);
        kv("steps", std::to_string(w.steps));
        kv("configs", join_configs(w.configs));
        kv("method", std::string(to_string(w.method)));
    }
    return out.str();
}

}  // namespace aerolink::experiments
