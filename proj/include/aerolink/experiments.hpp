#ifndef AEROLINK_EXPERIMENTS_HPP
#define AEROLINK_EXPERIMENTS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aerolink/montecarlo.hpp"
#include "aerolink/presets.hpp"
#include "aerolink/scenario.hpp"

namespace aerolink::experiments {

enum class SweepVariable { HorizontalM, UrnAltitudeM, InterferenceDb, ThresholdDb };
enum class SweepMethod { Analytical, MonteCarlo, Both };

std::string_view to_string(SweepVariable v);
std::string_view to_string(SweepMethod m);
std::optional<SweepVariable> parse_sweep_variable(std::string_view text);
std::optional<SweepMethod> parse_sweep_method(std::string_view text);

struct SweepSpec {
    SweepVariable variable = SweepVariable::HorizontalM;
    double start = 1500.0;
    double stop = 3500.0;
    int steps = 21;
    std::vector<relaying::Fig2Config> configs{relaying::all_fig2_configs.begin(),
                                              relaying::all_fig2_configs.end()};
    SweepMethod method = SweepMethod::Analytical;

    friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

void validate(const SweepSpec& sweep);

/// Evenly spaced sweep values, endpoints included.
std::vector<double> sweep_values(const SweepSpec& sweep);

/// Scenario with the swept variable set to `value`.
ScenarioConfig apply(ScenarioConfig scenario, SweepVariable variable, double value);

struct ResultRow {
    SweepVariable variable;
    double value;
    relaying::Fig2Config config;
    relaying::Method method;
    double p_out;
    double ci95;
    std::uint64_t samples;

    friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

using ResultTable = std::vector<ResultRow>;

/// One row per (value x config x method), ordered value-major, then config in
/// sweep order, analytical before Monte Carlo. Everything is validated before
/// the first point is computed.
ResultTable run_sweep(const ScenarioConfig& scenario, const SweepSpec& sweep, const mc::McConfig& mc);

inline constexpr std::string_view csv_header = "variable,value,config,method,p_out,ci95,samples";

/// CSV text; locale-independent, probabilities as 9-significant-digit scientific.
std::string format_csv(const ResultTable& table);

/// Writes the CSV atomically (temporary file + rename). Throws std::invalid_argument
/// on an empty table and std::runtime_error naming the path when it cannot write.
void emit_csv(const ResultTable& table, const std::filesystem::path& destination);

/// Parsed configuration file: scenario plus optional Monte Carlo and sweep sections.
struct ConfigFile {
    ScenarioConfig scenario;
    mc::McConfig mc;
    bool mc_seed_set = false;
    std::optional<SweepSpec> sweep;

    friend bool operator==(const ConfigFile&, const ConfigFile&) = default;
};

/// INI-style text: [link], [atmosphere], [turbulence], [relaying], [montecarlo],
/// [sweep] sections of snake_case key = value pairs. Unknown sections or keys are
/// errors (std::invalid_argument).
ConfigFile parse_config(std::istream& in);
ConfigFile parse_config_text(const std::string& text);
ConfigFile load_config(const std::filesystem::path& path);

std::string serialize_config(const ConfigFile& config);

}  // namespace aerolink::experiments

#endif  // AEROLINK_EXPERIMENTS_HPP
