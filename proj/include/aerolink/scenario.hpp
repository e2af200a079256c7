#ifndef AEROLINK_SCENARIO_HPP
#define AEROLINK_SCENARIO_HPP

#include <optional>

#include "aerolink/fading.hpp"
#include "aerolink/links.hpp"

namespace aerolink {

enum class MeanSnrMode {
    Equal,     // every hop inherits the ground-to-air budget P_s / (P_n V(r))
    Physical,  // each hop keeps its own link budget
};

/// Scenario parameters. Defaults are the reference evaluation setup (1550 nm,
/// 3 dB threshold, m = 4, d = 2.5 km, URN at 200 m, HAPS at 19 km, 2 GHz,
/// 4.5859 dB/km, 21 m/s wind, 32 dBm / -100 dBm).
struct ScenarioConfig {
    double wavelength_nm = 1550.0;
    double threshold_db = 3.0;
    int nakagami_m = 4;
    double oe_ratio = 1.0;
    double interference_db = 5.0;
    double interference_gain = 1.0;
    double horizontal_m = 2500.0;
    double urn_altitude_m = 200.0;
    double haps_altitude_m = 19'000.0;
    double carrier_hz = 2e9;
    double pl_exponent = 2.32;
    double tx_power_dbm = 32.0;
    double noise_power_dbm = -100.0;

    links::AttenuationSource attenuation = links::AttenuationDbPerKm{4.5859};
    double wind_speed_mps = 21.0;
    double ground_cn2 = 1.7e-14;

    /// Fixed EW parameters for every FSO hop; nullopt derives them per hop from
    /// the HV -> Rytov -> fit chain.
    std::optional<fading::EwParams> ew;

    int parallel_branches = 2;
    MeanSnrMode mean_snr_mode = MeanSnrMode::Equal;
    bool hybrid_atg = false;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Throws std::invalid_argument listing every offending field.
void validate(const ScenarioConfig& scenario);

}  // namespace aerolink

#endif  // AEROLINK_SCENARIO_HPP
