#include "aerolink/presets.hpp"

#include <cmath>

#include "aerolink/units.hpp"

namespace aerolink::relaying {

namespace {

links::FsoLinkSpec fso_spec(const ScenarioConfig& s, double length_m, double turbulence_altitude_m) {
    links::FsoLinkSpec spec;
    spec.tx_power_dbm = s.tx_power_dbm;
    spec.noise_power_dbm = s.noise_power_dbm;
    spec.length_m = length_m;
    spec.wavelength_m = s.wavelength_nm * 1e-9;
    spec.oe_ratio = s.oe_ratio;
    spec.attenuation = s.attenuation;
    if (s.ew) {
        spec.ew = *s.ew;
    } else {
        links::DerivedTurbulence derived;
        derived.altitude_m = turbulence_altitude_m;
        derived.profile = {s.wind_speed_mps, s.ground_cn2, s.wavelength_nm * 1e-9};
        spec.ew = derived;
    }
    return spec;
}

links::RfLinkSpec backup_rf_spec(const ScenarioConfig& s, double altitude_m) {
    auto spec = gta_spec(s, CrMode::Overlay);
    spec.altitude_m = altitude_m;
    spec.primary_interference_db = 0.0;
    spec.interference_channel_gain = 1.0;
    return spec;
}

// Air-to-ground hop from an aerial node at `altitude_m`: plain FSO, or FSO with an
// RF backup when hybrid mode is on.
HopCdf atg_hop(const ScenarioConfig& s, double altitude_m) {
    const auto fso = fso_spec(s, std::hypot(s.horizontal_m, altitude_m), altitude_m);
    if (s.hybrid_atg) {
        return links::hybrid_atg_cdf(fso, backup_rf_spec(s, altitude_m));
    }
    return links::fso_link_cdf(fso);
}

HopCdf urn_ata_hop(const ScenarioConfig& s) {
    return links::fso_link_cdf(fso_spec(s, s.horizontal_m, s.urn_altitude_m));
}

HopCdf haps_uplink_hop(const ScenarioConfig& s) {
    const double length = std::hypot(s.horizontal_m, s.haps_altitude_m - s.urn_altitude_m);
    return links::fso_link_cdf(fso_spec(s, length, s.haps_altitude_m));
}

}  // namespace

std::string_view preset_id(Fig2Config which) {
    switch (which) {
        case Fig2Config::A: return "fig2a";
        case Fig2Config::B: return "fig2b";
        case Fig2Config::C: return "fig2c";
        case Fig2Config::D: return "fig2d";
    }
    return "";
}

std::optional<Fig2Config> parse_preset_id(std::string_view id) {
    for (auto which : all_fig2_configs) {
        if (preset_id(which) == id) {
            return which;
        }
    }
    return std::nullopt;
}

CrMode cr_mode_of(Fig2Config which) {
    return (which == Fig2Config::A || which == Fig2Config::B) ? CrMode::Overlay : CrMode::Underlay;
}

bool is_parallel(Fig2Config which) { return which == Fig2Config::A || which == Fig2Config::C; }

links::RfLinkSpec gta_spec(const ScenarioConfig& s, CrMode mode) {
    links::RfLinkSpec spec;
    spec.tx_power_dbm = s.tx_power_dbm;
    spec.noise_power_dbm = s.noise_power_dbm;
    spec.carrier_hz = s.carrier_hz;
    spec.pl_exponent = s.pl_exponent;
    spec.horizontal_m = s.horizontal_m;
    spec.altitude_m = s.urn_altitude_m;
    spec.nakagami_m = s.nakagami_m;
    spec.cr_mode = mode;
    if (mode == CrMode::Underlay) {
        spec.interference_channel_gain = s.interference_gain;
        spec.primary_interference_db = s.interference_db;
    }
    return spec;
}

double common_mean_snr(const ScenarioConfig& s) { return links::gta_mean_snr(gta_spec(s, CrMode::Overlay)); }

LabeledTopology build_fig2_labeled(Fig2Config which, const ScenarioConfig& s) {
    validate(s);
    const CrMode mode = cr_mode_of(which);

    LabeledTopology out;
    out.topology.cr_mode = mode;
    out.topology.threshold_db = s.threshold_db;

    const bool equal = s.mean_snr_mode == MeanSnrMode::Equal;
    const double common = common_mean_snr(s);
    const auto fso_hop = [&](HopCdf hop) { return equal ? links::with_mean(hop, common) : hop; };

    LabeledHop gta{"gta", links::gta_link_cdf(gta_spec(s, mode))};

    if (!is_parallel(which)) {
        LabeledHop ata{"urn-ata", fso_hop(urn_ata_hop(s))};
        LabeledHop atg{"urn-atg", fso_hop(atg_hop(s, s.urn_altitude_m))};
        out.topology.scheme = SerialScheme{{gta.cdf, ata.cdf, atg.cdf}};
        out.hops = {gta, ata, atg};
        return out;
    }

    ParallelScheme parallel;
    parallel.prefix.push_back(gta.cdf);
    out.hops.push_back(gta);
    for (int k = 0; k < s.parallel_branches; ++k) {
        const auto tag = std::to_string(k + 1);
        LabeledHop first, second;
        if (k % 2 == 0) {
            first = {"urn-ata-" + tag, fso_hop(urn_ata_hop(s))};
            second = {"urn-atg-" + tag, fso_hop(atg_hop(s, s.urn_altitude_m))};
        } else {
            first = {"haps-ata-" + tag, fso_hop(haps_uplink_hop(s))};
            second = {"haps-atg-" + tag, fso_hop(atg_hop(s, s.haps_altitude_m))};
        }
        parallel.branches.push_back({first.cdf, second.cdf});
        out.hops.push_back(std::move(first));
        out.hops.push_back(std::move(second));
    }
    out.topology.scheme = std::move(parallel);
    return out;
}

TopologySpec build_fig2_config(Fig2Config which, const ScenarioConfig& scenario) {
    return build_fig2_labeled(which, scenario).topology;
}

}  // namespace aerolink::relaying
