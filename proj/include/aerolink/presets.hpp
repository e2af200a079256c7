#ifndef AEROLINK_PRESETS_HPP
#define AEROLINK_PRESETS_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aerolink/relaying.hpp"
#include "aerolink/scenario.hpp"

namespace aerolink::relaying {

/// The four reference configurations:
///   fig2a overlay parallel, fig2b overlay serial,
///   fig2c underlay parallel, fig2d underlay serial.
enum class Fig2Config { A, B, C, D };

inline constexpr std::array<Fig2Config, 4> all_fig2_configs{Fig2Config::A, Fig2Config::B, Fig2Config::C,
                                                            Fig2Config::D};

std::string_view preset_id(Fig2Config which);
std::optional<Fig2Config> parse_preset_id(std::string_view id);

CrMode cr_mode_of(Fig2Config which);
bool is_parallel(Fig2Config which);

/// A hop with the label used in reports ("gta", "urn-ata", "haps-atg", ...).
struct LabeledHop {
    std::string label;
    HopCdf cdf;
};

struct LabeledTopology {
    TopologySpec topology;
    std::vector<LabeledHop> hops;  // flattened, in composition order
};

/// Serial configs chain GtA (RF) -> AtA (FSO) -> AtG (FSO). Parallel configs put
/// the GtA hop in series with K dual-hop branches alternating URN-relayed
/// (URN -> URN -> ground) and HAPS-assisted (URN -> HAPS -> ground).
TopologySpec build_fig2_config(Fig2Config which, const ScenarioConfig& scenario);
LabeledTopology build_fig2_labeled(Fig2Config which, const ScenarioConfig& scenario);

/// Link specs used by the presets, exposed for tests and reports.
links::RfLinkSpec gta_spec(const ScenarioConfig& scenario, CrMode mode);

/// Common mean SNR used in equal-mean mode: the overlay ground-to-air budget.
double common_mean_snr(const ScenarioConfig& scenario);

}  // namespace aerolink::relaying

#endif  // AEROLINK_PRESETS_HPP
