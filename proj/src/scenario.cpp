#include "aerolink/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace aerolink {

void validate(const ScenarioConfig& s) {
    std::vector<std::string> problems;
    const auto check = [&](bool ok, const char* field) {
        if (!ok) {
            problems.emplace_back(field);
        }
    };
    const auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
    const auto non_negative = [](double x) { return std::isfinite(x) && x >= 0.0; };

    check(s.wavelength_nm > 100.0 && s.wavelength_nm < 10'000.0, "wavelength_nm");
    check(std::isfinite(s.threshold_db), "threshold_db");
    check(s.nakagami_m >= 1, "nakagami_m");
    check(positive(s.oe_ratio), "oe_ratio");
    check(non_negative(s.interference_db), "interference_db");
    check(positive(s.interference_gain), "interference_gain");
    check(positive(s.horizontal_m), "horizontal_m");
    check(positive(s.urn_altitude_m) && s.urn_altitude_m <= 30'000.0, "urn_altitude_m");
    check(std::isfinite(s.haps_altitude_m) && s.haps_altitude_m > s.urn_altitude_m &&
              s.haps_altitude_m <= 30'000.0,
          "haps_altitude_m");
    check(positive(s.carrier_hz), "carrier_hz");
    check(non_negative(s.pl_exponent), "pl_exponent");
    check(std::isfinite(s.tx_power_dbm), "tx_power_dbm");
    check(std::isfinite(s.noise_power_dbm), "noise_power_dbm");
    check(non_negative(s.wind_speed_mps), "wind_speed_mps");
    check(positive(s.ground_cn2), "ground_cn2");
    check(s.parallel_branches >= 1, "parallel_branches");
    if (const auto* a = std::get_if<links::AttenuationDbPerKm>(&s.attenuation)) {
        check(non_negative(a->value), "attenuation");
    } else if (const auto* v = std::get_if<links::Visibility>(&s.attenuation)) {
        check(positive(v->km), "visibility_km");
    }
    if (s.ew) {
        check(positive(s.ew->alpha), "ew_alpha");
        check(positive(s.ew->beta), "ew_beta");
        check(positive(s.ew->eta), "ew_eta");
    }

    if (!problems.empty()) {
        std::string message = "invalid scenario field(s):";
        for (const auto& p : problems) {
            message += ' ';
            message += p;
        }
        throw std::invalid_argument(message);
    }
}

}  // namespace aerolink
