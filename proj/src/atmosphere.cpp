#include "aerolink/atmosphere.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "aerolink/units.hpp"

namespace aerolink::atmosphere {

namespace {

constexpr double max_hv_altitude_m = 30'000.0;

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) ==
                      std::tolower(static_cast<unsigned char>(y));
           });
}

}  // namespace

const FogClass& fog_class(FogLabel label) {
    for (const auto& fc : fog_classes) {
        if (fc.label == label) {
            return fc;
        }
    }
    throw std::domain_error("unknown fog label");
}

std::string_view to_string(FogLabel label) {
    switch (label) {
        case FogLabel::Dense: return "dense";
        case FogLabel::Thick: return "thick";
        case FogLabel::Moderate: return "moderate";
        case FogLabel::Light: return "light";
        case FogLabel::Thin: return "thin";
    }
    return "unknown";
}

std::optional<FogLabel> parse_fog_label(std::string_view text) {
    for (const auto& fc : fog_classes) {
        if (iequals(text, to_string(fc.label))) {
            return fc.label;
        }
    }
    return std::nullopt;
}

void validate(const TurbulenceProfile& profile) {
    detail::require(std::isfinite(profile.wavelength_m) && profile.wavelength_m > 100e-9 &&
                        profile.wavelength_m < 10e-6,
                    "wavelength must lie in (100 nm, 10 um)");
    detail::require_non_negative(profile.wind_speed_mps, "wind speed");
    detail::require_positive(profile.ground_cn2, "ground Cn2");
}

double beer_lambert(double attenuation_db_per_km, double distance_km) {
    detail::require_non_negative(attenuation_db_per_km, "attenuation");
    detail::require_non_negative(distance_km, "distance");
    return std::pow(10.0, -attenuation_db_per_km * distance_km / 10.0);
}

double kim_exponent(double visibility_km) {
    if (visibility_km > 50.0) return 1.6;
    if (visibility_km > 6.0) return 1.3;
    if (visibility_km > 1.0) return 0.16 * visibility_km + 0.34;
    if (visibility_km > 0.5) return visibility_km - 0.5;
    return 0.0;
}

double kim_attenuation(double visibility_km, double wavelength_nm) {
    detail::require_positive(visibility_km, "visibility");
    detail::require_positive(wavelength_nm, "wavelength");
    const double q = kim_exponent(visibility_km);
    const double nepers_per_km = (3.91 / visibility_km) * std::pow(wavelength_nm / 550.0, -q);
    return 10.0 / std::numbers::ln10 * nepers_per_km;
}

double hv_cn2(double altitude_m, const TurbulenceProfile& profile) {
    detail::require(std::isfinite(altitude_m) && altitude_m >= 0.0 && altitude_m <= max_hv_altitude_m,
                    "altitude must lie in [0, 30 km]");
    validate(profile);
    const double h = altitude_m;
    const double wind = profile.wind_speed_mps / 27.0;
    const double tropopause = 0.00594 * wind * wind * std::pow(1e-5 * h, 10) * std::exp(-h / 1000.0);
    const double background = 2.7e-16 * std::exp(-h / 1500.0);
    const double boundary = profile.ground_cn2 * std::exp(-h / 100.0);
    return tropopause + background + boundary;
}

double rytov_variance(double cn2, double wavelength_m, double path_length_m) {
    detail::require_non_negative(cn2, "Cn2");
    detail::require_positive(wavelength_m, "wavelength");
    detail::require_positive(path_length_m, "path length");
    const double k = 2.0 * std::numbers::pi / wavelength_m;
    return 1.23 * cn2 * std::pow(k, 7.0 / 6.0) * std::pow(path_length_m, 11.0 / 6.0);
}

}  // namespace aerolink::atmosphere
