#ifndef AEROLINK_ATMOSPHERE_HPP
#define AEROLINK_ATMOSPHERE_HPP

#include <array>
#include <optional>
#include <string_view>

namespace aerolink::atmosphere {

// Optical propagation physics: fog attenuation and the altitude-dependent
// turbulence strength chain (Cn2 -> Rytov variance). Attenuation is carried in
// dB/km throughout; transmittance is computed from that directly.

enum class FogLabel { Dense, Thick, Moderate, Light, Thin };

struct FogClass {
    FogLabel label;
    double visibility_km;
    double attenuation_db_per_km;
};

/// Tabulated fog classes at 1550 nm, densest first.
inline constexpr std::array<FogClass, 5> fog_classes{{
    {FogLabel::Dense, 0.05, 339.62},
    {FogLabel::Thick, 0.20, 84.90},
    {FogLabel::Moderate, 0.50, 33.96},
    {FogLabel::Light, 0.77, 16.67},
    {FogLabel::Thin, 1.90, 4.59},
}};

const FogClass& fog_class(FogLabel label);

/// Case-insensitive lookup ("dense", "Thin", ...). Returns nullopt for unknown labels.
std::optional<FogLabel> parse_fog_label(std::string_view text);

std::string_view to_string(FogLabel label);

inline constexpr double default_wavelength_m = 1550e-9;
inline constexpr double default_wind_speed_mps = 21.0;
inline constexpr double default_ground_cn2 = 1.7e-14;

/// Hufnagel-Valley profile parameters. Construct through make_profile to get validation.
struct TurbulenceProfile {
    double wind_speed_mps = default_wind_speed_mps;
    double ground_cn2 = default_ground_cn2;
    double wavelength_m = default_wavelength_m;

    friend bool operator==(const TurbulenceProfile&, const TurbulenceProfile&) = default;
};

/// Throws std::domain_error when the wavelength leaves (100 nm, 10 um), wind speed is
/// negative or the ground term is non-positive.
void validate(const TurbulenceProfile& profile);

/// Transmittance 10^(-a L / 10) for attenuation a in dB/km over L km.
double beer_lambert(double attenuation_db_per_km, double distance_km);

/// Kim's visibility model. Returns attenuation in dB/km.
double kim_attenuation(double visibility_km, double wavelength_nm);

/// Kim's piecewise wavelength exponent q(V).
double kim_exponent(double visibility_km);

/// Hufnagel-Valley refractive-index structure parameter at altitude_m in [0, 30 km].
double hv_cn2(double altitude_m, const TurbulenceProfile& profile = {});

/// Plane-wave Rytov variance 1.23 Cn2 k^(7/6) L^(11/6) on a horizontal path.
/// cn2 may be zero (returns zero); wavelength and path length must be positive.
double rytov_variance(double cn2, double wavelength_m, double path_length_m);

}  // namespace aerolink::atmosphere

#endif  // AEROLINK_ATMOSPHERE_HPP
