#include "aerolink/links.hpp"

#include <cmath>
#include <numbers>

#include "aerolink/units.hpp"

namespace aerolink::links {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

std::string_view to_string(CrMode mode) {
    return mode == CrMode::Overlay ? "overlay" : "underlay";
}

std::vector<std::string> validate(const RfLinkSpec& spec) {
    detail::require_finite(spec.tx_power_dbm, "tx power");
    detail::require_finite(spec.noise_power_dbm, "noise power");
    detail::require_positive(spec.carrier_hz, "carrier frequency");
    detail::require_non_negative(spec.pl_exponent, "path-loss exponent");
    detail::require_non_negative(spec.horizontal_m, "horizontal distance");
    detail::require_non_negative(spec.altitude_m, "altitude");
    detail::require(std::hypot(spec.horizontal_m, spec.altitude_m) > 0.0,
                    "RF link endpoints coincide (r = 0)");
    detail::require(spec.nakagami_m >= 1, "Nakagami m must be an integer >= 1");
    detail::require_positive(spec.interference_channel_gain, "interference channel gain");
    detail::require_non_negative(spec.primary_interference_db, "primary interference");

    std::vector<std::string> warnings;
    if (spec.cr_mode == CrMode::Overlay &&
        (spec.interference_channel_gain != 1.0 || spec.primary_interference_db != 0.0)) {
        warnings.emplace_back("underlay interference parameters are ignored in overlay mode");
    }
    return warnings;
}

void validate(const FsoLinkSpec& spec) {
    detail::require_finite(spec.tx_power_dbm, "tx power");
    detail::require_finite(spec.noise_power_dbm, "noise power");
    detail::require_positive(spec.length_m, "FSO length");
    detail::require_positive(spec.oe_ratio, "optical-to-electrical ratio");
    detail::require(spec.wavelength_m > 100e-9 && spec.wavelength_m < 10e-6,
                    "wavelength must lie in (100 nm, 10 um)");
    std::visit(overloaded{
                   [](atmosphere::FogLabel) {},
                   [](AttenuationDbPerKm a) { detail::require_non_negative(a.value, "attenuation"); },
                   [](Visibility v) { detail::require_positive(v.km, "visibility"); },
               },
               spec.attenuation);
    std::visit(overloaded{
                   [](const fading::EwParams& ew) { fading::validate(ew); },
                   [](const DerivedTurbulence& t) {
                       atmosphere::validate(t.profile);
                       detail::require(t.altitude_m >= 0.0 && t.altitude_m <= 30'000.0,
                                       "turbulence altitude must lie in [0, 30 km]");
                   },
               },
               spec.ew);
}

double LinkCdf::operator()(double gamma) const {
    return std::visit(overloaded{
                          [&](NakagamiErlang f) {
                              return fading::nakagami_snr_cdf(gamma, {f.m, mean_snr});
                          },
                          [&](const ExpWeibull& f) { return fading::ew_snr_cdf(gamma, f.ew, mean_snr); },
                      },
                      family);
}

double evaluate(const HopCdf& hop, double gamma) {
    return std::visit([gamma](const auto& h) { return h(gamma); }, hop);
}

HopCdf with_mean(const HopCdf& hop, double mean_snr) {
    detail::require_positive(mean_snr, "mean SNR");
    return std::visit(overloaded{
                          [&](const LinkCdf& h) -> HopCdf { return LinkCdf{mean_snr, h.family}; },
                          [&](const HybridLinkCdf& h) -> HopCdf {
                              return HybridLinkCdf{{mean_snr, h.fso.family}, {mean_snr, h.rf.family}};
                          },
                      },
                      hop);
}

double reference_path_loss(double carrier_hz) {
    detail::require_positive(carrier_hz, "carrier frequency");
    const double k = 2.0 * std::numbers::pi * carrier_hz / speed_of_light_mps;
    return k * k;
}

double path_loss(const RfLinkSpec& spec) {
    validate(spec);
    const double r = std::hypot(spec.horizontal_m, spec.altitude_m);
    return reference_path_loss(spec.carrier_hz) * std::pow(r, spec.pl_exponent);
}

double gta_mean_snr(const RfLinkSpec& spec) {
    const double budget = dbm_ratio(spec.tx_power_dbm, spec.noise_power_dbm) / path_loss(spec);
    if (spec.cr_mode == CrMode::Overlay) {
        return budget;
    }
    return budget / spec.interference_channel_gain / (1.0 + to_linear(spec.primary_interference_db));
}

LinkCdf gta_link_cdf(const RfLinkSpec& spec) {
    return LinkCdf{gta_mean_snr(spec), NakagamiErlang{spec.nakagami_m}};
}

double attenuation_db_per_km(const FsoLinkSpec& spec) {
    return std::visit(overloaded{
                          [](atmosphere::FogLabel label) {
                              return atmosphere::fog_class(label).attenuation_db_per_km;
                          },
                          [](AttenuationDbPerKm a) { return a.value; },
                          [&](Visibility v) {
                              return atmosphere::kim_attenuation(v.km, spec.wavelength_m * 1e9);
                          },
                      },
                      spec.attenuation);
}

double fso_transmittance(const FsoLinkSpec& spec) {
    validate(spec);
    return atmosphere::beer_lambert(attenuation_db_per_km(spec), spec.length_m / 1000.0);
}

fading::EwParams fso_ew_params(const FsoLinkSpec& spec) {
    validate(spec);
    return std::visit(overloaded{
                          [](const fading::EwParams& ew) { return ew; },
                          [&](const DerivedTurbulence& t) {
                              const double cn2 = atmosphere::hv_cn2(t.altitude_m, t.profile);
                              const double rytov =
                                  atmosphere::rytov_variance(cn2, t.profile.wavelength_m, spec.length_m);
                              return fading::ew_params_from_scintillation(rytov);
                          },
                      },
                      spec.ew);
}

double fso_mean_snr(const FsoLinkSpec& spec) {
    const double il = fso_transmittance(spec);
    return dbm_ratio(spec.tx_power_dbm, spec.noise_power_dbm) * spec.oe_ratio * spec.oe_ratio * il * il;
}

LinkCdf fso_link_cdf(const FsoLinkSpec& spec) {
    return LinkCdf{fso_mean_snr(spec), ExpWeibull{fso_ew_params(spec)}};
}

HybridLinkCdf hybrid_atg_cdf(const FsoLinkSpec& fso, const RfLinkSpec& rf) {
    return HybridLinkCdf{fso_link_cdf(fso), gta_link_cdf(rf)};
}

}  // namespace aerolink::links
