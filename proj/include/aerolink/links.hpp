#ifndef AEROLINK_LINKS_HPP
#define AEROLINK_LINKS_HPP

#include <string>
#include <variant>
#include <vector>

#include "aerolink/atmosphere.hpp"
#include "aerolink/fading.hpp"

namespace aerolink::links {

enum class CrMode { Overlay, Underlay };

std::string_view to_string(CrMode mode);

/// One cognitive-radio RF hop (ground-to-air, or the RF arm of a hybrid air-to-ground hop).
struct RfLinkSpec {
    double tx_power_dbm = 32.0;
    double noise_power_dbm = -100.0;
    double carrier_hz = 2e9;
    double pl_exponent = 2.32;
    double horizontal_m = 2500.0;
    double altitude_m = 200.0;
    int nakagami_m = 4;
    CrMode cr_mode = CrMode::Overlay;
    double interference_channel_gain = 1.0;  // E[|h_I|^2], linear
    double primary_interference_db = 0.0;    // I_P

    friend bool operator==(const RfLinkSpec&, const RfLinkSpec&) = default;
};

/// Explicit attenuation coefficient.
struct AttenuationDbPerKm {
    double value;
    friend bool operator==(const AttenuationDbPerKm&, const AttenuationDbPerKm&) = default;
};

/// Attenuation from visibility through Kim's model at the link wavelength.
struct Visibility {
    double km;
    friend bool operator==(const Visibility&, const Visibility&) = default;
};

using AttenuationSource = std::variant<atmosphere::FogLabel, AttenuationDbPerKm, Visibility>;

/// EW parameters derived from HV Cn2 at `altitude_m` -> Rytov variance over the hop length.
struct DerivedTurbulence {
    double altitude_m = 200.0;
    atmosphere::TurbulenceProfile profile{};
    friend bool operator==(const DerivedTurbulence&, const DerivedTurbulence&) = default;
};

using EwSource = std::variant<fading::EwParams, DerivedTurbulence>;

/// One FSO hop (air-to-air, or air-to-ground).
struct FsoLinkSpec {
    double tx_power_dbm = 32.0;
    double noise_power_dbm = -100.0;
    double length_m = 2500.0;
    double wavelength_m = atmosphere::default_wavelength_m;
    double oe_ratio = 1.0;
    AttenuationSource attenuation = AttenuationDbPerKm{4.5859};
    EwSource ew = DerivedTurbulence{};

    friend bool operator==(const FsoLinkSpec&, const FsoLinkSpec&) = default;
};

/// Throws std::domain_error on invalid specs; returns non-fatal warnings.
std::vector<std::string> validate(const RfLinkSpec& spec);
void validate(const FsoLinkSpec& spec);

struct NakagamiErlang {
    int m;
    friend bool operator==(const NakagamiErlang&, const NakagamiErlang&) = default;
};

struct ExpWeibull {
    fading::EwParams ew;
    friend bool operator==(const ExpWeibull&, const ExpWeibull&) = default;
};

using LinkFamily = std::variant<NakagamiErlang, ExpWeibull>;

/// Per-hop SNR distribution handle: a family plus its linear mean SNR.
struct LinkCdf {
    double mean_snr;
    LinkFamily family;

    double operator()(double gamma) const;
    friend bool operator==(const LinkCdf&, const LinkCdf&) = default;
};

/// Hybrid air-to-ground hop; in outage only when both the FSO and RF arms are.
struct HybridLinkCdf {
    LinkCdf fso;
    LinkCdf rf;

    double operator()(double gamma) const { return fso(gamma) * rf(gamma); }
    friend bool operator==(const HybridLinkCdf&, const HybridLinkCdf&) = default;
};

using HopCdf = std::variant<LinkCdf, HybridLinkCdf>;

double evaluate(const HopCdf& hop, double gamma);

/// Copy of `hop` with every arm's mean SNR replaced by `mean_snr`.
HopCdf with_mean(const HopCdf& hop, double mean_snr);

/// Reference path loss zeta = (2 pi f_c / c)^2.
double reference_path_loss(double carrier_hz);

/// V(r) = zeta r^rho, r = sqrt(d^2 + h^2), linear.
double path_loss(const RfLinkSpec& spec);

double gta_mean_snr(const RfLinkSpec& spec);
LinkCdf gta_link_cdf(const RfLinkSpec& spec);

double attenuation_db_per_km(const FsoLinkSpec& spec);

/// Beer-Lambert transmittance I_l over the hop.
double fso_transmittance(const FsoLinkSpec& spec);

/// Resolved EW parameters (explicit, or through the HV -> Rytov -> fit chain).
fading::EwParams fso_ew_params(const FsoLinkSpec& spec);

/// (P_s / P_n) oe^2 I_l^2.
double fso_mean_snr(const FsoLinkSpec& spec);
LinkCdf fso_link_cdf(const FsoLinkSpec& spec);

HybridLinkCdf hybrid_atg_cdf(const FsoLinkSpec& fso, const RfLinkSpec& rf);

}  // namespace aerolink::links

#endif  // AEROLINK_LINKS_HPP
