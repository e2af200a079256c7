#ifndef AEROLINK_FADING_HPP
#define AEROLINK_FADING_HPP

#include "aerolink/rng.hpp"

namespace aerolink::fading {

/// Nakagami-m fading seen in the SNR domain: gamma ~ Gamma(shape m, mean mean_snr).
struct NakagamiParams {
    int m = 4;
    double mean_snr = 1.0;

    friend bool operator==(const NakagamiParams&, const NakagamiParams&) = default;
};

/// Exponentiated Weibull irradiance law F(I) = (1 - exp(-(I/eta)^beta))^alpha.
struct EwParams {
    double alpha = 1.0;
    double beta = 2.0;
    double eta = 1.0;

    friend bool operator==(const EwParams&, const EwParams&) = default;
};

void validate(const NakagamiParams& params);
void validate(const EwParams& ew);

/// Erlang / regularized lower incomplete gamma P(m, m*gamma/mean).
double nakagami_snr_cdf(double gamma, const NakagamiParams& params);

/// One Gamma(m, mean/m) draw as a sum of m exponentials.
double nakagami_snr_sample(const NakagamiParams& params, RngStream& rng);

/// SNR-domain EW CDF: (1 - exp[-(gamma / (eta^2 mean))^(beta/2)])^alpha.
double ew_snr_cdf(double gamma, const EwParams& ew, double mean_snr);

/// Inverse of ew_snr_cdf for u in [0, 1).
double ew_snr_quantile(double u, const EwParams& ew, double mean_snr);

/// Exact inverse-transform draw.
double ew_snr_sample(const EwParams& ew, double mean_snr, RngStream& rng);

/// E[I^order] of the EW irradiance law, by tanh-sinh quadrature over the quantile.
double ew_irradiance_moment(const EwParams& ew, int order);

/// Fit (alpha, beta, eta) to a scintillation index with the aperture-averaged EW
/// expressions of Barrios & Dios, then rescale eta so that E[I] = 1.
///   alpha = 7.220 s^(1/3) / Gamma(2.487 s^(1/6) - 0.104)
///   beta  = 1.012 (alpha s)^(-13/25) + 0.142
/// Throws std::domain_error for non-positive s, or s so small that the gamma
/// argument leaves the positive axis (s below ~5e-9).
EwParams ew_params_from_scintillation(double scintillation_index);

}  // namespace aerolink::fading

#endif  // AEROLINK_FADING_HPP
