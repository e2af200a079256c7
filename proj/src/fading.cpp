#include "aerolink/fading.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>

#include "aerolink/units.hpp"

namespace aerolink::fading {

void validate(const NakagamiParams& params) {
    detail::require(params.m >= 1, "Nakagami m must be an integer >= 1");
    detail::require_positive(params.mean_snr, "mean SNR");
}

void validate(const EwParams& ew) {
    detail::require_positive(ew.alpha, "EW alpha");
    detail::require_positive(ew.beta, "EW beta");
    detail::require_positive(ew.eta, "EW eta");
}

double nakagami_snr_cdf(double gamma, const NakagamiParams& params) {
    validate(params);
    detail::require_non_negative(gamma, "gamma");
    if (gamma == 0.0) {
        return 0.0;
    }
    const double m = params.m;
    return boost::math::gamma_p(m, m * gamma / params.mean_snr);
}

double nakagami_snr_sample(const NakagamiParams& params, RngStream& rng) {
    validate(params);
    double sum = 0.0;
    for (int i = 0; i < params.m; ++i) {
        sum -= std::log1p(-rng.uniform());
    }
    return sum * params.mean_snr / params.m;
}

double ew_snr_cdf(double gamma, const EwParams& ew, double mean_snr) {
    validate(ew);
    detail::require_positive(mean_snr, "mean SNR");
    detail::require_non_negative(gamma, "gamma");
    if (gamma == 0.0) {
        return 0.0;
    }
    const double x = std::pow(gamma / (ew.eta * ew.eta * mean_snr), ew.beta / 2.0);
    // -expm1 keeps 1 - exp(-x) accurate for deep fades where x underflows 1e-8.
    const double base = -std::expm1(-x);
    if (base <= 0.0) {
        return 0.0;
    }
    return std::exp(ew.alpha * std::log(base));
}

double ew_snr_quantile(double u, const EwParams& ew, double mean_snr) {
    validate(ew);
    detail::require_positive(mean_snr, "mean SNR");
    detail::require(u >= 0.0 && u < 1.0, "quantile level must lie in [0, 1)");
    if (u == 0.0) {
        return 0.0;
    }
    const double root = std::exp(std::log(u) / ew.alpha);
    const double x = -std::log1p(-root);
    return ew.eta * ew.eta * mean_snr * std::pow(x, 2.0 / ew.beta);
}

double ew_snr_sample(const EwParams& ew, double mean_snr, RngStream& rng) {
    validate(ew);
    detail::require_positive(mean_snr, "mean SNR");
    const double u = rng.uniform();
    if (u == 0.0) {
        return 0.0;
    }
    const double x = -std::log1p(-std::exp(std::log(u) / ew.alpha));
    return ew.eta * ew.eta * mean_snr * std::pow(x, 2.0 / ew.beta);
}

double ew_irradiance_moment(const EwParams& ew, int order) {
    validate(ew);
    detail::require(order >= 1, "moment order must be >= 1");
    const auto quantile_power = [&](double v) {
        if (v <= 0.0) {
            return 0.0;
        }
        const double root = std::exp(std::log(v) / ew.alpha);
        if (root >= 1.0) {
            return 0.0;
        }
        const double irradiance = ew.eta * std::pow(-std::log1p(-root), 1.0 / ew.beta);
        return std::pow(irradiance, order);
    };
    boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator.integrate(quantile_power, 0.0, 1.0);
}

EwParams ew_params_from_scintillation(double scintillation_index) {
    detail::require_positive(scintillation_index, "scintillation index");
    const double s = scintillation_index;
    const double gamma_arg = 2.487 * std::pow(s, 1.0 / 6.0) - 0.104;
    detail::require(gamma_arg > 0.0, "scintillation index below the EW fit range");

    EwParams ew;
    ew.alpha = 7.220 * std::cbrt(s) / boost::math::tgamma(gamma_arg);
    ew.beta = 1.012 * std::pow(ew.alpha * s, -13.0 / 25.0) + 0.142;
    ew.eta = 1.0;
    ew.eta = 1.0 / ew_irradiance_moment(ew, 1);
    validate(ew);
    return ew;
}

}  // namespace aerolink::fading
