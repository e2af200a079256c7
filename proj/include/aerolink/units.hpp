#ifndef AEROLINK_UNITS_HPP
#define AEROLINK_UNITS_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace aerolink {

inline constexpr double speed_of_light_mps = 299'792'458.0;

/// Power ratio in dB to linear.
inline double to_linear(double db) { return std::pow(10.0, db / 10.0); }

/// Linear power ratio to dB. Non-positive input maps to -inf / NaN as log10 does.
inline double to_db(double linear) { return 10.0 * std::log10(linear); }

/// dBm difference to a linear power ratio (P_a / P_b).
inline double dbm_ratio(double a_dbm, double b_dbm) { return to_linear(a_dbm - b_dbm); }

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) {
        throw std::domain_error(what);
    }
}

inline void require_finite(double x, const char* name) {
    require(std::isfinite(x), std::string(name) + " must be finite");
}

inline void require_positive(double x, const char* name) {
    require(std::isfinite(x) && x > 0.0, std::string(name) + " must be positive and finite");
}

inline void require_non_negative(double x, const char* name) {
    require(std::isfinite(x) && x >= 0.0, std::string(name) + " must be non-negative and finite");
}

}  // namespace detail
}  // namespace aerolink

#endif  // AEROLINK_UNITS_HPP
