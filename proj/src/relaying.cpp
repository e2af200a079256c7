#include "aerolink/relaying.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "aerolink/units.hpp"

namespace aerolink::relaying {

double TopologySpec::threshold_linear() const { return to_linear(threshold_db); }

void validate(const TopologySpec& topology) {
    detail::require_finite(topology.threshold_db, "threshold");
    if (const auto* serial = std::get_if<SerialScheme>(&topology.scheme)) {
        detail::require(!serial->hops.empty(), "serial topology needs at least one hop");
    } else {
        const auto& parallel = std::get<ParallelScheme>(topology.scheme);
        detail::require(!parallel.branches.empty(), "parallel topology needs at least one branch");
    }
}

std::string_view to_string(Method method) {
    return method == Method::Analytical ? "analytical" : "montecarlo";
}

double e2e_snr_serial(std::span<const double> hop_snrs) {
    detail::require(!hop_snrs.empty(), "serial end-to-end SNR needs at least one hop");
    return *std::min_element(hop_snrs.begin(), hop_snrs.end());
}

double e2e_snr_parallel(std::span<const std::pair<double, double>> branch_snrs) {
    detail::require(!branch_snrs.empty(), "parallel end-to-end SNR needs at least one branch");
    double best = std::min(branch_snrs.front().first, branch_snrs.front().second);
    for (const auto& [first, second] : branch_snrs.subspan(1)) {
        best = std::max(best, std::min(first, second));
    }
    return best;
}

double any_outage(std::span<const double> probabilities) {
    double log_survival = 0.0;
    for (double p : probabilities) {
        log_survival += std::log1p(-p);
    }
    return -std::expm1(log_survival);
}

OutageEstimate outage_analytical(const TopologySpec& topology) {
    validate(topology);
    const double threshold = topology.threshold_linear();
    const auto cdf = [threshold](const HopCdf& hop) { return links::evaluate(hop, threshold); };

    double p_out = 0.0;
    if (const auto* serial = std::get_if<SerialScheme>(&topology.scheme)) {
        std::vector<double> per_hop;
        per_hop.reserve(serial->hops.size());
        for (const auto& hop : serial->hops) {
            per_hop.push_back(cdf(hop));
        }
        p_out = any_outage(per_hop);
    } else {
        const auto& parallel = std::get<ParallelScheme>(topology.scheme);
        double all_branches_down = 1.0;
        for (const auto& branch : parallel.branches) {
            const double pair[] = {cdf(branch.first), cdf(branch.second)};
            all_branches_down *= any_outage(pair);
        }
        if (parallel.prefix.empty()) {
            p_out = all_branches_down;
        } else {
            std::vector<double> stages;
            for (const auto& hop : parallel.prefix) {
                stages.push_back(cdf(hop));
            }
            stages.push_back(all_branches_down);
            p_out = any_outage(stages);
        }
    }
    assert(p_out >= 0.0 && p_out <= 1.0);
    detail::require(p_out >= 0.0 && p_out <= 1.0, "analytical outage left [0, 1]");

    OutageEstimate estimate;
    estimate.p_out = p_out;
    estimate.method = Method::Analytical;
    return estimate;
}

}  // namespace aerolink::relaying
