#ifndef AEROLINK_MONTECARLO_HPP
#define AEROLINK_MONTECARLO_HPP

#include <cstdint>
#include <utility>

#include "aerolink/relaying.hpp"
#include "aerolink/rng.hpp"

namespace aerolink::mc {

/// Default master seed, 0xAE01.
inline constexpr std::uint64_t default_seed = 0xAE01;

struct McConfig {
    std::uint64_t samples = 1'000'000;
    std::uint64_t master_seed = default_seed;
    std::uint64_t batch_size = 0;  // 0 picks min(65536, samples)
    unsigned threads = 0;          // 0 uses hardware concurrency
    std::uint64_t point_index = 0; // sweep point; selects an independent key

    friend bool operator==(const McConfig&, const McConfig&) = default;
};

void validate(const McConfig& cfg);

/// One SNR draw for a hop. Hybrid hops select the stronger arm.
double sample_hop(const links::HopCdf& hop, RngStream& primary, RngStream& backup);

/// Wilson score interval for k successes in n trials.
std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t n, double z = 1.959963984540054);

/// Sample-count outage estimate. Each (sample, hop) pair owns its own counter
/// stream, so the result depends only on (topology, samples, master_seed,
/// point_index): never on batch size or thread count.
relaying::OutageEstimate mc_outage(const relaying::TopologySpec& topology, const McConfig& cfg);

struct ValidationReport {
    double p_analytical = 0.0;
    double p_mc = 0.0;
    double z_score = 0.0;
    bool pass = false;
    relaying::OutageEstimate mc;
};

inline constexpr double z_pass_limit = 4.0;

/// z = (p_mc - p) / sqrt(p (1 - p) / n); |z| <= 4 passes. Degenerate p in {0, 1}
/// gives z = 0 when the estimate matches exactly and +/-inf otherwise.
ValidationReport compare(double p_analytical, const relaying::OutageEstimate& mc);

ValidationReport mc_vs_analytical(const relaying::TopologySpec& topology, const McConfig& cfg);

}  // namespace aerolink::mc

#endif  // AEROLINK_MONTECARLO_HPP
