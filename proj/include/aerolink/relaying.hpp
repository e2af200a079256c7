#ifndef AEROLINK_RELAYING_HPP
#define AEROLINK_RELAYING_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "aerolink/links.hpp"

namespace aerolink::relaying {

using links::CrMode;
using links::HopCdf;

/// Decode-and-forward chain of N >= 1 hops.
struct SerialScheme {
    std::vector<HopCdf> hops;
};

struct Branch {
    HopCdf first;
    HopCdf second;
};

/// K >= 1 dual-hop DF branches. `prefix` hops (e.g. the common ground-to-air hop)
/// are composed in series ahead of the parallel stage.
struct ParallelScheme {
    std::vector<HopCdf> prefix;
    std::vector<Branch> branches;
};

struct TopologySpec {
    std::variant<SerialScheme, ParallelScheme> scheme;
    CrMode cr_mode = CrMode::Overlay;
    double threshold_db = 3.0;

    double threshold_linear() const;
};

/// Throws std::domain_error for empty hop/branch lists or a non-finite threshold.
void validate(const TopologySpec& topology);

enum class Method { Analytical, MonteCarlo };

std::string_view to_string(Method method);

struct OutageEstimate {
    double p_out = 0.0;
    Method method = Method::Analytical;
    double ci95_halfwidth = 0.0;
    double ci95_low = 0.0;
    double ci95_high = 0.0;
    std::uint64_t samples = 0;
    std::string warning;

    friend bool operator==(const OutageEstimate&, const OutageEstimate&) = default;
};

/// Serial DF end-to-end SNR: the weakest hop.
double e2e_snr_serial(std::span<const double> hop_snrs);

/// Parallel dual-hop DF: best branch, each branch limited by its weaker hop.
double e2e_snr_parallel(std::span<const std::pair<double, double>> branch_snrs);

/// 1 - prod(1 - p_j), evaluated as -expm1(sum log1p(-p_j)) so that tiny
/// per-hop outages survive the subtraction.
double any_outage(std::span<const double> probabilities);

OutageEstimate outage_analytical(const TopologySpec& topology);

}  // namespace aerolink::relaying

#endif  // AEROLINK_RELAYING_HPP
