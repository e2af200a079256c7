#include "aerolink/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>
#include <vector>

#include "aerolink/units.hpp"

namespace aerolink::mc {

namespace {

using links::HopCdf;
using links::HybridLinkCdf;
using links::LinkCdf;

constexpr std::uint64_t default_batch = 65'536;
constexpr double rare_event_level = 1e-6;

double sample_link(const LinkCdf& link, RngStream& rng) {
    if (const auto* nak = std::get_if<links::NakagamiErlang>(&link.family)) {
        return fading::nakagami_snr_sample({nak->m, link.mean_snr}, rng);
    }
    return fading::ew_snr_sample(std::get<links::ExpWeibull>(link.family).ew, link.mean_snr, rng);
}

// Flattened view of a topology for the sampling loop.
struct Plan {
    std::vector<const HopCdf*> serial;  // serial hops, or the prefix of a parallel scheme
    std::vector<std::pair<const HopCdf*, const HopCdf*>> branches;
    bool parallel = false;
};

Plan make_plan(const relaying::TopologySpec& topology) {
    Plan plan;
    if (const auto* s = std::get_if<relaying::SerialScheme>(&topology.scheme)) {
        for (const auto& hop : s->hops) plan.serial.push_back(&hop);
    } else {
        const auto& p = std::get<relaying::ParallelScheme>(topology.scheme);
        plan.parallel = true;
        for (const auto& hop : p.prefix) plan.serial.push_back(&hop);
        for (const auto& b : p.branches) plan.branches.emplace_back(&b.first, &b.second);
    }
    return plan;
}

double draw(const HopCdf& hop, std::uint64_t key, std::uint64_t sample, std::uint32_t hop_index) {
    RngStream primary(key, sample, 2 * hop_index);
    RngStream backup(key, sample, 2 * hop_index + 1);
    return sample_hop(hop, primary, backup);
}

bool in_outage(const Plan& plan, std::uint64_t key, std::uint64_t sample, double threshold) {
    std::uint32_t hop_index = 0;
    double e2e = std::numeric_limits<double>::infinity();
    for (const HopCdf* hop : plan.serial) {
        e2e = std::min(e2e, draw(*hop, key, sample, hop_index++));
    }
    if (plan.parallel) {
        double best = 0.0;
        for (const auto& [first, second] : plan.branches) {
            const double a = draw(*first, key, sample, hop_index++);
            const double b = draw(*second, key, sample, hop_index++);
            best = std::max(best, std::min(a, b));
        }
        e2e = std::min(e2e, best);
    }
    return e2e < threshold;
}

}  // namespace

void validate(const McConfig& cfg) {
    detail::require(cfg.samples > 0, "Monte Carlo needs at least one sample");
    detail::require(cfg.batch_size <= cfg.samples, "batch size must not exceed the sample count");
}

double sample_hop(const HopCdf& hop, RngStream& primary, RngStream& backup) {
    if (const auto* link = std::get_if<LinkCdf>(&hop)) {
        return sample_link(*link, primary);
    }
    const auto& hybrid = std::get<HybridLinkCdf>(hop);
    return std::max(sample_link(hybrid.fso, primary), sample_link(hybrid.rf, backup));
}

std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t n, double z) {
    detail::require(n > 0 && k <= n, "Wilson interval needs 0 <= k <= n, n > 0");
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(k) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double centre = (p + z2 / (2.0 * nn)) / denom;
    const double half = z / denom * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
    const double lo = k == 0 ? 0.0 : std::max(0.0, centre - half);
    const double hi = k == n ? 1.0 : std::min(1.0, centre + half);
    return {lo, hi};
}

relaying::OutageEstimate mc_outage(const relaying::TopologySpec& topology, const McConfig& cfg) {
    relaying::validate(topology);
    validate(cfg);

    const Plan plan = make_plan(topology);
    const double threshold = topology.threshold_linear();
    const std::uint64_t key = derive_key(cfg.master_seed, cfg.point_index);
    const std::uint64_t n = cfg.samples;
    const std::uint64_t batch = cfg.batch_size ? cfg.batch_size : std::min(default_batch, n);
    const std::uint64_t batches = (n + batch - 1) / batch;

    unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, batches));

    std::atomic<std::uint64_t> next_batch{0};
    std::vector<std::uint64_t> failures(workers, 0);
    const auto work = [&](unsigned id) {
        std::uint64_t local = 0;
        for (std::uint64_t b = next_batch++; b < batches; b = next_batch++) {
            const std::uint64_t end = std::min(n, (b + 1) * batch);
            for (std::uint64_t i = b * batch; i < end; ++i) {
                local += in_outage(plan, key, i, threshold) ? 1 : 0;
            }
        }
        failures[id] = local;
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned id = 0; id < workers; ++id) {
            pool.emplace_back(work, id);
        }
    }

    std::uint64_t k = 0;
    for (auto f : failures) k += f;

    relaying::OutageEstimate est;
    est.method = relaying::Method::MonteCarlo;
    est.samples = n;
    est.p_out = static_cast<double>(k) / static_cast<double>(n);
    const auto [lo, hi] = wilson_interval(k, n);
    est.ci95_low = lo;
    est.ci95_high = hi;
    est.ci95_halfwidth = (hi - lo) / 2.0;

    std::ostringstream warn;
    if (n < 1000) {
        warn << "fewer than 1000 samples; the 95% interval is unreliable. ";
    }
    if (est.p_out < rare_event_level) {
        // ~10% relative half-width needs n ~ (1.96 / 0.1)^2 / p.
        const double p_guess = est.p_out > 0.0 ? est.p_out : hi;
        const double needed = std::ceil(384.0 / p_guess);
        warn << "rare-event regime (estimate " << est.p_out << " below " << rare_event_level
             << "); about " << needed << " samples needed for a 10% relative interval";
    }
    est.warning = warn.str();
    return est;
}

ValidationReport compare(double p_analytical, const relaying::OutageEstimate& mc) {
    ValidationReport report;
    report.p_analytical = p_analytical;
    report.p_mc = mc.p_out;
    report.mc = mc;
    const double n = static_cast<double>(mc.samples);
    const double sigma = std::sqrt(p_analytical * (1.0 - p_analytical) / n);
    if (sigma > 0.0) {
        report.z_score = (mc.p_out - p_analytical) / sigma;
    } else if (mc.p_out == p_analytical) {
        report.z_score = 0.0;
    } else {
        report.z_score = mc.p_out > p_analytical ? std::numeric_limits<double>::infinity()
                                                 : -std::numeric_limits<double>::infinity();
    }
    report.pass = std::abs(report.z_score) <= z_pass_limit;
    return report;
}

ValidationReport mc_vs_analytical(const relaying::TopologySpec& topology, const McConfig& cfg) {
    const auto analytical = relaying::outage_analytical(topology);
    return compare(analytical.p_out, mc_outage(topology, cfg));
}

}  // namespace aerolink::mc
