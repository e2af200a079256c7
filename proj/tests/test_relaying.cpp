#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "aerolink/presets.hpp"
#include "aerolink/rng.hpp"
#include "aerolink/units.hpp"
#include "oracles.hpp"

using namespace aerolink;
using namespace aerolink::relaying;
using links::ExpWeibull;
using links::LinkCdf;
using links::NakagamiErlang;

namespace {

// Exponential hop (EW with alpha = 1, beta = 2, eta = 1) whose CDF at 1 is p.
LinkCdf hop_with_outage(double p) { return LinkCdf{-1.0 / std::log1p(-p), ExpWeibull{{1.0, 2.0, 1.0}}}; }

TopologySpec serial(std::vector<HopCdf> hops, double threshold_db = 0.0) {
    TopologySpec t;
    t.scheme = SerialScheme{std::move(hops)};
    t.threshold_db = threshold_db;
    return t;
}

TopologySpec parallel(std::vector<HopCdf> prefix, std::vector<Branch> branches, double threshold_db = 0.0) {
    TopologySpec t;
    t.scheme = ParallelScheme{std::move(prefix), std::move(branches)};
    t.threshold_db = threshold_db;
    return t;
}

}  // namespace

TEST_CASE("end-to-end SNR composition") {
    const std::vector<double> one{5.0};
    CHECK(e2e_snr_serial(one) == 5.0);
    const std::vector<double> three{3.0, 1.0, 7.0};
    CHECK(e2e_snr_serial(three) == 1.0);
    CHECK_THROWS_AS(e2e_snr_serial(std::vector<double>{}), std::domain_error);

    const std::vector<std::pair<double, double>> k1{{2.0, 3.0}};
    CHECK(e2e_snr_parallel(k1) == 2.0);
    const std::vector<std::pair<double, double>> k2{{2.0, 3.0}, {5.0, 1.0}};
    CHECK(e2e_snr_parallel(k2) == 2.0);
    CHECK_THROWS_AS(e2e_snr_parallel(std::vector<std::pair<double, double>>{}), std::domain_error);
}

TEST_CASE("composition agrees with brute force on random instances") {
    RngStream rng(derive_key(31, 0), 0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> hops(1 + trial % 6);
        for (auto& h : hops) h = 10.0 * rng.uniform();
        auto sorted = hops;
        std::sort(sorted.begin(), sorted.end());
        CHECK(e2e_snr_serial(hops) == sorted.front());
        std::next_permutation(hops.begin(), hops.end());
        CHECK(e2e_snr_serial(hops) == sorted.front());

        std::vector<std::pair<double, double>> branches(5);
        for (auto& [a, b] : branches) {
            a = 10.0 * rng.uniform();
            b = 10.0 * rng.uniform();
        }
        // Largest t such that some branch has both hops >= t.
        double best = 0.0;
        for (const auto& [a, b] : branches) {
            for (double t : {a, b}) {
                bool ok = false;
                for (const auto& [c, d] : branches) ok = ok || (c >= t && d >= t);
                if (ok) best = std::max(best, t);
            }
        }
        CHECK(e2e_snr_parallel(branches) == best);
    }
}

TEST_CASE("any_outage") {
    CHECK(any_outage(std::vector<double>{0.1, 0.1}) == doctest::Approx(0.19).epsilon(1e-15));
    CHECK(any_outage(std::vector<double>{1e-17, 1e-17}) == doctest::Approx(2e-17).epsilon(1e-12));
    CHECK(any_outage(std::vector<double>{1.0, 0.3}) == 1.0);
    CHECK(any_outage(std::vector<double>{0.0}) == 0.0);
    const std::vector<double> ps{0.01, 0.2, 0.33, 0.5};
    CHECK(any_outage(ps) == doctest::Approx(oracle::any_outage(ps)).epsilon(1e-14));
}

TEST_CASE("analytical outage closed forms") {
    const auto a = hop_with_outage(0.1);
    CHECK(a(1.0) == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(outage_analytical(serial({a})).p_out == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(outage_analytical(serial({a, a})).p_out == doctest::Approx(0.19).epsilon(1e-14));
    CHECK(outage_analytical(parallel({}, {{a, a}})).p_out == doctest::Approx(0.19).epsilon(1e-14));
    CHECK(outage_analytical(parallel({}, {{a, a}, {a, a}})).p_out == doctest::Approx(0.0361).epsilon(1e-13));
    const auto est = outage_analytical(serial({a}));
    CHECK(est.method == Method::Analytical);
    CHECK(est.ci95_halfwidth == 0.0);
    CHECK(est.samples == 0);
}

TEST_CASE("K = 1 parallel equals N = 2 serial exactly") {
    for (double p1 : {1e-9, 0.003, 0.1, 0.7}) {
        for (double p2 : {1e-12, 0.05, 0.5}) {
            const auto a = hop_with_outage(p1);
            const auto b = hop_with_outage(p2);
            const double s = outage_analytical(serial({a, b})).p_out;
            const double k = outage_analytical(parallel({}, {{a, b}})).p_out;
            CHECK(std::abs(s - k) <= 1e-15);
        }
    }
}

TEST_CASE("threshold conversion") {
    TopologySpec t = serial({hop_with_outage(0.1)}, 3.0);
    CHECK(t.threshold_linear() == doctest::Approx(to_linear(3.0)).epsilon(1e-15));
    t.threshold_db = std::nan("");
    CHECK_THROWS_AS(validate(t), std::domain_error);
    CHECK_THROWS_AS(validate(serial({})), std::domain_error);
    CHECK_THROWS_AS(validate(parallel({hop_with_outage(0.1)}, {})), std::domain_error);
}

TEST_CASE("outage monotonicity properties") {
    const LinkCdf nak{20.0, NakagamiErlang{4}};
    const LinkCdf ew{20.0, ExpWeibull{{1.6, 1.8, 0.7}}};
    double prev = 0.0;
    for (double th = -10.0; th <= 20.0; th += 1.0) {
        const double p = outage_analytical(serial({nak, ew, ew}, th)).p_out;
        CHECK(p >= prev);
        prev = p;
    }
    prev = 1.0;
    for (double mean = 1.0; mean < 1e4; mean *= 1.5) {
        const LinkCdf better{mean, ew.family};
        const double p = outage_analytical(parallel({nak}, {{better, ew}, {ew, ew}}, 3.0)).p_out;
        CHECK(p <= prev);
        prev = p;
    }
    // Adding a serial hop never helps.
    const double two = outage_analytical(serial({nak, ew}, 3.0)).p_out;
    const double three = outage_analytical(serial({nak, ew, ew}, 3.0)).p_out;
    CHECK(three >= two);
}

TEST_CASE("identical branches: more branches never hurt") {
    const LinkCdf ew{8.0, ExpWeibull{{1.6, 1.8, 0.7}}};
    double prev = 1.0;
    for (int k = 1; k <= 6; ++k) {
        std::vector<Branch> branches(k, Branch{ew, ew});
        const double p = outage_analytical(parallel({}, branches, 3.0)).p_out;
        CHECK(p < prev);
        prev = p;
    }
    // Equality at the certain-outage end.
    const LinkCdf dead{1e-300, NakagamiErlang{1}};
    CHECK(outage_analytical(parallel({}, {{dead, dead}})).p_out == 1.0);
    CHECK(outage_analytical(parallel({}, {{dead, dead}, {dead, dead}})).p_out == 1.0);
}

TEST_CASE("preset ids") {
    CHECK(preset_id(Fig2Config::A) == "fig2a");
    CHECK(parse_preset_id("fig2d") == Fig2Config::D);
    CHECK_FALSE(parse_preset_id("fig2e").has_value());
    CHECK(cr_mode_of(Fig2Config::A) == CrMode::Overlay);
    CHECK(cr_mode_of(Fig2Config::B) == CrMode::Overlay);
    CHECK(cr_mode_of(Fig2Config::C) == CrMode::Underlay);
    CHECK(cr_mode_of(Fig2Config::D) == CrMode::Underlay);
    CHECK(is_parallel(Fig2Config::A));
    CHECK_FALSE(is_parallel(Fig2Config::B));
}

TEST_CASE("serial preset structure") {
    const ScenarioConfig s;
    const auto b = build_fig2_config(Fig2Config::B, s);
    const auto& hops = std::get<SerialScheme>(b.scheme).hops;
    REQUIRE(hops.size() == 3);
    CHECK(std::get<NakagamiErlang>(std::get<LinkCdf>(hops[0]).family).m == 4);
    CHECK(std::holds_alternative<ExpWeibull>(std::get<LinkCdf>(hops[1]).family));
    CHECK(std::holds_alternative<ExpWeibull>(std::get<LinkCdf>(hops[2]).family));
    CHECK(b.threshold_db == 3.0);
    CHECK(b.cr_mode == CrMode::Overlay);

    // Equal-mean mode: every hop of the overlay chain carries the GtA budget.
    const double common = common_mean_snr(s);
    CHECK(common == doctest::Approx(117.16204113).epsilon(1e-9));
    for (const auto& hop : hops) CHECK(std::get<LinkCdf>(hop).mean_snr == doctest::Approx(common).epsilon(1e-15));

    // fig2d differs from fig2b only in the ground-to-air mean.
    const auto d = build_fig2_config(Fig2Config::D, s);
    const auto& dh = std::get<SerialScheme>(d.scheme).hops;
    REQUIRE(dh.size() == 3);
    CHECK(dh[1] == hops[1]);
    CHECK(dh[2] == hops[2]);
    const auto& g = std::get<LinkCdf>(dh[0]);
    CHECK(g.mean_snr == doctest::Approx(common / (1.0 + to_linear(s.interference_db))).epsilon(1e-14));
    CHECK(g.family == std::get<LinkCdf>(hops[0]).family);
}

TEST_CASE("parallel preset structure and the K = 1 reduction") {
    ScenarioConfig s;
    const auto a = build_fig2_labeled(Fig2Config::A, s);
    const auto& p = std::get<ParallelScheme>(a.topology.scheme);
    CHECK(p.prefix.size() == 1);
    REQUIRE(p.branches.size() == 2);
    REQUIRE(a.hops.size() == 5);
    CHECK(a.hops[0].label == "gta");
    CHECK(a.hops[1].label == "urn-ata-1");
    CHECK(a.hops[3].label == "haps-ata-2");

    // Dropping the HAPS branch: GtA then one dual-hop branch is a three-hop serial chain.
    s.parallel_branches = 1;
    const auto k1 = build_fig2_config(Fig2Config::A, s);
    const auto& b1 = std::get<ParallelScheme>(k1.scheme).branches;
    REQUIRE(b1.size() == 1);
    const auto chain = serial({std::get<ParallelScheme>(k1.scheme).prefix[0], b1[0].first, b1[0].second}, 3.0);
    CHECK(std::abs(outage_analytical(k1).p_out - outage_analytical(chain).p_out) <= 1e-15);
    CHECK(outage_analytical(k1).p_out == doctest::Approx(outage_analytical(build_fig2_config(Fig2Config::B, s)).p_out).epsilon(1e-15));
}

TEST_CASE("preset outage: parallel beats serial, overlay beats underlay") {
    const ScenarioConfig s;
    const double pa = outage_analytical(build_fig2_config(Fig2Config::A, s)).p_out;
    const double pb = outage_analytical(build_fig2_config(Fig2Config::B, s)).p_out;
    const double pc = outage_analytical(build_fig2_config(Fig2Config::C, s)).p_out;
    const double pd = outage_analytical(build_fig2_config(Fig2Config::D, s)).p_out;
    CHECK(pa < pb);
    CHECK(pc < pd);
    CHECK(pa <= pc);
    CHECK(pb <= pd);
    for (double p : {pa, pb, pc, pd}) {
        CHECK(p > 0.0);
        CHECK(p < 1.0);
    }
}

TEST_CASE("physical mean-SNR mode keeps each hop's own budget") {
    ScenarioConfig s;
    s.mean_snr_mode = MeanSnrMode::Physical;
    const auto b = build_fig2_config(Fig2Config::B, s);
    const auto& hops = std::get<SerialScheme>(b.scheme).hops;
    links::FsoLinkSpec ata;
    ata.length_m = s.horizontal_m;
    CHECK(std::get<LinkCdf>(hops[1]).mean_snr == doctest::Approx(links::fso_mean_snr(ata)).epsilon(1e-13));
}

TEST_CASE("hybrid air-to-ground hops") {
    ScenarioConfig s;
    s.hybrid_atg = true;
    const auto b = build_fig2_config(Fig2Config::B, s);
    const auto& hops = std::get<SerialScheme>(b.scheme).hops;
    CHECK(std::holds_alternative<links::HybridLinkCdf>(hops[2]));
    const double with = outage_analytical(b).p_out;
    s.hybrid_atg = false;
    const double without = outage_analytical(build_fig2_config(Fig2Config::B, s)).p_out;
    CHECK(with < without);
}

TEST_CASE("invalid scenarios are rejected before building") {
    ScenarioConfig s;
    s.nakagami_m = 0;
    s.horizontal_m = -5.0;
    try {
        build_fig2_config(Fig2Config::A, s);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        const std::string what = e.what();
        CHECK(what.find("nakagami_m") != std::string::npos);
        CHECK(what.find("horizontal_m") != std::string::npos);
    }
}
