#include "aerolink/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "aerolink/experiments.hpp"
#include "aerolink/units.hpp"

namespace aerolink::cli {

namespace {

using experiments::ConfigFile;
using relaying::Fig2Config;

struct Options {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> samples;
    std::optional<unsigned> threads;
    std::string output_path;
    std::string preset = "fig2b";
    bool with_mc = false;
};

std::string sci(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 8);
    return std::string(buf, res.ptr);
}

std::string fixed(double x, int digits = 2) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, digits);
    return std::string(buf, res.ptr);
}

std::optional<std::uint64_t> env_seed() {
    const char* raw = std::getenv("AEROLINK_SEED");
    if (!raw || !*raw) return std::nullopt;
    std::string text(raw);
    std::uint64_t seed = 0;
    int base = 10;
    const char* first = text.data();
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        base = 16;
        first += 2;
    }
    const auto res = std::from_chars(first, text.data() + text.size(), seed, base);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw std::invalid_argument("AEROLINK_SEED is not an unsigned integer: " + text);
    }
    return seed;
}

// Seed precedence: --seed, then an explicit config seed, then AEROLINK_SEED, then the default.
ConfigFile resolve(const Options& opt) {
    ConfigFile config = opt.config_path.empty() ? ConfigFile{} : experiments::load_config(opt.config_path);
    if (opt.seed) {
        config.mc.master_seed = *opt.seed;
    } else if (!config.mc_seed_set) {
        if (auto s = env_seed()) config.mc.master_seed = *s;
    }
    if (opt.samples) config.mc.samples = *opt.samples;
    if (opt.threads) config.mc.threads = *opt.threads;
    if (config.mc.batch_size > config.mc.samples) config.mc.batch_size = 0;
    mc::validate(config.mc);
    return config;
}

std::string describe_family(const links::LinkCdf& link) {
    if (const auto* n = std::get_if<links::NakagamiErlang>(&link.family)) {
        return "nakagami(m=" + std::to_string(n->m) + ")";
    }
    const auto& ew = std::get<links::ExpWeibull>(link.family).ew;
    return "exp-weibull(alpha=" + sci(ew.alpha) + ", beta=" + sci(ew.beta) + ", eta=" + sci(ew.eta) + ")";
}

std::string describe_hop(const links::HopCdf& hop) {
    if (const auto* link = std::get_if<links::LinkCdf>(&hop)) {
        return describe_family(*link) + " mean=" + fixed(to_db(link->mean_snr)) + " dB";
    }
    const auto& h = std::get<links::HybridLinkCdf>(hop);
    return "hybrid[fso: " + describe_family(h.fso) + " mean=" + fixed(to_db(h.fso.mean_snr)) +
           " dB | rf: " + describe_family(h.rf) + " mean=" + fixed(to_db(h.rf.mean_snr)) + " dB]";
}

int cmd_presets(const Options& opt, std::ostream& out) {
    const auto config = resolve(opt);
    const auto& s = config.scenario;
    for (auto which : relaying::all_fig2_configs) {
        const auto labeled = relaying::build_fig2_labeled(which, s);
        out << relaying::preset_id(which) << ": " << links::to_string(relaying::cr_mode_of(which)) << ' '
            << (relaying::is_parallel(which) ? "parallel" : "serial") << ", threshold " << s.threshold_db
            << " dB";
        if (relaying::is_parallel(which)) out << ", K=" << s.parallel_branches;
        out << ", d=" << s.horizontal_m << " m, h_u=" << s.urn_altitude_m << " m, h_s=" << s.haps_altitude_m
            << " m, f_c=" << s.carrier_hz << " Hz, P_t=" << s.tx_power_dbm << " dBm, P_n=" << s.noise_power_dbm
            << " dBm\n";
        for (const auto& hop : labeled.hops) {
            out << "  " << hop.label << ": " << describe_hop(hop.cdf) << '\n';
        }
    }
    return exit_ok;
}

int cmd_outage(const Options& opt, std::ostream& out, std::ostream& err) {
    const auto which = relaying::parse_preset_id(opt.preset);
    if (!which) {
        err << "unknown preset '" << opt.preset << "' (expected fig2a..fig2d)\n";
        return exit_validation;
    }
    const auto config = resolve(opt);
    const auto topology = relaying::build_fig2_config(*which, config.scenario);
    const auto analytical = relaying::outage_analytical(topology);
    out << relaying::preset_id(*which) << " threshold=" << config.scenario.threshold_db << " dB\n";
    out << "analytical p_out = " << sci(analytical.p_out) << '\n';
    if (opt.with_mc) {
        const auto est = mc::mc_outage(topology, config.mc);
        out << "montecarlo p_out = " << sci(est.p_out) << " ci95 = " << sci(est.ci95_halfwidth)
            << " samples = " << est.samples << " seed = " << config.mc.master_seed << '\n';
        if (!est.warning.empty()) err << "warning: " << est.warning << '\n';
    }
    return exit_ok;
}

int cmd_validate(const Options& opt, std::ostream& out) {
    const auto config = resolve(opt);
    bool all_pass = true;
    std::uint64_t point = 0;
    for (auto which : relaying::all_fig2_configs) {
        auto cfg = config.mc;
        cfg.point_index = point++;
        const auto topology = relaying::build_fig2_config(which, config.scenario);
        const auto report = mc::mc_vs_analytical(topology, cfg);
        all_pass = all_pass && report.pass;
        out << relaying::preset_id(which) << ' ' << (report.pass ? "PASS" : "FAIL")
            << " analytical=" << sci(report.p_analytical) << " montecarlo=" << sci(report.p_mc)
            << " z=" << fixed(report.z_score, 3) << " samples=" << report.mc.samples << '\n';
    }
    return all_pass ? exit_ok : exit_validation;
}

int cmd_sweep(const Options& opt, std::ostream& out, std::ostream& err) {
    const auto config = resolve(opt);
    if (!config.sweep) {
        err << "sweep needs a config file with a [sweep] section (--config)\n";
        return exit_validation;
    }
    const auto table = experiments::run_sweep(config.scenario, *config.sweep, config.mc);
    if (opt.output_path.empty()) {
        out << experiments::format_csv(table);
    } else {
        experiments::emit_csv(table, opt.output_path);
    }
    return exit_ok;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Outage analysis for CR RF/FSO aerial relay networks", "aerolink"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--config", opt.config_path, "Scenario config file");
    app.add_option("--seed", opt.seed, "Monte Carlo master seed (overrides AEROLINK_SEED)");
    app.add_option("--samples", opt.samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
    app.add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
    app.add_option("--output", opt.output_path, "Write CSV here instead of stdout");

    auto* outage = app.add_subcommand("outage", "Outage of one preset topology");
    outage->add_option("--preset", opt.preset, "fig2a | fig2b | fig2c | fig2d");
    outage->add_flag("--mc", opt.with_mc, "Also run the Monte Carlo estimate");
    auto* sweep = app.add_subcommand("sweep", "Run the [sweep] section of --config and emit CSV");
    auto* validate = app.add_subcommand("validate", "Monte Carlo vs analytical outage for all presets");
    auto* presets = app.add_subcommand("presets", "List the presets with resolved parameters");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return exit_validation;
    }

    try {
        if (outage->parsed()) return cmd_outage(opt, out, err);
        if (sweep->parsed()) return cmd_sweep(opt, out, err);
        if (validate->parsed()) return cmd_validate(opt, out);
        if (presets->parsed()) return cmd_presets(opt, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_validation;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_validation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_runtime;
    }
    return exit_validation;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return cli_main(args, std::cout, std::cerr);
}

}  // namespace aerolink::cli
