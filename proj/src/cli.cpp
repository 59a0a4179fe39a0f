#include "cll/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "cll/analysis.hpp"
#include "cll/config.hpp"
#include "cll/errors.hpp"
#include "cll/iadm.hpp"
#include "cll/io.hpp"
#include "cll/reference.hpp"

namespace cll::cli {

namespace {

namespace fs = std::filesystem;

std::string out_path(const std::string& out_dir, const char* name) {
    fs::create_directories(out_dir);
    return (fs::path(out_dir) / name).string();
}

void emit(const std::string& path, const RunConfig& cfg, const std::string& body) {
    io::write_file(path, render_config(cfg), body);
    std::cout << "wrote " << path << "\n";
}

void require_series(const RunConfig& cfg) {
    if (!cfg.has_series) throw ConfigError("config: missing [series] section");
}

void require_integrator(const RunConfig& cfg) {
    if (!cfg.has_integrator) throw ConfigError("config: missing [integrator] section");
}

int cmd_expand(const RunConfig& cfg, const std::string& out_dir) {
    require_series(cfg);
    const TaylorSeries s = build_series(make_initial_condition(cfg), cfg.params, cfg.order);
    std::ostringstream body;
    io::write_series(body, s);
    emit(out_path(out_dir, "series.txt"), cfg, body.str());
    return 0;
}

int cmd_compare(const RunConfig& cfg, const std::string& out_dir) {
    require_series(cfg);
    require_integrator(cfg);
    std::vector<double> times = cfg.times;
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    if (!times.empty() && times.front() < 0.0) {
        throw ConfigError("config: [analysis] times must be nonnegative");
    }
    if (!times.empty() && times.back() > cfg.integrator.t_end) {
        throw ConfigError("config: [analysis] time " + io::sci(times.back()) +
                          " lies beyond the [integrator] horizon t_end = " +
                          io::sci(cfg.integrator.t_end));
    }

    const ComplexField u0 = make_initial_condition(cfg);
    const TaylorSeries s = build_series(u0, cfg.params, cfg.order);
    const std::vector<int> orders = cfg.orders.empty() ? std::vector<int>{cfg.order} : cfg.orders;

    std::vector<Snapshot> snaps;
    ComplexField state = u0;
    double t_now = 0.0;
    for (double t : times) {
        state = advance_to(state, cfg.params, cfg.integrator.dt, t - t_now, t_now,
                           cfg.integrator.c_stab);
        t_now = t;
        snaps.push_back(Snapshot{t, state});
    }

    const std::vector<ErrorRow> rows = error_table(s, snaps, orders, times);
    std::ostringstream table;
    io::write_error_table(table, rows);
    emit(out_path(out_dir, "error_table.csv"), cfg, table.str());

    std::ostringstream refs;
    io::write_snapshots(refs, snaps);
    emit(out_path(out_dir, "reference.txt"), cfg, refs.str());
    return 0;
}

int cmd_iadm_check(const RunConfig& cfg, const std::string& out_dir) {
    require_series(cfg);
    const ComplexField u0 = make_initial_condition(cfg);
    const TaylorSeries adm = build_series(u0, cfg.params, cfg.order);
    const TaylorSeries via_split = recombine(iadm_build(u0, cfg.params, cfg.order));

    double max_dev = 0.0;
    for (int j = 0; j <= cfg.order; ++j) {
        const double diff_norm =
            sup_norm(adm.coeffs[static_cast<std::size_t>(j)] -
                     via_split.coeffs[static_cast<std::size_t>(j)]);
        const double denom = sup_norm(adm.coeffs[static_cast<std::size_t>(j)]);
        max_dev = std::max(max_dev, denom == 0.0 ? diff_norm : diff_norm / denom);
    }
    const bool pass = max_dev <= 1e-12;
    std::ostringstream body;
    body << "max_rel_deviation = " << io::sci(max_dev) << "\n";
    body << "threshold = " << io::sci(1e-12) << "\n";
    body << "verdict = " << (pass ? "PASS" : "FAIL") << "\n";
    emit(out_path(out_dir, "iadm_check.txt"), cfg, body.str());
    std::cout << "iadm-check: " << (pass ? "PASS" : "FAIL") << " (max_rel_deviation = "
              << io::sci(max_dev) << ")\n";
    return 0;
}

int cmd_radius(const RunConfig& cfg, const std::string& out_dir) {
    require_series(cfg);
    require_integrator(cfg);
    if (cfg.order < cfg.tail_window + 2) {
        throw ConfigError("config: [series] order must be at least tail_window + 2 = " +
                          std::to_string(cfg.tail_window + 2));
    }
    const ComplexField u0 = make_initial_condition(cfg);
    const TaylorSeries s = build_series(u0, cfg.params, cfg.order);
    const RadiusReport report = radius_estimate(s, cfg.tail_window);
    const DivergenceVerdict verdict = divergence_report(s, cfg.params, report, cfg.integrator);

    std::ostringstream radius_body;
    io::write_radius(radius_body, report);
    emit(out_path(out_dir, "radius.csv"), cfg, radius_body.str());

    std::ostringstream div_body;
    io::write_divergence(div_body, verdict);
    emit(out_path(out_dir, "divergence.txt"), cfg, div_body.str());
    std::cout << "global_R = " << io::sci(report.global) << ", verdict = "
              << (verdict.divergence_demonstrated() ? "DIVERGENCE_DEMONSTRATED"
                                                    : "NOT_DEMONSTRATED")
              << "\n";
    return 0;
}

int cmd_oracle(const RunConfig& cfg, const std::string& out_dir) {
    require_series(cfg);
    if (cfg.order < cfg.oracle_max_order) {
        throw ConfigError("config: [series] order must cover [oracle] max_order = " +
                          std::to_string(cfg.oracle_max_order));
    }
    const ComplexField u0 = make_initial_condition(cfg);
    const TaylorSeries s = build_series(u0, cfg.params, cfg.order);

    std::ostringstream body;
    body << "j,rel_dev\n";
    for (int j = 1; j <= cfg.oracle_max_order; ++j) {
        const ComplexField estimate = taylor_oracle(u0, cfg.params, j, cfg.dt_fd);
        const ComplexField& exact = s.coeffs[static_cast<std::size_t>(j)];
        const double denom = sup_norm(exact);
        const double dev = sup_norm(exact - estimate) / (denom == 0.0 ? 1.0 : denom);
        body << j << "," << io::sci(dev) << "\n";
    }
    emit(out_path(out_dir, "oracle.csv"), cfg, body.str());
    return 0;
}

int cmd_soliton_validate(const RunConfig& cfg, const std::string& out_dir) {
    if (!cfg.has_soliton) throw ConfigError("config: missing [soliton] section");
    double r = 0.0;
    try {
        r = residual(cfg.soliton, cfg.params, cfg.grid, cfg.residual_t, cfg.residual_dt_fd);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: [soliton] ") + e.what());
    }
    const bool valid = r <= kResidualThreshold;
    std::ostringstream body;
    body << "t = " << io::sci(cfg.residual_t) << "\n";
    body << "residual = " << io::sci(r) << "\n";
    body << "threshold = " << io::sci(kResidualThreshold) << "\n";
    body << "verdict = " << (valid ? "VALID" : "INVALID") << "\n";
    emit(out_path(out_dir, "soliton_residual.txt"), cfg, body.str());
    std::cout << "soliton-validate: " << (valid ? "VALID" : "INVALID") << " (residual = "
              << io::sci(r) << ")\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"Power-series laboratory for Chen-Lee-Liu-type dispersive equations"};
    app.require_subcommand(1);

    struct SubOpts {
        std::string config;
        std::string out = ".";
    };
    std::map<std::string, SubOpts> opts;
    const std::vector<std::pair<const char*, const char*>> subs = {
        {"expand", "Build the t-power series and write its coefficients"},
        {"compare", "Tabulate series-vs-integrator errors at requested times"},
        {"iadm-check", "Check that the split real recurrence reproduces the complex one"},
        {"radius", "Estimate the convergence radius and run the divergence check"},
        {"oracle", "Compare series coefficients against finite-difference estimates"},
        {"soliton-validate", "Validate candidate travelling-solution parameters by residual"},
    };
    for (const auto& [name, desc] : subs) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("--config", opts[name].config, "Path to the run configuration")
            ->required();
        sub->add_option("--out", opts[name].out, "Output directory (default: current)");
    }

    std::vector<const char*> argv;
    argv.push_back("cll");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    const SubOpts& o = opts[name];
    try {
        const RunConfig cfg = load_config(o.config);
        if (name == "expand") return cmd_expand(cfg, o.out);
        if (name == "compare") return cmd_compare(cfg, o.out);
        if (name == "iadm-check") return cmd_iadm_check(cfg, o.out);
        if (name == "radius") return cmd_radius(cfg, o.out);
        if (name == "oracle") return cmd_oracle(cfg, o.out);
        if (name == "soliton-validate") return cmd_soliton_validate(cfg, o.out);
        std::cerr << "error: unknown subcommand '" << name << "'\n";
        return 2;
    } catch (const SqrtDomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cll::cli
