#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "semsup/config.hpp"
#include "semsup/errors.hpp"
#include "semsup/oracle.hpp"

namespace fs = std::filesystem;
using namespace semsup;

namespace {

fs::path out_dir() {
    if (const char* env = std::getenv("SEMSUP_OUT_DIR")) {
        fs::path p(env);
        fs::create_directories(p);
        return p;
    }
    return fs::current_path();
}

void write_trace_csv(const fs::path& path, const PopulationTrace& trace) {
    std::ofstream f(path);
    if (!f) throw ConfigError("cannot write '" + path.string() + "'");
    f << "t_s,pi,reference\n";
    char buf[128];
    for (size_t i = 0; i < trace.times.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", trace.times[i],
                      trace.pi[i], trace.reference[i]);
        f << buf;
    }
}

std::string value_stamp(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

int cmd_run(const std::string& config_path, std::string output) {
    RunConfig cfg = load_run_config(config_path);
    LevelScheme scheme = load_level_scheme(cfg.scheme);
    PopulationTrace trace = run_simulation(scheme, cfg.sim);
    fs::path out = output.empty() ? out_dir() / "trace.csv" : fs::path(output);
    write_trace_csv(out, trace);
    std::cout << out.string() << "\n";
    return 0;
}

struct SweepResult {
    double value = 0.0;
    std::string file;
    double metric = 0.0;
    std::string status; // "ok" or the error message
};

int cmd_sweep(const std::string& config_path, std::string param,
              std::vector<double> values, const std::string& preset) {
    if (!preset.empty()) {
        const double pi = M_PI;
        if (preset == "fig4") {
            param = "rabi_12";
            values = {1e12, 3e12, 5e12, 8e12, 10e12, 12e12};
        } else if (preset == "fig5") {
            param = "omega_bar";
            values = {1e2, 1e4, 1e6, 1e7, 1e8, 1e9};
        } else if (preset == "fig6") {
            param = "phase";
            values = {-0.25 * pi, 0.0, 0.25 * pi, 0.5 * pi, 0.75 * pi, pi};
        } else if (preset == "fig7a") {
            param = "cutoff_w";
            values = {100, 300, 500, 1000, 2000, 3000};
        } else if (preset == "fig7b") {
            param = "photon_number";
            values = {1e4, 1e5, 1e6, 1e7, 1e8, 1e9};
        } else if (preset == "fig7c") {
            param = "rho";
            values = {1e-5, 1e-4, 1e-3, 1e-2, 1e-1, 1.0};
        } else if (preset == "fig7d") {
            param = "delta_n";
            values = {3000, 5000, 8000, 10000, 12000, 15000};
        } else {
            throw ConfigError("unknown preset '" + preset + "'");
        }
    }
    if (param.empty()) throw ConfigError("sweep needs --param or --preset");
    if (values.empty()) throw ConfigError("sweep needs a nonempty value list");

    const RunConfig base = load_run_config(config_path);
    const fs::path dir = out_dir();
    std::vector<SweepResult> results(values.size());

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < values.size(); i = next.fetch_add(1)) {
            SweepResult& r = results[i];
            r.value = values[i];
            r.file = param + "_" + value_stamp(values[i]) + ".csv";
            try {
                RunConfig cfg = base;
                // shrinking the photon number must keep the Fock window inside
                // the nonnegative Fock range
                if (param == "photon_number" && values[i] - cfg.sim.delta_n < 0.0)
                    cfg.sim.delta_n = static_cast<int>(values[i]) - 1;
                apply_parameter(cfg, param, values[i]);
                LevelScheme scheme = load_level_scheme(cfg.scheme);
                PopulationTrace trace = run_simulation(scheme, cfg.sim);
                write_trace_csv(dir / r.file, trace);
                r.metric = trapping_metric(trace, scheme.main_gamma());
                r.status = "ok";
            } catch (const std::exception& e) {
                r.status = e.what();
            }
        }
    };
    const size_t nthreads =
        std::min(values.size(),
                 static_cast<size_t>(std::max(1u, std::thread::hardware_concurrency())));
    std::vector<std::thread> pool;
    for (size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::ofstream manifest(dir / "manifest.csv");
    manifest << "parameter,value,file,trapping_metric,status\n";
    char buf[64];
    for (const SweepResult& r : results) {
        std::snprintf(buf, sizeof buf, "%.17g", r.metric);
        manifest << param << ',' << value_stamp(r.value) << ',' << r.file << ','
                 << (r.status == "ok" ? buf : "") << ",\"" << r.status << "\"\n";
    }
    std::cout << (dir / "manifest.csv").string() << "\n";
    return 0;
}

int cmd_oracle(const std::string& config_path) {
    RunConfig cfg = load_run_config(config_path);
    LevelScheme scheme = load_level_scheme(cfg.scheme);

    SimulationConfig sim = cfg.sim;
    sim.delta_n = cfg.oracle_delta_n;
    sim.cutoff_w = cfg.oracle_cutoff_w;
    sim.field.photon_number = cfg.oracle_photon_number;
    sim.t_max = 1.0 / scheme.main_gamma();
    sim.output_points = 101;

    const double half_width = cfg.oracle_half_width > 0.0
                                  ? cfg.oracle_half_width
                                  : 40.0 * scheme.main_gamma();
    EffectiveCouplings base =
        evaluate_couplings(scheme, sim.field, scheme.main_omega());
    const double center = effective_frequency(scheme, base, sim.field.photon_number);
    VacuumModeGrid grid = discretize_vacuum(scheme.main_gamma(), center, half_width,
                                            cfg.oracle_mode_count);

    FullTrace full = integrate_full(scheme, sim, grid);
    PopulationTrace reduced = run_simulation(scheme, sim);
    CompareReport rep =
        compare_traces(full.trace, reduced, cfg.oracle_rel_tol, cfg.oracle_rel_tol);

    const fs::path out = out_dir() / "oracle.csv";
    std::ofstream f(out);
    f << "t_s,pi_full,pi_reduced,norm\n";
    char buf[160];
    for (size_t i = 0; i < full.trace.times.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", full.trace.times[i],
                      full.trace.pi[i], reduced.pi[i], full.norm[i]);
        f << buf;
    }
    std::printf("max_abs %.3e at t = %.3e s; max_rel %.3e at t = %.3e s; %s\n",
                rep.max_abs, rep.t_at_abs, rep.max_rel, rep.t_at_rel,
                rep.pass ? "PASS" : "FAIL");
    return rep.pass ? 0 : 1;
}

int cmd_dump(const std::string& config_path, const std::string& pathway_file) {
    RunConfig cfg = load_run_config(config_path);
    LevelScheme scheme = load_level_scheme(cfg.scheme);
    EOMCoefficients eom = assemble_eom_coefficients(scheme, cfg.sim.field, cfg.sim.rho);
    EffectiveCouplings cs =
        evaluate_couplings(scheme, cfg.sim.field, eom.omega_eff);

    std::printf("omega_eff_rad_per_s %.17g\n", eom.omega_eff);
    for (int i = 0; i <= 12; ++i)
        std::printf("alpha%-2d %+.10e %+.10e\n", i, cs.alpha[i].real(), cs.alpha[i].imag());
    for (int i = 1; i <= 4; ++i)
        std::printf("beta%-3d %+.10e %+.10e\n", i, cs.beta[i].real(), cs.beta[i].imag());
    for (int i = 0; i <= 8; ++i)
        std::printf("c%-6d %+.10e %+.10e\n", i, eom.c[i].real(), eom.c[i].imag());
    std::printf("d3      %+.10e %+.10e\n", eom.d3.real(), eom.d3.imag());
    std::printf("d4      %+.10e %+.10e\n", eom.d4.real(), eom.d4.imag());

    if (!pathway_file.empty()) {
        std::ofstream f(pathway_file);
        if (!f) throw ConfigError("cannot write '" + pathway_file + "'");
        write_pathway_csv(f, pathway_table(scheme, cfg.sim.field));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spontaneous-emission suppression simulator"};
    app.require_subcommand(1);

    std::string config_path, output, param, preset, pathway_file;
    std::vector<double> values;

    auto* run = app.add_subcommand("run", "single simulation run -> trace CSV");
    run->add_option("config", config_path, "config file")->required();
    run->add_option("-o,--output", output, "output CSV path");

    auto* sweep = app.add_subcommand("sweep", "parameter sweep -> CSVs + manifest");
    sweep->add_option("config", config_path, "config file")->required();
    sweep->add_option("--param", param, "parameter name");
    sweep->add_option("--values", values, "comma-separated values")->delimiter(',');
    sweep->add_option("--preset", preset, "fig4|fig5|fig6|fig7a|fig7b|fig7c|fig7d");

    auto* oracle = app.add_subcommand("oracle", "reduced-vs-unreduced check");
    oracle->add_option("config", config_path, "config file")->required();

    auto* dump = app.add_subcommand("dump-couplings", "alpha/beta/c/d audit table");
    dump->add_option("config", config_path, "config file")->required();
    dump->add_option("--pathways", pathway_file, "pathway-table CSV path");

    try {
        app.parse(argc, argv);
        if (*run) return cmd_run(config_path, output);
        if (*sweep) return cmd_sweep(config_path, param, values, preset);
        if (*oracle) return cmd_oracle(config_path);
        if (*dump) return cmd_dump(config_path, pathway_file);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const PhysicsError& e) {
        std::cerr << "physics error: " << e.what() << "\n";
        return 3;
    } catch (const IntegratorError& e) {
        std::cerr << "integrator error: " << e.what() << "\n";
        return 4;
    } catch (const OracleSizeError& e) {
        std::cerr << "oracle error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
