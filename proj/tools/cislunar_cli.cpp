#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cislunar/blahut_arimoto.hpp"
#include "cislunar/capacity_bounds.hpp"
#include "cislunar/link_budget.hpp"
#include "cislunar/mc_oracle.hpp"
#include "cislunar/scenario.hpp"

namespace {

using namespace cislunar;

std::string g17(double v) {
    char b[48];
    std::snprintf(b, sizeof b, "%.17g", v);
    return b;
}

void kv(const std::string& key, const std::string& value) {
    std::cout << key << " = " << value << "\n";
}
void kv(const std::string& key, double value) { kv(key, g17(value)); }

struct LinkArgs {
    std::string band = "Ka";
    double f_hz = 0.0;   // 0 -> band preset
    double bw_hz = 0.0;  // 0 -> band preset
    double d = 1e7;
    double d_moon = 0.0;  // 0 -> same as d
    double p_t = 1.0;
    double t_b = 0.0;
    double alpha = 1.8;
    double m = 15.0;
};

void run_linkbudget(const LinkArgs& a, const std::string& gains) {
    Band band = parse_band(a.band);
    double f = a.f_hz > 0.0 ? a.f_hz : band_frequency(band);
    double bw = a.bw_hz > 0.0 ? a.bw_hz : band_bandwidth(band);
    AntennaSpec tx = reference_tx_antenna();
    AntennaSpec rx = reference_rx_antenna();
    RfChain chain = reference_chain();
    double gt, gr;
    if (gains == "table") {
        gt = from_db(table_gain_tx_dbi(band));
        gr = from_db(table_gain_rx_dbi(band));
    } else {
        gt = antenna_gain(tx, f);
        gr = antenna_gain(rx, f);
    }
    Geometry geom(a.d, a.d_moon);
    double om = moon_solid_angle(geom);
    double oa = antenna_solid_angle(rx, f);
    double dt_ext = external_antenna_temp(a.t_b, om, oa);
    double t_op = operational_temp(rx, chain, dt_ext);
    NoiseBudget nb = noise_budget(t_op, bw, a.alpha);
    double p_r = friis_received_power(a.p_t, gt, gr, f, a.d, from_db(chain.loss_tx_db),
                                      from_db(chain.loss_rx_db));
    double p_c = amplitude_constraint(p_r);
    NakagamiParams fading(a.m);
    SnrDistribution dist = SnrDistribution::from_physical(p_c, a.alpha, nb.lambda_n, fading);
    double cap_bpcu = ergodic_capacity_lb_quadrature(dist);
    double spread = 4.0 * 3.14159265358979323846 * f * a.d / kSpeedOfLight;

    kv("band", band_name(band));
    kv("f_hz", f);
    kv("bw_hz", bw);
    kv("d_m", a.d);
    kv("p_t_w", a.p_t);
    kv("t_b_k", a.t_b);
    kv("alpha", a.alpha);
    kv("m", a.m);
    kv("gains_mode", gains);
    kv("g_t_dbi", to_db(gt));
    kv("g_r_dbi", to_db(gr));
    kv("path_loss_db", to_db(spread * spread));
    kv("p_r_w", p_r);
    kv("p_r_dbw", to_db(p_r));
    kv("p_c", p_c);
    kv("omega_m_sr", om);
    kv("omega_a_sr", oa);
    kv("delta_t_ext_k", dt_ext);
    kv("t_op_k", t_op);
    kv("n0_w_per_hz", nb.n0);
    kv("noise_power_w", nb.noise_power);
    kv("noise_power_dbw", to_db(nb.noise_power));
    kv("sigma", nb.sigma);
    kv("lambda_n", nb.lambda_n);
    kv("xi", dist.xi);
    kv("gamma_bar", dist.gamma_bar);
    kv("gamma_bar_db", to_db(dist.gamma_bar));
    kv("capacity_bpcu", cap_bpcu);
    kv("capacity_bps", bw * cap_bpcu);
}

struct BoundArgs {
    double alpha = 1.8;
    double m = 1.0;
    double gamma_bar = -1.0;  // <0 -> derive from p_c / lambda_n
    double p_c = 0.0;
    double lambda_n = 0.0;
    std::string method = "quadrature";
    double gamma_th_db = 0.0;
};

SnrDistribution make_dist(const BoundArgs& b) {
    NakagamiParams fading(b.m);
    if (b.gamma_bar >= 0.0) return SnrDistribution(b.alpha, fading, b.gamma_bar);
    if (b.p_c > 0.0 && b.lambda_n > 0.0)
        return SnrDistribution::from_physical(b.p_c, b.alpha, b.lambda_n, fading);
    throw std::invalid_argument(
        "bound: supply --gamma-bar, or both --p-c and --lambda-n");
}

struct BaArgs {
    double alpha = 1.8;
    double m = 1.0;
    double p_c = 5.0;
    double lambda_n = 0.70710678118654752;
    double h = 0.0;  // >0 -> single fixed-fading run instead of the ergodic average
    BaConfig cfg;
};

int run_ba(const BaArgs& a, const std::string& format) {
    BaConfig cfg = a.cfg;
    cfg.p_c = a.p_c;
    if (a.h > 0.0) {
        DiscreteChannel ch = build_channel(a.alpha, a.lambda_n, a.h, cfg);
        BaResult res = ba_capacity(ch, a.p_c, cfg);
        if (format == "csv") {
            std::string out = "x,r\n";
            for (int i = 0; i < ch.mx(); ++i)
                out += g17(ch.inputs[i]) + "," + g17(res.r[i]) + "\n";
            out += "# capacity_bpcu = " + g17(res.capacity) + "\n";
            std::cout << out;
        } else {
            double e_abs = 0.0;
            for (int i = 0; i < ch.mx(); ++i) e_abs += res.r[i] * std::fabs(ch.inputs[i]);
            kv("h", a.h);
            kv("capacity_bpcu", res.capacity);
            kv("iterations", static_cast<double>(res.iterations));
            kv("nu", res.nu);
            kv("converged", res.converged ? "1" : "0");
            kv("monotone", res.monotone ? "1" : "0");
            kv("e_abs_x", e_abs);
        }
        return res.converged ? 0 : 1;
    }
    NakagamiParams fading(a.m);
    SnrDistribution dist = SnrDistribution::from_physical(a.p_c, a.alpha, a.lambda_n, fading);
    ErgodicBaResult res = ergodic_ba(a.alpha, a.lambda_n, dist, cfg);
    if (format == "csv") {
        std::cout << format_ba_csv(res);
    } else {
        kv("gamma_bar", dist.gamma_bar);
        kv("grid_points", static_cast<double>(res.grid.points.size()));
        kv("raw_weight_sum", res.grid.raw_weight_sum);
        kv("ergodic_capacity_bpcu", res.capacity);
    }
    return 0;
}

struct SweepArgs {
    std::string band = "Ka";
    double tb_min = 0.0, tb_max = 600.0, tb_step = 25.0;
    std::vector<double> alpha_set = {1.8, 1.9, 2.0};
    std::vector<double> m_set = {1.0, 5.0, 15.0};
    std::vector<double> distances = {1e7, 7e7};
    std::vector<double> p_t_set = {1.0, 10.0};
    double gamma_th_db = ScenarioConfig::kAutoGammaTh;
    bool no_plots = false;
    std::string csv_name = "sweep.csv";
};

int run_sweep_cmd(const SweepArgs& a, const std::string& gains, const std::string& out_dir) {
    ScenarioConfig cfg;
    cfg.band = parse_band(a.band);
    if (!(a.tb_step > 0.0) || a.tb_max < a.tb_min)
        throw std::invalid_argument("sweep: need t-b-step > 0 and t-b-max >= t-b-min");
    for (double t = a.tb_min; t <= a.tb_max + 1e-9 * a.tb_step; t += a.tb_step)
        cfg.t_b_grid.push_back(t);
    cfg.alpha_set = a.alpha_set;
    cfg.m_set = a.m_set;
    cfg.distances = a.distances;
    cfg.p_t_set = a.p_t_set;
    cfg.gamma_th_db = a.gamma_th_db;
    cfg.gains_mode = gains == "table" ? GainsMode::Table : GainsMode::Computed;

    SweepResult res = run_sweep(cfg);
    std::filesystem::create_directories(out_dir);
    std::string csv_path = out_dir + "/" + a.csv_name;
    std::vector<std::string> metadata = {
        "tool = cislunar sweep",
        "band = " + band_name(cfg.band),
        "gains_mode = " + std::string(gains),
        "gamma_th_db = " + (cfg.gamma_th_db == ScenarioConfig::kAutoGammaTh
                                ? std::string("auto")
                                : g17(cfg.gamma_th_db)),
    };
    {
        std::ofstream f(csv_path);
        if (!f) throw std::runtime_error("sweep: cannot open " + csv_path);
        f << format_sweep_csv(res.rows, metadata);
        f.flush();
        if (!f) throw std::runtime_error("sweep: write failed on " + csv_path);
    }
    std::vector<std::string> warnings;
    std::vector<std::string> plots;
    if (!a.no_plots) plots = emit_plots(res.rows, out_dir + "/fig", &warnings);
    for (const auto& e : res.errors) std::cerr << "row error: " << e << "\n";
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    kv("rows", static_cast<double>(res.rows.size()));
    kv("row_errors", static_cast<double>(res.errors.size()));
    kv("csv", csv_path);
    kv("plots", static_cast<double>(plots.size()));
    if (res.rows.empty() && !res.errors.empty())
        throw std::runtime_error("sweep: every grid point failed");
    return 0;
}

int run_validate(long n, std::uint64_t seed) {
    McConfig mc;
    mc.n_samples = n;
    mc.seed = seed;
    ValidationReport rep = run_validation(mc);
    for (const auto& c : rep.checks)
        std::printf("%s %s expected=%.10g actual=%.10g tol=%.3g\n",
                    c.pass ? "PASS" : "FAIL", c.name.c_str(), c.expected, c.actual,
                    c.tolerance);
    kv("checks", static_cast<double>(rep.checks.size()));
    kv("failures", static_cast<double>(rep.n_fail()));
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Capacity and reliability bounds for lunar links under additive symmetric "
        "alpha-stable noise and Nakagami-m fading"};
    app.set_config("--config", "", "Flat key = value configuration file ('#' comments)");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.require_subcommand(1);

    std::uint64_t seed = 0xC15;
    std::string out_dir = ".";
    std::string gains = "table";
    std::string format = "text";
    bool eq14_literal = false;
    app.add_option("--seed", seed, "RNG seed")->capture_default_str();
    app.add_option("--out", out_dir, "Output directory")->capture_default_str();
    app.add_option("--gains", gains, "Antenna gain source")
        ->check(CLI::IsMember({"table", "computed"}))
        ->capture_default_str();
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "csv"}))
        ->capture_default_str();
    app.add_flag("--paper-eq14-literal", eq14_literal,
                 "Evaluate the Moon solid angle exactly as printed in the source "
                 "(rejected; see error message)");

    LinkArgs la;
    CLI::App* lb = app.add_subcommand("linkbudget", "One-shot link budget report");
    lb->fallthrough();
    lb->add_option("--band", la.band, "S or Ka")->capture_default_str();
    lb->add_option("--f-hz", la.f_hz, "Carrier override (0 = band preset)");
    lb->add_option("--bw-hz", la.bw_hz, "Bandwidth override (0 = band preset)");
    lb->add_option("--distance", la.d, "Tx-Rx distance, m")->capture_default_str();
    lb->add_option("--d-moon", la.d_moon, "Antenna-to-Moon-center distance, m (0 = distance)");
    lb->add_option("--p-t", la.p_t, "Transmit power, W")->capture_default_str();
    lb->add_option("--t-b", la.t_b, "Moon brightness temperature, K")->capture_default_str();
    lb->add_option("--alpha", la.alpha, "Stable characteristic exponent")->capture_default_str();
    lb->add_option("--m", la.m, "Nakagami shape")->capture_default_str();

    BoundArgs ba_args;
    CLI::App* bound = app.add_subcommand("bound", "Single-point bound evaluation");
    bound->require_subcommand(1);
    bound->fallthrough();
    bound->add_option("--alpha", ba_args.alpha, "Stable characteristic exponent")
        ->capture_default_str();
    bound->add_option("--m", ba_args.m, "Nakagami shape")->capture_default_str();
    bound->add_option("--gamma-bar", ba_args.gamma_bar, "Mean effective SNR (linear)");
    bound->add_option("--p-c", ba_args.p_c, "Amplitude constraint");
    bound->add_option("--lambda-n", ba_args.lambda_n, "Noise scale");
    CLI::App* erg = bound->add_subcommand("ergodic", "Ergodic capacity lower bound, bpcu");
    erg->fallthrough();
    erg->add_option("--method", ba_args.method, "quadrature or meijerg")
        ->check(CLI::IsMember({"quadrature", "meijerg"}))
        ->capture_default_str();
    CLI::App* outg = bound->add_subcommand("outage", "Outage probability upper bound");
    outg->fallthrough();
    outg->add_option("--gamma-th-db", ba_args.gamma_th_db, "Outage threshold, dB")
        ->required();

    BaArgs ba;
    CLI::App* bacmd =
        app.add_subcommand("ba", "Constrained Blahut-Arimoto capacity (single h or ergodic)");
    bacmd->fallthrough();
    bacmd->add_option("--alpha", ba.alpha, "Stable characteristic exponent")
        ->capture_default_str();
    bacmd->add_option("--m", ba.m, "Nakagami shape")->capture_default_str();
    bacmd->add_option("--p-c", ba.p_c, "Amplitude constraint E|X|")->capture_default_str();
    bacmd->add_option("--lambda-n", ba.lambda_n, "Noise scale")->capture_default_str();
    bacmd->add_option("--h-fixed", ba.h, "Fixed fading amplitude (0 = ergodic average)");
    bacmd->add_option("--epsilon", ba.cfg.epsilon, "Stopping increment, bpcu")
        ->capture_default_str();
    bacmd->add_option("--max-iter", ba.cfg.max_iter, "Iteration cap")->capture_default_str();
    bacmd->add_option("--m-x", ba.cfg.m_x, "Input alphabet size")->capture_default_str();
    bacmd->add_option("--m-n", ba.cfg.m_n, "Output alphabet size")->capture_default_str();
    bacmd->add_option("--x-max-factor", ba.cfg.x_max_factor, "Input grid extent / P_c")
        ->capture_default_str();
    bacmd->add_option("--n-h", ba.cfg.n_h, "Fading grid points")->capture_default_str();

    SweepArgs sa;
    CLI::App* sweep = app.add_subcommand("sweep", "Grid sweep to CSV and SVG plots");
    sweep->fallthrough();
    sweep->add_option("--band", sa.band, "S or Ka")->capture_default_str();
    sweep->add_option("--t-b-min", sa.tb_min, "Brightness grid start, K")->capture_default_str();
    sweep->add_option("--t-b-max", sa.tb_max, "Brightness grid end, K")->capture_default_str();
    sweep->add_option("--t-b-step", sa.tb_step, "Brightness grid step, K")
        ->capture_default_str();
    sweep->add_option("--alpha-set", sa.alpha_set, "Alpha grid")
        ->delimiter(',')
        ->capture_default_str();
    sweep->add_option("--m-set", sa.m_set, "Nakagami shape grid")
        ->delimiter(',')
        ->capture_default_str();
    sweep->add_option("--distances", sa.distances, "Distance grid, m")
        ->delimiter(',')
        ->capture_default_str();
    sweep->add_option("--p-t-set", sa.p_t_set, "Transmit power grid, W")
        ->delimiter(',')
        ->capture_default_str();
    sweep->add_option("--gamma-th-db", sa.gamma_th_db,
                      "Outage threshold, dB (omit for per-panel defaults)");
    sweep->add_flag("--no-plots", sa.no_plots, "Skip SVG generation");
    sweep->add_option("--csv-name", sa.csv_name, "CSV file name inside --out")
        ->capture_default_str();

    long val_n = 1000000;
    CLI::App* validate = app.add_subcommand("validate", "Monte-Carlo validation suite");
    validate->fallthrough();
    validate->add_option("--n", val_n, "Samples per check")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (eq14_literal) {
        std::cerr << "error: the printed Moon-solid-angle expression divides by d_M^2 and is "
                     "dimensionally inconsistent (it does not yield steradians); this tool "
                     "always evaluates the spherical-cap form 2*pi*(1 - sqrt(d_M^2 - R_M^2)/"
                     "d_M) and offers no literal mode\n";
        return 2;
    }

    try {
        if (*lb) {
            run_linkbudget(la, gains);
            return 0;
        }
        if (*bound) {
            SnrDistribution dist = make_dist(ba_args);
            kv("alpha", ba_args.alpha);
            kv("m", ba_args.m);
            kv("gamma_bar", dist.gamma_bar);
            if (*erg) {
                double v;
                if (ba_args.method == "meijerg") {
                    RationalAlpha ra = rational_alpha(ba_args.alpha);
                    v = ergodic_capacity_lb_meijerg(dist, ra);
                } else {
                    v = ergodic_capacity_lb_quadrature(dist);
                }
                kv("method", ba_args.method);
                kv("ergodic_capacity_bpcu", v);
            } else {
                double gth = from_db(ba_args.gamma_th_db);
                kv("gamma_th_db", ba_args.gamma_th_db);
                kv("gamma_th", gth);
                kv("outage_ub", outage_ub(dist, gth));
            }
            return 0;
        }
        if (*bacmd) return run_ba(ba, format);
        if (*sweep) return run_sweep_cmd(sa, gains, out_dir);
        if (*validate) return run_validate(val_n, seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
