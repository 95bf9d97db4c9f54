#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cislunar/blahut_arimoto.hpp"
#include "cislunar/capacity_bounds.hpp"
#include "cislunar/link_budget.hpp"
#include "cislunar/mc_oracle.hpp"
#include "cislunar/scenario.hpp"

namespace py = pybind11;
using namespace cislunar;

namespace {

SnrDistribution dist_of(double alpha, double m, double gamma_bar) {
    return SnrDistribution(alpha, NakagamiParams(m), gamma_bar);
}

py::dict row_dict(const SweepRow& r) {
    py::dict d;
    d["band"] = r.band;
    d["f_hz"] = r.f_hz;
    d["bw_hz"] = r.bw_hz;
    d["t_b_k"] = r.t_b_k;
    d["alpha"] = r.alpha;
    d["m"] = r.m;
    d["d_m"] = r.d_m;
    d["p_t_w"] = r.p_t_w;
    d["t_op_k"] = r.t_op_k;
    d["p_r_dbw"] = r.p_r_dbw;
    d["lambda_n"] = r.lambda_n;
    d["gamma_bar"] = r.gamma_bar;
    d["capacity_bps"] = r.capacity_bps;
    d["outage_ub"] = r.outage_ub;
    return d;
}

ScenarioConfig scenario_of(const std::string& band, std::vector<double> t_b_grid,
                           std::vector<double> alpha_set, std::vector<double> m_set,
                           std::vector<double> distances, std::vector<double> p_t_set,
                           std::optional<double> gamma_th_db, const std::string& gains) {
    ScenarioConfig cfg = default_scenario(parse_band(band));
    if (!t_b_grid.empty()) cfg.t_b_grid = std::move(t_b_grid);
    if (!alpha_set.empty()) cfg.alpha_set = std::move(alpha_set);
    if (!m_set.empty()) cfg.m_set = std::move(m_set);
    if (!distances.empty()) cfg.distances = std::move(distances);
    if (!p_t_set.empty()) cfg.p_t_set = std::move(p_t_set);
    if (gamma_th_db) cfg.gamma_th_db = *gamma_th_db;
    if (gains == "computed")
        cfg.gains_mode = GainsMode::Computed;
    else if (gains != "table")
        throw std::invalid_argument("gains must be 'table' or 'computed'");
    return cfg;
}

BaConfig ba_config(double p_c, int m_x, int m_n, double x_max_factor, double epsilon,
                   int max_iter, int n_h) {
    BaConfig cfg;
    cfg.p_c = p_c;
    cfg.m_x = m_x;
    cfg.m_n = m_n;
    cfg.x_max_factor = x_max_factor;
    cfg.epsilon = epsilon;
    cfg.max_iter = max_iter;
    cfg.n_h = n_h;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() =
        "Capacity and reliability bounds for lunar links under additive symmetric "
        "alpha-stable noise and Nakagami-m fading";

    mod.def(
        "sas_pdf",
        [](double alpha, double lam, double z) { return sas_pdf(StableParams(alpha, 0.0, lam), z); },
        py::arg("alpha"), py::arg("lam"), py::arg("z"),
        "Symmetric alpha-stable density at z");

    mod.def(
        "mean_abs",
        [](double alpha, double lam) { return mean_abs(StableParams(alpha, 0.0, lam)); },
        py::arg("alpha"), py::arg("lam"), "First absolute moment of the symmetric stable law");

    mod.def(
        "char_fn",
        [](double alpha, double beta, double lam, double t, double mu) {
            return char_fn(StableParams(alpha, beta, lam, mu), t);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("lam"), py::arg("t"), py::arg("mu") = 0.0,
        "Stable characteristic function at t");

    mod.def("noise_truncation_radius", &noise_truncation_radius, py::arg("alpha"),
            py::arg("lam"), py::arg("tail_mass") = 1e-4, py::arg("density_floor") = 1e-12);

    mod.def(
        "alpha_moment",
        [](double m, double alpha, double omega) {
            return alpha_moment(NakagamiParams(m, omega), alpha);
        },
        py::arg("m"), py::arg("alpha"), py::arg("omega") = 1.0,
        "Fractional Nakagami moment E[|h|^alpha]");

    mod.def("rician_to_m", &rician_to_m, py::arg("k_factor"));

    mod.def("instantaneous_snr", &instantaneous_snr, py::arg("p_c"), py::arg("h"),
            py::arg("alpha"), py::arg("lambda_n"));

    mod.def(
        "gamma_bar_from",
        [](double p_c, double alpha, double lambda_n, double m, double omega) {
            return gamma_bar_from(p_c, alpha, lambda_n, NakagamiParams(m, omega));
        },
        py::arg("p_c"), py::arg("alpha"), py::arg("lambda_n"), py::arg("m"),
        py::arg("omega") = 1.0);

    mod.def(
        "snr_pdf",
        [](double gamma, double alpha, double m, double gamma_bar) {
            return dist_of(alpha, m, gamma_bar).pdf(gamma);
        },
        py::arg("gamma"), py::arg("alpha"), py::arg("m"), py::arg("gamma_bar"));
    mod.def(
        "snr_cdf",
        [](double gamma, double alpha, double m, double gamma_bar) {
            return dist_of(alpha, m, gamma_bar).cdf(gamma);
        },
        py::arg("gamma"), py::arg("alpha"), py::arg("m"), py::arg("gamma_bar"));
    mod.def(
        "snr_quantile",
        [](double q, double alpha, double m, double gamma_bar) {
            return dist_of(alpha, m, gamma_bar).quantile(q);
        },
        py::arg("q"), py::arg("alpha"), py::arg("m"), py::arg("gamma_bar"));

    mod.def("capacity_lb", &capacity_lb, py::arg("ratio"), py::arg("alpha"),
            "Amplitude-constrained capacity lower bound, bpcu");

    mod.def(
        "ergodic_capacity_lb",
        [](double alpha, double m, double gamma_bar, const std::string& method) {
            SnrDistribution d = dist_of(alpha, m, gamma_bar);
            if (method == "meijerg")
                return ergodic_capacity_lb_meijerg(d, rational_alpha(alpha));
            if (method != "quadrature")
                throw std::invalid_argument("method must be 'quadrature' or 'meijerg'");
            return ergodic_capacity_lb_quadrature(d);
        },
        py::arg("alpha"), py::arg("m"), py::arg("gamma_bar"),
        py::arg("method") = "quadrature", "Ergodic capacity lower bound, bpcu");

    mod.def(
        "outage_ub",
        [](double alpha, double m, double gamma_bar, double gamma_th) {
            return outage_ub(dist_of(alpha, m, gamma_bar), gamma_th);
        },
        py::arg("alpha"), py::arg("m"), py::arg("gamma_bar"), py::arg("gamma_th"),
        "Outage probability upper bound");

    mod.def(
        "meijer_g",
        [](std::vector<double> a_front, std::vector<double> a_rear,
           std::vector<double> b_front, std::vector<double> b_rear, double z) {
            MeijerGSpec s;
            s.a_front = std::move(a_front);
            s.a_rear = std::move(a_rear);
            s.b_front = std::move(b_front);
            s.b_rear = std::move(b_rear);
            s.z = z;
            return meijer_g(s);
        },
        py::arg("a_front"), py::arg("a_rear"), py::arg("b_front"), py::arg("b_rear"),
        py::arg("z"), "Meijer G-function via Mellin-Barnes contour integration");

    mod.def(
        "ba_point",
        [](double alpha, double lambda_n, double h, double p_c, int m_x, int m_n,
           double x_max_factor, double epsilon, int max_iter) {
            BaConfig cfg = ba_config(p_c, m_x, m_n, x_max_factor, epsilon, max_iter, 1);
            DiscreteChannel ch = build_channel(alpha, lambda_n, h, cfg);
            BaResult r = ba_capacity(ch, p_c, cfg);
            py::dict d;
            d["capacity_bpcu"] = r.capacity;
            d["iterations"] = r.iterations;
            d["converged"] = r.converged;
            d["monotone"] = r.monotone;
            d["nu"] = r.nu;
            d["inputs"] = ch.inputs;
            d["r"] = r.r;
            return d;
        },
        py::arg("alpha"), py::arg("lambda_n"), py::arg("h"), py::arg("p_c"),
        py::arg("m_x") = 65, py::arg("m_n") = 513, py::arg("x_max_factor") = 4.0,
        py::arg("epsilon") = 1e-6, py::arg("max_iter") = 2000,
        "Constrained Blahut-Arimoto capacity at a fixed fading amplitude");

    mod.def(
        "ergodic_ba",
        [](double alpha, double lambda_n, double p_c, double m, int n_h, int m_x, int m_n,
           double x_max_factor, double epsilon, int max_iter) {
            BaConfig cfg = ba_config(p_c, m_x, m_n, x_max_factor, epsilon, max_iter, n_h);
            NakagamiParams fading(m);
            SnrDistribution dist = SnrDistribution::from_physical(p_c, alpha, lambda_n, fading);
            ErgodicBaResult r = ergodic_ba(alpha, lambda_n, dist, cfg);
            std::vector<double> hs, gammas, weights;
            for (const auto& p : r.grid.points) {
                hs.push_back(p.h);
                gammas.push_back(p.gamma);
                weights.push_back(p.weight);
            }
            py::dict d;
            d["capacity_bpcu"] = r.capacity;
            d["gamma_bar"] = dist.gamma_bar;
            d["h"] = hs;
            d["gamma"] = gammas;
            d["weight"] = weights;
            d["per_point_capacity"] = r.per_point_capacity;
            d["raw_weight_sum"] = r.grid.raw_weight_sum;
            return d;
        },
        py::arg("alpha"), py::arg("lambda_n"), py::arg("p_c"), py::arg("m"),
        py::arg("n_h") = 40, py::arg("m_x") = 65, py::arg("m_n") = 513,
        py::arg("x_max_factor") = 4.0, py::arg("epsilon") = 1e-6, py::arg("max_iter") = 2000,
        "Fading-averaged Blahut-Arimoto capacity");

    mod.def(
        "linkbudget",
        [](const std::string& band_s, double d, double p_t, double t_b, double alpha,
           double m, const std::string& gains, double f_hz, double bw_hz, double d_moon) {
            Band band = parse_band(band_s);
            double f = f_hz > 0.0 ? f_hz : band_frequency(band);
            double bw = bw_hz > 0.0 ? bw_hz : band_bandwidth(band);
            AntennaSpec tx = reference_tx_antenna();
            AntennaSpec rx = reference_rx_antenna();
            RfChain chain = reference_chain();
            double gt, gr;
            if (gains == "table") {
                gt = from_db(table_gain_tx_dbi(band));
                gr = from_db(table_gain_rx_dbi(band));
            } else if (gains == "computed") {
                gt = antenna_gain(tx, f);
                gr = antenna_gain(rx, f);
            } else {
                throw std::invalid_argument("gains must be 'table' or 'computed'");
            }
            Geometry geom(d, d_moon);
            double om = moon_solid_angle(geom);
            double oa = antenna_solid_angle(rx, f);
            double dt_ext = external_antenna_temp(t_b, om, oa);
            double t_op = operational_temp(rx, chain, dt_ext);
            NoiseBudget nb = noise_budget(t_op, bw, alpha);
            double p_r = friis_received_power(p_t, gt, gr, f, d, from_db(chain.loss_tx_db),
                                              from_db(chain.loss_rx_db));
            double p_c = amplitude_constraint(p_r);
            SnrDistribution dist =
                SnrDistribution::from_physical(p_c, alpha, nb.lambda_n, NakagamiParams(m));
            double cap = ergodic_capacity_lb_quadrature(dist);
            py::dict out;
            out["band"] = band_name(band);
            out["f_hz"] = f;
            out["bw_hz"] = bw;
            out["g_t_dbi"] = to_db(gt);
            out["g_r_dbi"] = to_db(gr);
            out["p_r_w"] = p_r;
            out["p_r_dbw"] = to_db(p_r);
            out["p_c"] = p_c;
            out["omega_m_sr"] = om;
            out["omega_a_sr"] = oa;
            out["delta_t_ext_k"] = dt_ext;
            out["t_op_k"] = t_op;
            out["n0_w_per_hz"] = nb.n0;
            out["sigma"] = nb.sigma;
            out["lambda_n"] = nb.lambda_n;
            out["xi"] = dist.xi;
            out["gamma_bar"] = dist.gamma_bar;
            out["capacity_bpcu"] = cap;
            out["capacity_bps"] = bw * cap;
            return out;
        },
        py::arg("band") = "Ka", py::arg("d") = 1e7, py::arg("p_t") = 1.0,
        py::arg("t_b") = 0.0, py::arg("alpha") = 1.8, py::arg("m") = 15.0,
        py::arg("gains") = "table", py::arg("f_hz") = 0.0, py::arg("bw_hz") = 0.0,
        py::arg("d_moon") = 0.0, "Full link budget for one operating point");

    mod.def(
        "run_sweep",
        [](const std::string& band, std::vector<double> t_b_grid,
           std::vector<double> alpha_set, std::vector<double> m_set,
           std::vector<double> distances, std::vector<double> p_t_set,
           std::optional<double> gamma_th_db, const std::string& gains) {
            ScenarioConfig cfg =
                scenario_of(band, std::move(t_b_grid), std::move(alpha_set), std::move(m_set),
                            std::move(distances), std::move(p_t_set), gamma_th_db, gains);
            SweepResult res = run_sweep(cfg);
            py::list rows;
            for (const auto& r : res.rows) rows.append(row_dict(r));
            py::dict out;
            out["rows"] = rows;
            out["errors"] = res.errors;
            return out;
        },
        py::arg("band") = "Ka", py::arg("t_b_grid") = std::vector<double>{},
        py::arg("alpha_set") = std::vector<double>{}, py::arg("m_set") = std::vector<double>{},
        py::arg("distances") = std::vector<double>{},
        py::arg("p_t_set") = std::vector<double>{}, py::arg("gamma_th_db") = py::none(),
        py::arg("gains") = "table", "Cartesian sweep; empty grids use the defaults");

    mod.def(
        "sweep_csv",
        [](const std::string& band, std::vector<double> t_b_grid,
           std::vector<double> alpha_set, std::vector<double> m_set,
           std::vector<double> distances, std::vector<double> p_t_set,
           std::optional<double> gamma_th_db, const std::string& gains) {
            ScenarioConfig cfg =
                scenario_of(band, std::move(t_b_grid), std::move(alpha_set), std::move(m_set),
                            std::move(distances), std::move(p_t_set), gamma_th_db, gains);
            return format_sweep_csv(run_sweep(cfg).rows);
        },
        py::arg("band") = "Ka", py::arg("t_b_grid") = std::vector<double>{},
        py::arg("alpha_set") = std::vector<double>{}, py::arg("m_set") = std::vector<double>{},
        py::arg("distances") = std::vector<double>{},
        py::arg("p_t_set") = std::vector<double>{}, py::arg("gamma_th_db") = py::none(),
        py::arg("gains") = "table", "CSV text for the same sweep");

    mod.def(
        "parse_sweep_csv",
        [](const std::string& path) {
            py::list rows;
            for (const auto& r : parse_csv(path)) rows.append(row_dict(r));
            return rows;
        },
        py::arg("path"));

    mod.def(
        "run_validation",
        [](long n, std::uint64_t seed, double z) {
            McConfig cfg;
            cfg.n_samples = n;
            cfg.seed = seed;
            cfg.confidence_z = z;
            ValidationReport rep = run_validation(cfg);
            py::list out;
            for (const auto& c : rep.checks) {
                py::dict d;
                d["name"] = c.name;
                d["expected"] = c.expected;
                d["actual"] = c.actual;
                d["tolerance"] = c.tolerance;
                d["pass"] = c.pass;
                out.append(d);
            }
            return out;
        },
        py::arg("n") = 1000000L, py::arg("seed") = std::uint64_t{0xC15}, py::arg("z") = 3.0,
        "Monte-Carlo validation suite; returns one dict per check");
}
