#include "cislunar/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "cislunar/capacity_bounds.hpp"

namespace cislunar {

namespace {

const char* kCsvHeader =
    "band,f_hz,bw_hz,t_b_k,alpha,m,d_m,p_t_w,t_op_k,p_r_dbw,lambda_n,gamma_bar,"
    "capacity_bps,outage_ub";

std::string fmt(const char* f, double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string full(double v) { return fmt("%.17g", v); }

bool near(double a, double b) { return std::fabs(a - b) <= 1e-9 * std::max(std::fabs(a), std::fabs(b)); }

}  // namespace

std::string band_name(Band b) { return b == Band::S ? "S" : "Ka"; }

Band parse_band(const std::string& s) {
    std::string t;
    for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "s") return Band::S;
    if (t == "ka") return Band::Ka;
    throw std::invalid_argument("parse_band: unknown band '" + s + "' (expected S or Ka)");
}

double band_frequency(Band b) { return b == Band::S ? 2.245e9 : 2.725e10; }
double band_bandwidth(Band b) { return b == Band::S ? 1e6 : 1e7; }

double table_gain_tx_dbi(Band b) { return b == Band::S ? 11.85 : 28.27; }
double table_gain_rx_dbi(Band b) { return b == Band::S ? 33.53 : 49.95; }

double default_gamma_th_db(Band b, double d, double p_t) {
    const bool near_d = near(d, 1e7);
    const bool far_d = near(d, 7e7);
    const bool low_p = near(p_t, 1.0);
    const bool high_p = near(p_t, 10.0);
    if (b == Band::Ka) {
        if (near_d && low_p) return 15.0;
        if (far_d && low_p) return 5.0;
        if (near_d && high_p) return 30.0;
        if (far_d && high_p) return 10.0;
    } else {
        if (near_d && low_p) return 10.0;
        if (far_d && low_p) return -5.0;
        if (near_d && high_p) return 15.0;
        if (far_d && high_p) return -5.0;
    }
    return 15.0;
}

ScenarioConfig default_scenario(Band band) {
    ScenarioConfig cfg;
    cfg.band = band;
    for (int t = 0; t <= 600; t += 25) cfg.t_b_grid.push_back(t);
    return cfg;
}

SweepResult run_sweep(const ScenarioConfig& cfg) {
    if (cfg.t_b_grid.empty() || cfg.alpha_set.empty() || cfg.m_set.empty() ||
        cfg.distances.empty() || cfg.p_t_set.empty())
        throw std::invalid_argument("run_sweep: all grids must be non-empty");
    const double f = cfg.frequency();
    const double bw = cfg.bandwidth();
    if (!(f > 0.0) || !(bw > 0.0))
        throw std::invalid_argument("run_sweep: frequency and bandwidth must be > 0");
    for (double a : cfg.alpha_set)
        if (!(a > 1.0 && a <= 2.0))
            throw std::invalid_argument("run_sweep: alpha values must be in (1, 2]");
    for (double t : cfg.t_b_grid)
        if (!(t >= 0.0)) throw std::invalid_argument("run_sweep: T_B values must be >= 0");

    const AntennaSpec tx = reference_tx_antenna();
    const AntennaSpec rx = reference_rx_antenna();
    const RfChain chain = reference_chain();
    double g_t, g_r;
    if (cfg.gains_mode == GainsMode::Table) {
        g_t = from_db(table_gain_tx_dbi(cfg.band));
        g_r = from_db(table_gain_rx_dbi(cfg.band));
    } else {
        g_t = antenna_gain(tx, f);
        g_r = antenna_gain(rx, f);
    }
    const double l_t = from_db(chain.loss_tx_db);
    const double l_r = from_db(chain.loss_rx_db);
    const std::string bname = band_name(cfg.band);

    SweepResult out;
    for (double d : cfg.distances) {
        for (double p_t : cfg.p_t_set) {
            const double gth_db = cfg.gamma_th_db == ScenarioConfig::kAutoGammaTh
                                      ? default_gamma_th_db(cfg.band, d, p_t)
                                      : cfg.gamma_th_db;
            const double gth = from_db(gth_db);
            for (double alpha : cfg.alpha_set) {
                for (double m : cfg.m_set) {
                    for (double t_b : cfg.t_b_grid) {
                        try {
                            Geometry geom(d);
                            double dt_ext = external_antenna_temp(
                                t_b, moon_solid_angle(geom), antenna_solid_angle(rx, f));
                            double t_op = operational_temp(rx, chain, dt_ext);
                            NoiseBudget nb = noise_budget(t_op, bw, alpha);
                            double p_r = friis_received_power(p_t, g_t, g_r, f, d, l_t, l_r);
                            double p_c = amplitude_constraint(p_r);
                            NakagamiParams fading(m);
                            SnrDistribution dist =
                                SnrDistribution::from_physical(p_c, alpha, nb.lambda_n, fading);
                            SweepRow row;
                            row.band = bname;
                            row.f_hz = f;
                            row.bw_hz = bw;
                            row.t_b_k = t_b;
                            row.alpha = alpha;
                            row.m = m;
                            row.d_m = d;
                            row.p_t_w = p_t;
                            row.t_op_k = t_op;
                            row.p_r_dbw = to_db(p_r);
                            row.lambda_n = nb.lambda_n;
                            row.gamma_bar = dist.gamma_bar;
                            row.capacity_bps = bw * ergodic_capacity_lb_quadrature(dist);
                            row.outage_ub = outage_ub(dist, gth);
                            out.rows.push_back(std::move(row));
                        } catch (const std::exception& e) {
                            out.errors.push_back("band=" + bname + " d=" + fmt("%g", d) +
                                                 " p_t=" + fmt("%g", p_t) + " alpha=" +
                                                 fmt("%g", alpha) + " m=" + fmt("%g", m) +
                                                 " t_b=" + fmt("%g", t_b) + ": " + e.what());
                        }
                    }
                }
            }
        }
    }
    return out;
}

std::string format_sweep_csv(const std::vector<SweepRow>& rows) {
    return format_sweep_csv(rows, {});
}

std::string format_sweep_csv(const std::vector<SweepRow>& rows,
                             const std::vector<std::string>& metadata) {
    std::string out;
    for (const auto& m : metadata) out += "# " + m + "\n";
    out += kCsvHeader;
    out += "\n";
    for (const auto& r : rows) {
        out += r.band;
        for (double v : {r.f_hz, r.bw_hz, r.t_b_k, r.alpha, r.m, r.d_m, r.p_t_w, r.t_op_k,
                         r.p_r_dbw, r.lambda_n, r.gamma_bar, r.capacity_bps, r.outage_ub}) {
            out += ',';
            out += full(v);
        }
        out += '\n';
    }
    return out;
}

void emit_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("emit_csv: cannot open " + path);
    f << format_sweep_csv(rows);
    f.flush();
    if (!f) throw std::runtime_error("emit_csv: write failed on " + path);
}

std::vector<SweepRow> parse_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("parse_csv: cannot open " + path);
    std::vector<SweepRow> rows;
    std::string line;
    bool header_seen = false;
    long lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != kCsvHeader)
                throw std::runtime_error("parse_csv: unexpected header at line " +
                                         std::to_string(lineno));
            header_seen = true;
            continue;
        }
        std::vector<std::string> fields;
        std::string cur;
        std::istringstream ss(line);
        while (std::getline(ss, cur, ',')) fields.push_back(cur);
        if (fields.size() != 14)
            throw std::runtime_error("parse_csv: expected 14 columns at line " +
                                     std::to_string(lineno) + ", got " +
                                     std::to_string(fields.size()));
        SweepRow r;
        r.band = fields[0];
        double* slots[] = {&r.f_hz,    &r.bw_hz,     &r.t_b_k,    &r.alpha,
                           &r.m,       &r.d_m,       &r.p_t_w,    &r.t_op_k,
                           &r.p_r_dbw, &r.lambda_n,  &r.gamma_bar, &r.capacity_bps,
                           &r.outage_ub};
        for (int i = 0; i < 13; ++i) *slots[i] = std::stod(fields[i + 1]);
        rows.push_back(std::move(r));
    }
    if (!header_seen) throw std::runtime_error("parse_csv: missing header in " + path);
    return rows;
}

namespace {

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> pts;  // (t_b, y)
};

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
constexpr int kPaletteSize = 10;

double nice_step(double span, int target) {
    double raw = span / target;
    double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double frac = raw / mag;
    double n = frac <= 1.0 ? 1.0 : frac <= 2.0 ? 2.0 : frac <= 5.0 ? 5.0 : 10.0;
    return n * mag;
}

std::string svg_chart(const std::string& title, const std::string& y_label,
                      const std::vector<Series>& series, bool log_y) {
    const double w = 960, h = 600, ml = 90, mr = 230, mt = 56, mb = 64;
    const double pw = w - ml - mr, ph = h - mt - mb;
    double x_lo = 1e300, x_hi = -1e300, y_lo = 1e300, y_hi = -1e300;
    for (const auto& s : series)
        for (auto [x, y] : s.pts) {
            double yy = log_y ? std::log10(std::max(y, 1e-12)) : y;
            x_lo = std::min(x_lo, x);
            x_hi = std::max(x_hi, x);
            y_lo = std::min(y_lo, yy);
            y_hi = std::max(y_hi, yy);
        }
    if (x_hi <= x_lo) x_hi = x_lo + 1.0;
    if (log_y) {
        y_lo = std::floor(y_lo);
        y_hi = std::ceil(y_hi);
        if (y_hi <= y_lo) y_hi = y_lo + 1.0;
    } else {
        y_lo = std::min(0.0, y_lo);
        y_hi = y_hi + 0.05 * (y_hi - y_lo);
        if (y_hi <= y_lo) y_hi = y_lo + 1.0;
    }
    auto px = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * pw; };
    auto py = [&](double y) { return mt + ph - (y - y_lo) / (y_hi - y_lo) * ph; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"960\" height=\"600\" "
           "viewBox=\"0 0 960 600\">\n";
    svg += "<rect width=\"960\" height=\"600\" fill=\"#ffffff\"/>\n";
    svg += "<text x=\"480\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"18\">" + title + "</text>\n";

    // Gridlines and ticks.
    std::string axes;
    if (log_y) {
        int lo = static_cast<int>(y_lo), hi = static_cast<int>(y_hi);
        int step = std::max(1, (hi - lo + 7) / 8);
        for (int e = lo; e <= hi; e += step) {
            double yy = py(e);
            axes += "<line x1=\"" + fmt("%.2f", ml) + "\" y1=\"" + fmt("%.2f", yy) +
                    "\" x2=\"" + fmt("%.2f", ml + pw) + "\" y2=\"" + fmt("%.2f", yy) +
                    "\" stroke=\"#dddddd\"/>\n";
            axes += "<text x=\"" + fmt("%.2f", ml - 8) + "\" y=\"" + fmt("%.2f", yy + 4) +
                    "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">1e" +
                    std::to_string(e) + "</text>\n";
        }
    } else {
        double step = nice_step(y_hi - y_lo, 6);
        for (double v = std::ceil(y_lo / step) * step; v <= y_hi + 1e-9 * step; v += step) {
            double yy = py(v);
            axes += "<line x1=\"" + fmt("%.2f", ml) + "\" y1=\"" + fmt("%.2f", yy) +
                    "\" x2=\"" + fmt("%.2f", ml + pw) + "\" y2=\"" + fmt("%.2f", yy) +
                    "\" stroke=\"#dddddd\"/>\n";
            axes += "<text x=\"" + fmt("%.2f", ml - 8) + "\" y=\"" + fmt("%.2f", yy + 4) +
                    "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" +
                    fmt("%g", v) + "</text>\n";
        }
    }
    {
        double step = nice_step(x_hi - x_lo, 6);
        for (double v = std::ceil(x_lo / step) * step; v <= x_hi + 1e-9 * step; v += step) {
            double xx = px(v);
            axes += "<line x1=\"" + fmt("%.2f", xx) + "\" y1=\"" + fmt("%.2f", mt) +
                    "\" x2=\"" + fmt("%.2f", xx) + "\" y2=\"" + fmt("%.2f", mt + ph) +
                    "\" stroke=\"#eeeeee\"/>\n";
            axes += "<text x=\"" + fmt("%.2f", xx) + "\" y=\"" + fmt("%.2f", mt + ph + 18) +
                    "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
                    fmt("%g", v) + "</text>\n";
        }
    }
    svg += axes;
    svg += "<rect x=\"" + fmt("%.2f", ml) + "\" y=\"" + fmt("%.2f", mt) + "\" width=\"" +
           fmt("%.2f", pw) + "\" height=\"" + fmt("%.2f", ph) +
           "\" fill=\"none\" stroke=\"#000000\"/>\n";
    svg += "<text x=\"" + fmt("%.2f", ml + pw / 2) + "\" y=\"" + fmt("%.2f", h - 16) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">brightness "
           "temperature T_B (K)</text>\n";
    svg += "<text x=\"24\" y=\"" + fmt("%.2f", mt + ph / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
           "transform=\"rotate(-90 24 " + fmt("%.2f", mt + ph / 2) + ")\">" + y_label +
           "</text>\n";

    int idx = 0;
    for (const auto& s : series) {
        const char* color = kPalette[idx % kPaletteSize];
        const char* dash = (idx / kPaletteSize) % 2 == 1 ? " stroke-dasharray=\"6 3\"" : "";
        std::string pts;
        for (auto [x, y] : s.pts) {
            double yy = log_y ? std::log10(std::max(y, 1e-12)) : y;
            pts += fmt("%.2f", px(x)) + "," + fmt("%.2f", py(yy)) + " ";
        }
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"1.8\"" + dash + " points=\"" + pts + "\"/>\n";
        double ly = mt + 16 + 20 * idx;
        svg += "<line x1=\"" + fmt("%.2f", ml + pw + 16) + "\" y1=\"" + fmt("%.2f", ly - 4) +
               "\" x2=\"" + fmt("%.2f", ml + pw + 44) + "\" y2=\"" + fmt("%.2f", ly - 4) +
               "\" stroke=\"" + color + "\" stroke-width=\"1.8\"" + dash + "/>\n";
        svg += "<text x=\"" + fmt("%.2f", ml + pw + 50) + "\" y=\"" + fmt("%.2f", ly) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + s.label + "</text>\n";
        ++idx;
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace

std::vector<std::string> emit_plots(const std::vector<SweepRow>& rows,
                                    const std::string& path_prefix,
                                    std::vector<std::string>* warnings) {
    std::vector<std::string> written;
    if (rows.empty()) {
        if (warnings) warnings->push_back("emit_plots: no rows; nothing written");
        return written;
    }
    // Panel key: (band, d, p_t); series key within a panel: (alpha, m).
    std::map<std::tuple<std::string, double, double>,
             std::map<std::pair<double, double>, std::vector<std::pair<double, double>>>>
        cap_panels, out_panels;
    for (const auto& r : rows) {
        auto pk = std::make_tuple(r.band, r.d_m, r.p_t_w);
        auto sk = std::make_pair(r.alpha, r.m);
        cap_panels[pk][sk].push_back({r.t_b_k, r.capacity_bps / 1e6});
        out_panels[pk][sk].push_back({r.t_b_k, r.outage_ub});
    }
    auto emit_panel = [&](const std::tuple<std::string, double, double>& pk,
                          std::map<std::pair<double, double>,
                                   std::vector<std::pair<double, double>>>& smap,
                          bool log_y, const std::string& kind, const std::string& y_label) {
        const auto& [band, d, p_t] = pk;
        std::vector<Series> series;
        for (auto& [sk, pts] : smap) {
            std::sort(pts.begin(), pts.end());
            series.push_back({"alpha=" + fmt("%g", sk.first) + " m=" + fmt("%g", sk.second),
                              pts});
        }
        std::string title = band + "-band, d=" + fmt("%g", d / 1e6) + " Mm, P_t=" +
                            fmt("%g", p_t) + " W";
        std::string path = path_prefix + "_" + kind + "_" + band + "_" +
                           fmt("%g", d / 1e6) + "Mm_" + fmt("%g", p_t) + "W.svg";
        std::ofstream f(path);
        if (!f) throw std::runtime_error("emit_plots: cannot open " + path);
        f << svg_chart(title, y_label, series, log_y);
        f.flush();
        if (!f) throw std::runtime_error("emit_plots: write failed on " + path);
        written.push_back(path);
    };
    for (auto& [pk, smap] : cap_panels)
        emit_panel(pk, smap, false, "capacity", "ergodic capacity bound (Mbps)");
    for (auto& [pk, smap] : out_panels)
        emit_panel(pk, smap, true, "outage", "outage probability upper bound");
    return written;
}

std::string format_ba_csv(const ErgodicBaResult& res) {
    std::string out = "h,gamma,weight,capacity_bpcu\n";
    for (std::size_t i = 0; i < res.grid.points.size(); ++i) {
        const auto& p = res.grid.points[i];
        out += full(p.h) + "," + full(p.gamma) + "," + full(p.weight) + "," +
               full(res.per_point_capacity[i]) + "\n";
    }
    out += "# ergodic_capacity_bpcu = " + full(res.capacity) + "\n";
    return out;
}

}  // namespace cislunar
