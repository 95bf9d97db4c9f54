#pragma once

#include <string>
#include <vector>

#include "cislunar/blahut_arimoto.hpp"
#include "cislunar/link_budget.hpp"

namespace cislunar {

enum class Band { S, Ka };
enum class GainsMode { Table, Computed };

std::string band_name(Band b);
Band parse_band(const std::string& s);

// Per-band carrier and bandwidth presets (S: 2245 MHz / 1 MHz,
// Ka: 27250 MHz / 10 MHz).
double band_frequency(Band b);
double band_bandwidth(Band b);

// Published gain figures for the reference hardware, dBi.  The S-band receive
// and Ka-band transmit entries do not match the dish formula (they appear
// transposed in the source table); GainsMode::Table uses them as printed,
// GainsMode::Computed re-derives all four from antenna_gain.
double table_gain_tx_dbi(Band b);
double table_gain_rx_dbi(Band b);

// Default outage threshold (dB) per (band, distance, transmit power) panel.
double default_gamma_th_db(Band b, double d, double p_t);

struct ScenarioConfig {
    Band band = Band::Ka;
    double f_hz = 0.0;   // 0 -> band preset
    double bw_hz = 0.0;  // 0 -> band preset
    std::vector<double> t_b_grid;            // default 0:25:600 K
    std::vector<double> alpha_set = {1.8, 1.9, 2.0};
    std::vector<double> m_set = {1.0, 5.0, 15.0};
    std::vector<double> distances = {1e7, 7e7};  // m
    std::vector<double> p_t_set = {1.0, 10.0};   // W
    double gamma_th_db = kAutoGammaTh;  // kAutoGammaTh -> per-panel default
    GainsMode gains_mode = GainsMode::Table;

    static constexpr double kAutoGammaTh = -1e9;

    double frequency() const { return f_hz > 0.0 ? f_hz : band_frequency(band); }
    double bandwidth() const { return bw_hz > 0.0 ? bw_hz : band_bandwidth(band); }
};

ScenarioConfig default_scenario(Band band);

struct SweepRow {
    std::string band;
    double f_hz;
    double bw_hz;
    double t_b_k;
    double alpha;
    double m;
    double d_m;
    double p_t_w;
    double t_op_k;
    double p_r_dbw;
    double lambda_n;
    double gamma_bar;
    double capacity_bps;
    double outage_ub;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<std::string> errors;  // per-row failures, collected not fatal
};

// Full Cartesian grid: for each (d, p_t, alpha, m, t_b) evaluate the link
// budget, the stable-noise scale, the ergodic-capacity bound (converted to
// bps by the bandwidth), and the outage bound at the panel threshold.
SweepResult run_sweep(const ScenarioConfig& cfg);

// Header + one line per row, full-precision scientific notation.  Optional
// metadata strings are written first as '#'-prefixed comment lines (the CLI
// records gains_mode and grid provenance there); parse_csv skips them.
std::string format_sweep_csv(const std::vector<SweepRow>& rows);
std::string format_sweep_csv(const std::vector<SweepRow>& rows,
                             const std::vector<std::string>& metadata);
void emit_csv(const std::vector<SweepRow>& rows, const std::string& path);
std::vector<SweepRow> parse_csv(const std::string& path);

// One capacity chart and one outage chart (log-y) per (band, d, p_t) panel,
// series per (alpha, m), self-contained SVG.  Returns the written paths;
// empty slices are skipped with a warning pushed to `warnings`.
std::vector<std::string> emit_plots(const std::vector<SweepRow>& rows,
                                    const std::string& path_prefix,
                                    std::vector<std::string>* warnings = nullptr);

// CSV for a single ergodic BA run (used by the CLI `ba` subcommand).
std::string format_ba_csv(const ErgodicBaResult& res);

}  // namespace cislunar
