#pragma once

namespace cislunar {

inline constexpr double kSpeedOfLight = 2.998e8;   // m/s
inline constexpr double kBoltzmann = 1.380649e-23; // J/K
inline constexpr double kMoonRadius = 1.737e6;     // m

struct AntennaSpec {
    double diameter;             // m
    double aperture_efficiency;  // eta_A in (0,1]
    double rad_efficiency;       // eta_rad in (0,1]
    double physical_temp;        // T_AP, K

    AntennaSpec(double d, double eta_a, double eta_rad = 0.95, double t_ap = 300.0);
};

struct RfChain {
    double loss_tx_db;      // L_t >= 0 dB
    double loss_rx_db;      // L_r >= 0 dB
    double receiver_temp;   // T_R, K
    double line_temp;       // T_TLP, K
    double line_efficiency; // eta_TL in (0,1]
    double cmb_temp;        // T_CMB, K

    RfChain(double lt_db = 1.0, double lr_db = 3.0, double t_r = 50.0,
            double t_tlp = 300.0, double eta_tl = 0.99, double t_cmb = 2.725);
};

struct Geometry {
    double distance;       // Tx-Rx distance d, m
    double moon_distance;  // antenna to Moon center d_M, m (defaults to d)
    double moon_radius;    // R_M, m

    explicit Geometry(double d, double d_m = 0.0, double r_m = kMoonRadius);
};

struct NoiseBudget {
    double t_op;         // K
    double n0;           // W/Hz
    double noise_power;  // W over the bandwidth
    double sigma;        // per-quadrature amplitude scale, sqrt(noise_power/2)
    double lambda_n;     // stable scale 2^(1/alpha - 1/2) * sigma
};

// Parabolic-dish gain eta_A (D pi f / c)^2, linear.
double antenna_gain(const AntennaSpec& spec, double f_hz);

double to_db(double linear);
double from_db(double db);

// Friis: P_r = P_t G_t G_r c^2 / ((4 pi f d)^2 L_t L_r), losses linear >= 1.
double friis_received_power(double p_t, double g_t, double g_r, double f_hz,
                            double d, double l_t, double l_r);

// Spherical-cap solid angle of the Moon: 2 pi (1 - sqrt(d_M^2 - R_M^2)/d_M).
double moon_solid_angle(const Geometry& geom);

// Antenna beam solid angle theta^2 with theta = 70 deg * (c/f)/D.
double antenna_solid_angle(const AntennaSpec& spec, double f_hz);

// External antenna temperature rise: min(1, Omega_M/Omega_A) * T_B / 2.
double external_antenna_temp(double t_b, double omega_m, double omega_a);

// T_op = T_CMB + [delta_t_ext + T_AP(1/eta_rad - 1)] + T_TLP(1/eta_TL - 1)/eta_rad
//        + T_R/(eta_rad eta_TL).
double operational_temp(const AntennaSpec& spec, const RfChain& chain, double delta_t_ext);

// N0 = k T_op, noise_power = N0 B, sigma = sqrt(noise_power/2),
// lambda_n = 2^(1/alpha - 1/2) sigma.
NoiseBudget noise_budget(double t_op, double bandwidth, double alpha);

// Received amplitude budget P_c = sqrt(P_r) (unit-mean-amplitude symbols).
double amplitude_constraint(double p_r);

// Reference hardware presets (0.254 m / eta 0.43 transmit dish, 1.5 m /
// eta 0.54 receive dish, 1 dB / 3 dB losses, 50 K receiver, 300 K line at
// 0.99 efficiency, 2.725 K background).
AntennaSpec reference_tx_antenna();
AntennaSpec reference_rx_antenna();
RfChain reference_chain();

}  // namespace cislunar
