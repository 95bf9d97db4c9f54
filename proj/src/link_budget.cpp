#include "cislunar/link_budget.hpp"

#include <cmath>
#include <stdexcept>

namespace cislunar {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

AntennaSpec::AntennaSpec(double d, double eta_a, double eta_rad, double t_ap)
    : diameter(d), aperture_efficiency(eta_a), rad_efficiency(eta_rad), physical_temp(t_ap) {
    if (!(d > 0.0)) throw std::invalid_argument("AntennaSpec: diameter must be > 0");
    if (!(eta_a > 0.0 && eta_a <= 1.0))
        throw std::invalid_argument("AntennaSpec: aperture efficiency must be in (0, 1]");
    if (!(eta_rad > 0.0 && eta_rad <= 1.0))
        throw std::invalid_argument("AntennaSpec: radiation efficiency must be in (0, 1]");
    if (!(t_ap >= 0.0)) throw std::invalid_argument("AntennaSpec: physical temp must be >= 0");
}

RfChain::RfChain(double lt_db, double lr_db, double t_r, double t_tlp, double eta_tl,
                 double t_cmb)
    : loss_tx_db(lt_db),
      loss_rx_db(lr_db),
      receiver_temp(t_r),
      line_temp(t_tlp),
      line_efficiency(eta_tl),
      cmb_temp(t_cmb) {
    if (!(lt_db >= 0.0) || !(lr_db >= 0.0))
        throw std::invalid_argument("RfChain: losses must be >= 0 dB");
    if (!(t_r >= 0.0) || !(t_tlp >= 0.0) || !(t_cmb >= 0.0))
        throw std::invalid_argument("RfChain: temperatures must be >= 0");
    if (!(eta_tl > 0.0 && eta_tl <= 1.0))
        throw std::invalid_argument("RfChain: line efficiency must be in (0, 1]");
}

Geometry::Geometry(double d, double d_m, double r_m)
    : distance(d), moon_distance(d_m == 0.0 ? d : d_m), moon_radius(r_m) {
    if (!(d > 0.0)) throw std::invalid_argument("Geometry: distance must be > 0");
    if (!(r_m > 0.0)) throw std::invalid_argument("Geometry: moon radius must be > 0");
    if (!(moon_distance >= r_m))
        throw std::invalid_argument("Geometry: moon distance must be >= moon radius");
}

double antenna_gain(const AntennaSpec& spec, double f_hz) {
    if (!(f_hz > 0.0)) throw std::invalid_argument("antenna_gain: frequency must be > 0");
    double x = spec.diameter * kPi * f_hz / kSpeedOfLight;
    return spec.aperture_efficiency * x * x;
}

double to_db(double linear) {
    if (!(linear > 0.0)) throw std::invalid_argument("to_db: value must be > 0");
    return 10.0 * std::log10(linear);
}

double from_db(double db) { return std::pow(10.0, db / 10.0); }

double friis_received_power(double p_t, double g_t, double g_r, double f_hz, double d,
                            double l_t, double l_r) {
    if (!(p_t > 0.0)) throw std::invalid_argument("friis: transmit power must be > 0");
    if (!(g_t > 0.0 && g_r > 0.0)) throw std::invalid_argument("friis: gains must be > 0");
    if (!(f_hz > 0.0)) throw std::invalid_argument("friis: frequency must be > 0");
    if (!(d > 0.0)) throw std::invalid_argument("friis: distance must be > 0");
    if (!(l_t >= 1.0 && l_r >= 1.0))
        throw std::invalid_argument("friis: linear losses must be >= 1");
    double denom = 4.0 * kPi * f_hz * d / kSpeedOfLight;
    return p_t * g_t * g_r / (denom * denom * l_t * l_r);
}

double moon_solid_angle(const Geometry& geom) {
    double dm = geom.moon_distance;
    double rm = geom.moon_radius;
    return 2.0 * kPi * (1.0 - std::sqrt(dm * dm - rm * rm) / dm);
}

double antenna_solid_angle(const AntennaSpec& spec, double f_hz) {
    if (!(f_hz > 0.0))
        throw std::invalid_argument("antenna_solid_angle: frequency must be > 0");
    double theta = (70.0 * kPi / 180.0) * (kSpeedOfLight / f_hz) / spec.diameter;
    return theta * theta;
}

double external_antenna_temp(double t_b, double omega_m, double omega_a) {
    if (!(t_b >= 0.0))
        throw std::invalid_argument("external_antenna_temp: brightness temp must be >= 0");
    if (!(omega_m > 0.0 && omega_a > 0.0))
        throw std::invalid_argument("external_antenna_temp: solid angles must be > 0");
    return std::min(1.0, omega_m / omega_a) * t_b / 2.0;
}

double operational_temp(const AntennaSpec& spec, const RfChain& chain, double delta_t_ext) {
    if (!(delta_t_ext >= 0.0))
        throw std::invalid_argument("operational_temp: external temp rise must be >= 0");
    double t_ant = delta_t_ext + spec.physical_temp * (1.0 / spec.rad_efficiency - 1.0);
    double t_line = chain.line_temp * (1.0 / chain.line_efficiency - 1.0) / spec.rad_efficiency;
    double t_rx = chain.receiver_temp / (spec.rad_efficiency * chain.line_efficiency);
    return chain.cmb_temp + t_ant + t_line + t_rx;
}

NoiseBudget noise_budget(double t_op, double bandwidth, double alpha) {
    if (!(t_op > 0.0)) throw std::invalid_argument("noise_budget: T_op must be > 0");
    if (!(bandwidth > 0.0)) throw std::invalid_argument("noise_budget: bandwidth must be > 0");
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw std::invalid_argument("noise_budget: alpha must be in (1, 2]");
    NoiseBudget nb;
    nb.t_op = t_op;
    nb.n0 = kBoltzmann * t_op;
    nb.noise_power = nb.n0 * bandwidth;
    nb.sigma = std::sqrt(nb.noise_power / 2.0);
    nb.lambda_n = std::pow(2.0, 1.0 / alpha - 0.5) * nb.sigma;
    return nb;
}

double amplitude_constraint(double p_r) {
    if (!(p_r >= 0.0)) throw std::invalid_argument("amplitude_constraint: power must be >= 0");
    return std::sqrt(p_r);
}

AntennaSpec reference_tx_antenna() { return AntennaSpec(0.254, 0.43); }
AntennaSpec reference_rx_antenna() { return AntennaSpec(1.5, 0.54); }
RfChain reference_chain() { return RfChain(); }

}  // namespace cislunar
