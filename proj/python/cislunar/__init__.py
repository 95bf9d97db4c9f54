"""Capacity and reliability bounds for lunar links under additive symmetric
alpha-stable noise and Nakagami-m fading."""

from ._core import (
    alpha_moment,
    ba_point,
    capacity_lb,
    char_fn,
    ergodic_ba,
    ergodic_capacity_lb,
    gamma_bar_from,
    instantaneous_snr,
    linkbudget,
    mean_abs,
    meijer_g,
    noise_truncation_radius,
    outage_ub,
    parse_sweep_csv,
    rician_to_m,
    run_sweep,
    run_validation,
    sas_pdf,
    snr_cdf,
    snr_pdf,
    snr_quantile,
    sweep_csv,
)

__all__ = [
    "alpha_moment",
    "ba_point",
    "capacity_lb",
    "char_fn",
    "ergodic_ba",
    "ergodic_capacity_lb",
    "gamma_bar_from",
    "instantaneous_snr",
    "linkbudget",
    "mean_abs",
    "meijer_g",
    "noise_truncation_radius",
    "outage_ub",
    "parse_sweep_csv",
    "rician_to_m",
    "run_sweep",
    "run_validation",
    "sas_pdf",
    "snr_cdf",
    "snr_pdf",
    "snr_quantile",
    "sweep_csv",
]

__version__ = "0.1.0"
