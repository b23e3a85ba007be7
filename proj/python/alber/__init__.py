"""Modulational-instability analysis of ocean wave spectra."""

from ._core import (
    DiscreteSpectrum,
    FrequencySpectrum,
    InputError,
    NumericalError,
    PENROSE_POINT,
    classify,
    correlate_files,
    crossing_scan,
    cauchy_integral,
    excess_kurtosis,
    frequency_to_wavenumber,
    gamma_curve,
    isserlis_closure_test,
    jonswap_spectrum,
    parse_spectrum,
    run_monte_carlo,
    select_k0,
    spearman_rank,
    spectral_summary,
)

__all__ = [
    "DiscreteSpectrum",
    "FrequencySpectrum",
    "InputError",
    "NumericalError",
    "PENROSE_POINT",
    "classify",
    "correlate_files",
    "crossing_scan",
    "cauchy_integral",
    "excess_kurtosis",
    "frequency_to_wavenumber",
    "gamma_curve",
    "isserlis_closure_test",
    "jonswap_spectrum",
    "parse_spectrum",
    "run_monte_carlo",
    "select_k0",
    "spearman_rank",
    "spectral_summary",
]
