"""Fourier coefficients of CM eigenforms attached to Hecke characters of
Q(i), with empirical verification of the n^{1/4} coefficient-gap bound."""

from .character import (
    CurveSpec,
    FormSpec,
    a_p_character,
    ap_agreement_check,
    deuring_check,
    nonvanishing_correspondence,
    point_count_ap,
    psi_prime,
)
from .coeffs import (
    CoeffSeries,
    batch_series,
    coeff,
    coeff_prime_power,
    coeff_via_ideals,
    csv_nonzero,
    krw_property_check,
    read_binary,
    series_cross_check,
    write_binary,
)
from .gaussian import (
    GaussInt,
    PrimeClass,
    classify_prime,
    gauss_factor,
    is_primary,
    primary_associate,
    split_two_squares,
)
from .gaps import (
    GapRecord,
    bound_check,
    gap_at,
    gap_s2s_consistency,
    max_gap_scan,
)
from .sums2sq import (
    IntervalWitness,
    S2SBitmap,
    interval_constant_scan,
    next_admissible,
    sieve_segment,
)
from .util import BudgetError

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "CoeffSeries",
    "CurveSpec",
    "FormSpec",
    "GapRecord",
    "GaussInt",
    "IntervalWitness",
    "PrimeClass",
    "S2SBitmap",
    "a_p_character",
    "ap_agreement_check",
    "batch_series",
    "bound_check",
    "classify_prime",
    "coeff",
    "coeff_prime_power",
    "coeff_via_ideals",
    "csv_nonzero",
    "deuring_check",
    "gap_at",
    "gap_s2s_consistency",
    "gauss_factor",
    "interval_constant_scan",
    "is_primary",
    "krw_property_check",
    "max_gap_scan",
    "next_admissible",
    "nonvanishing_correspondence",
    "point_count_ap",
    "primary_associate",
    "psi_prime",
    "read_binary",
    "series_cross_check",
    "sieve_segment",
    "split_two_squares",
    "write_binary",
]
