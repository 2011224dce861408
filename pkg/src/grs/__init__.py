"""Golay complementary pairs from the doubling recursion, exact
correlation spectra, low-memory peak scans, and exact verification of
peak-correlation bounds over the cubic field of X^3 + X^2 - 2X - 4."""

from .bounds import (
    BoundVerdict,
    ShiftSeq,
    e_constants,
    entry_index,
    generic_prefactor,
    identity_suite,
    inequality_suite,
    lily_predict,
    nestor_cecilia_check,
    standard_shift,
    verify_generic_bound,
    verify_rs_bounds,
    verify_rs_lower_bounds,
)
from .correlation import (
    Spectrum,
    crosscorr,
    demerit_auto,
    demerit_cross,
    pcc,
    periodic_corr,
    psl,
    spectrum,
)
from .fastscan import (
    AbgdTable,
    PeakReport,
    abgd,
    coeff_by_geoff,
    coeff_by_iteration,
    derrel_bound,
    nellie_bound,
    psl_report,
    streaming_peaks,
)
from .field import (
    KElem,
    QAlphaElem,
    alpha_pow,
    compare,
    decimal_approx,
    k_div,
    min_poly_of,
    reduce_poly,
    signifier,
)
from .qcomplex import CQ
from .sequences import (
    BudgetExceeded,
    GolayPair,
    SeedPair,
    Sequence,
    grs_pair,
    grs_step,
    read_sequence,
    rudin_shapiro,
    rudin_shapiro_seed,
    validate_seed,
    write_sequence,
)

__version__ = "0.1.0"
