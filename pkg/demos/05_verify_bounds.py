"""Exact verdicts for the peak-correlation bounds.

Peak crosscorrelation grows like alpha0^n with alpha0 = 1.658967... the
real root of X^3 + X^2 - 2X - 4:

    PCC_n <= 5 alpha0^(n-3)          (tight exactly at n = 3)
    PSL_n <= 5 alpha0^(n-4)          (tight exactly at n = 4)
    PCC_n >= 133991557 alpha0^(n-38)
    PCC_n <= K alpha0^n for any seed, K from the seed's peak statistics.

Every claim is decided in exact arithmetic.  Run:

    python3 demos/05_verify_bounds.py
"""

from grs import (
    Sequence,
    validate_seed,
    verify_generic_bound,
    verify_rs_bounds,
    verify_rs_lower_bounds,
)
from grs.bounds import generic_prefactor, inequality_suite, seed_peak_stats


def show(tag, verdicts):
    held = sum(v.holds for v in verdicts)
    tight = [v.claim_id for v in verdicts if v.observed == "="]
    print(f"{tag}: {held}/{len(verdicts)} hold" + (f", tight at {tight}" if tight else ""))


show("unit-seed upper bounds (n <= 16)", verify_rs_bounds(16))
show("unit-seed lower bounds (n <= 16)", verify_rs_lower_bounds(16))

seed = validate_seed(Sequence.binary("+++-"), Sequence.binary("++-+"), 4)
pcc0, psl0 = seed_peak_stats(seed)
print(f"\nlength-4 seed: PCC0={pcc0}, PSL0={psl0}, "
      f"prefactor K = {generic_prefactor(pcc0, psl0)}")
show("seed-statistics bound (n <= 10)", verify_generic_bound(seed, 10))

ineq = inequality_suite()
show("\nsupporting inequality suite", ineq)
sample = [v for v in ineq if v.claim_id.startswith("step_t7")][0]
print("sample claim:", sample.claim_id, "->", sample.observed, "holds:", sample.holds)
