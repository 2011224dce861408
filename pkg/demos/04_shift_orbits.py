"""Shift orbits and the closed form for correlation values along them.

The orbit s_{n+1} = -s_n - ell_n eventually enters the window
(-ell_n, ell_n) and stays negative; along it the crosscorrelation obeys
a three-term recursion whose closed form lives in the cubic field.  Run:

    python3 demos/04_shift_orbits.py
"""

from grs import crosscorr, entry_index, grs_pair, lily_predict, rudin_shapiro_seed, standard_shift
from grs.bounds import ShiftSeq, nestor_cecilia_check

# Entry into the window: iterate the rule with exact integers.
for s0 in (0, 5, -1, 1000):
    m = entry_index(s0, 1)
    print(f"s0={s0:5d}: enters at m={m}; first terms {ShiftSeq(s0, 1).terms(max(m, 4))}")

# The standard orbit visits the peak shifts of the unit-seed pairs.
print("\nstandard orbit terms:", [standard_shift(n, 1) for n in range(11)])

# Closed-form prediction equals the definitional correlation, exactly.
seed = rudin_shapiro_seed()
orbit = ShiftSeq(0, 1)
print("\n  n   shift   closed form   direct")
for n in range(11):
    pair = grs_pair(seed, n)
    s_n = orbit.term(n)
    direct = crosscorr(pair.x, pair.y, s_n)
    print(f" {n:2d}  {s_n:6d}  {str(lily_predict(seed, 0, n)):>11s}   {direct}")

# The two orbit recursions hold verbatim against the oracle.
verdicts = nestor_cecilia_check(seed, 0, 10)
print(f"\norbit recursion checks: {sum(v.holds for v in verdicts)}/{len(verdicts)} hold")
