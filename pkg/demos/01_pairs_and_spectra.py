"""Build complementary pairs and inspect their exact correlation spectra.

Run:  python3 demos/01_pairs_and_spectra.py
"""

from grs import (
    Sequence,
    demerit_auto,
    demerit_cross,
    grs_pair,
    pcc,
    psl,
    rudin_shapiro,
    spectrum,
    validate_seed,
)

# The unit seed (both sequences equal to 1) doubles into binary pairs.
for n in range(4):
    pair = rudin_shapiro(n)
    print(f"level {n}:  x = {pair.x.sign_string():16s}  y = {pair.y.sign_string()}")

# Autocorrelations of the two members cancel at every nonzero shift.
pair = rudin_shapiro(5)
sxx = spectrum(pair.x, pair.x)
syy = spectrum(pair.y, pair.y)
print("\nautocorrelation sums at shifts 1..6:",
      [sxx.value(s) + syy.value(s) for s in range(1, 7)])

# The crosscorrelation spectrum is exact; peak statistics come with all
# attaining shifts.
sxy = spectrum(pair.x, pair.y)
print("crosscorrelation support:", sxy.shifts()[:6], "...")
print("peak crosscorrelation:", pcc(pair.x, pair.y))
print("peak sidelobe level:  ", psl(pair.x))

# Any seed passing the complementarity test works, not just the unit one.
seed = validate_seed(Sequence.binary("+++-"), Sequence.binary("++-+"), 4)
pair4 = grs_pair(seed, 3)
print("\nlength-4 seed at level 3: length", pair4.length,
      "peak", pcc(pair4.x, pair4.y))

# Mean-square behavior: the demerit factors drift toward 1/3 and 2/3.
for n in (4, 8, 12):
    p = rudin_shapiro(n)
    print(f"n={n:2d}  demerit auto = {demerit_auto(p.x)!s:>14s}"
          f"   cross = {demerit_cross(p.x, p.y)}")
