"""Exact arithmetic in the cubic field that governs the peak growth.

All order decisions go through an integer sign test (the signifier), so
no verdict ever touches floating point.  Run:

    python3 demos/03_exact_field.py
"""

from fractions import Fraction

from grs import KElem, QAlphaElem, alpha_pow, compare, decimal_approx, k_div
from grs.field import min_poly_of, reduce_poly, signifier

alpha = alpha_pow(1)

# The minimal polynomial X^3 + X^2 - 2X - 4 vanishes exactly.
print("m(alpha) =", alpha**3 + alpha**2 - 2 * alpha - 4)

# Signs are decided by a cubic rational form in the coordinates.
print("signifier(alpha - 2)   =", signifier(QAlphaElem(-2, 1, 0)))
print("signifier(alpha^2 - 2) =", signifier(QAlphaElem(-2, 0, 1)))
print("alpha vs 1.658967:", compare(alpha, Fraction(1658967, 10**6)))
print("alpha vs 1.658968:", compare(alpha, Fraction(1658968, 10**6)))

# Decimal brackets of any width, found purely by exact comparisons.
print("alpha  to 12 digits:", decimal_approx(alpha, 12))
print("5/alpha^4 to 6 digits:", decimal_approx(5 * alpha_pow(-4), 6))

# Beyond the real root: polynomial expressions in all three roots reduce
# to a six-coordinate canonical form, and division is exact.
print("\nalpha1 * alpha2          =", reduce_poly({(0, 1, 1): 1}))
print("alpha0*alpha1*alpha2     =", reduce_poly({(1, 1, 1): 1}))
ratio = k_div(reduce_poly({(0, 1, 1): 1}), KElem.root(0) ** 2)
print("|alpha1/alpha0|^2        =", ratio.to_qalpha())
print("which brackets to        ", decimal_approx(ratio.to_qalpha(), 6))

# Minimal polynomials of arbitrary elements come from a closed form.
print("\nmin poly of alpha^2: X^3 + (%s)X^2 + (%s)X + (%s)" % min_poly_of(alpha_pow(2)))
