"""Brute-force correlation oracle: exact aperiodic and periodic
correlation, peak statistics, and demerit factors.

The aperiodic crosscorrelation of f with g at shift s is
C_{f,g}(s) = sum_j f_{j+s} * conj(g_j); the full spectrum is the
coefficient list of the Laurent polynomial f(z) * conj(g)(z).  These are
computed directly from the sequences (never from the fast recursion of
grs.fastscan, which is tested against this module), with exact integer,
rational, or complex-rational values throughout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .convolve import convolve_int
from .qcomplex import CQ, as_cq, exact_magnitude, value_abs2, value_re_im
from .sequences import BudgetExceeded, Sequence, coefficient_budget

__all__ = [
    "Spectrum",
    "ZeroLength",
    "ShiftOutOfRange",
    "crosscorr",
    "spectrum",
    "pcc",
    "psl",
    "periodic_corr",
    "demerit_auto",
    "demerit_cross",
]


class ZeroLength(ValueError):
    """Peak statistics of an empty sequence are undefined."""


class ShiftOutOfRange(ValueError):
    """Periodic correlation shift outside [0, period)."""


@dataclass(frozen=True)
class Spectrum:
    """Sparse map shift -> exact correlation value, zero outside (-L, L)."""

    entries: dict
    support_bound: int

    def value(self, s: int):
        return self.entries.get(s, 0)

    def shifts(self) -> list[int]:
        return sorted(self.entries)

    def items_sorted(self):
        return sorted(self.entries.items())

    def __eq__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        mine = {s: as_cq(v) for s, v in self.entries.items()}
        theirs = {s: as_cq(v) for s, v in other.entries.items()}
        return mine == theirs

    def to_csv(self) -> str:
        lines = ["shift,re_num,re_den,im_num,im_den"]
        for s, v in self.items_sorted():
            re, im = value_re_im(v)
            lines.append(
                f"{s},{re.numerator},{re.denominator},{im.numerator},{im.denominator}"
            )
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        rows = []
        for s, v in self.items_sorted():
            re, im = value_re_im(v)
            rows.append(
                {
                    "shift": str(s),
                    "re_num": str(re.numerator),
                    "re_den": str(re.denominator),
                    "im_num": str(im.numerator),
                    "im_den": str(im.denominator),
                }
            )
        return json.dumps(rows, sort_keys=True)


def crosscorr(f: Sequence, g: Sequence, s: int):
    """Single correlation value from the definition (an overlap sum)."""
    if abs(s) >= max(f.length, g.length):
        return 0
    fi = f.int_coeffs()
    gi = g.int_coeffs()
    lo = max(0, -s)
    hi = min(g.length, f.length - s)
    if fi is not None and gi is not None:
        return sum(fi[j + s] * gi[j] for j in range(lo, hi))
    fc = f.cq_coeffs()
    gc = g.cq_coeffs()
    total = CQ()
    for j in range(lo, hi):
        total = total + fc[j + s] * gc[j].conj()
    if total.is_integer:
        return int(total.re)
    if total.is_real:
        return total.re
    return total


def _scaled_ints(values: list[Fraction]) -> tuple[list[int], int]:
    d = lcm(*(v.denominator for v in values)) if values else 1
    return [int(v * d) for v in values], d


def _spectrum_values(f: Sequence, g: Sequence) -> dict:
    """All nonzero C_{f,g}(s) via exact integer convolution.

    Rational coefficients are scaled to integers first; complex ones are
    split into four real convolutions.
    """
    offset = g.length - 1
    fi = f.int_coeffs()
    gi = g.int_coeffs()
    if fi is not None and gi is not None:
        conv = convolve_int(fi, gi[::-1])
        return {k - offset: v for k, v in enumerate(conv) if v}
    fc = f.cq_coeffs()
    gc = g.cq_coeffs()
    fre, df_re = _scaled_ints([v.re for v in fc])
    fim, df_im = _scaled_ints([v.im for v in fc])
    gre, dg_re = _scaled_ints([v.re for v in gc])
    gim, dg_im = _scaled_ints([v.im for v in gc])
    rr = convolve_int(fre, gre[::-1])
    ii = convolve_int(fim, gim[::-1])
    ir = convolve_int(fim, gre[::-1])
    ri = convolve_int(fre, gim[::-1])
    out = {}
    for k in range(f.length + g.length - 1):
        re = Fraction(rr[k], df_re * dg_re) + Fraction(ii[k], df_im * dg_im)
        im = Fraction(ir[k], df_im * dg_re) - Fraction(ri[k], df_re * dg_im)
        if re or im:
            v = CQ(re, im)
            out[k - offset] = int(re) if v.is_integer else (re if im == 0 else v)
    return out


def spectrum(f: Sequence, g: Sequence, budget: int | None = None) -> Spectrum:
    """Full crosscorrelation spectrum of (f, g), i.e. f(z) * conj(g)(z)."""
    cap = coefficient_budget(budget)
    if f.length + g.length - 1 > cap:
        raise BudgetExceeded(
            f"spectrum needs {f.length + g.length - 1} entries, budget is {cap}"
        )
    return Spectrum(_spectrum_values(f, g), max(f.length, g.length))


def _peak(entries: dict) -> tuple[object, list[int]]:
    """Maximum |value| (compared by exact squared modulus) and the sorted
    list of shifts attaining it."""
    best_sq = Fraction(0)
    shifts: list[int] = []
    for s, v in entries.items():
        sq = value_abs2(v)
        if sq > best_sq:
            best_sq = sq
            shifts = [s]
        elif sq == best_sq and sq > 0:
            shifts.append(s)
    if not shifts:
        return 0, []
    shifts.sort()
    return exact_magnitude(entries[shifts[0]]), shifts


def pcc(f: Sequence, g: Sequence):
    """Peak crosscorrelation: (max |C_{f,g}(s)|, all attaining shifts)."""
    return _peak(spectrum(f, g).entries)


def psl(f: Sequence):
    """Peak sidelobe level: (max |C_{f,f}(s)| over s != 0, attaining shifts).

    Only positive shifts are reported; the negative mirror follows from
    conjugate symmetry of the autocorrelation.
    """
    if f.length == 0:
        raise ZeroLength("cannot take the peak sidelobe of an empty sequence")
    entries = {
        s: v for s, v in spectrum(f, f).entries.items() if s > 0
    }
    return _peak(entries)


def periodic_corr(f: Sequence, g: Sequence, k: int, s: int):
    """Periodic crosscorrelation at shift s for period k:
    C_{f,g}(s) + C_{f,g}(s - k)."""
    if not (0 <= s < k):
        raise ShiftOutOfRange(f"shift {s} not in [0, {k})")
    if f.length > k or g.length > k:
        raise ValueError("period must be at least the sequence lengths")
    a = crosscorr(f, g, s)
    b = crosscorr(f, g, s - k)
    return as_cq(a) + as_cq(b) if isinstance(a, CQ) or isinstance(b, CQ) else a + b


def _energy(f: Sequence) -> Fraction:
    e = as_cq(crosscorr(f, f, 0))
    return e.re


def demerit_auto(f: Sequence) -> Fraction:
    """Sum of squared autocorrelation magnitudes off the peak, normalized
    by the squared zero-shift value."""
    if f.is_zero:
        raise ZeroLength("demerit factor of the zero sequence is undefined")
    entries = spectrum(f, f).entries
    num = sum((value_abs2(v) for s, v in entries.items() if s != 0), Fraction(0))
    e = _energy(f)
    return num / (e * e)


def demerit_cross(f: Sequence, g: Sequence) -> Fraction:
    """Sum of squared crosscorrelation magnitudes over all shifts,
    normalized by the product of the zero-shift autocorrelations."""
    if f.is_zero or g.is_zero:
        raise ZeroLength("demerit factor needs nonzero sequences")
    entries = spectrum(f, g).entries
    num = sum((value_abs2(v) for v in entries.values()), Fraction(0))
    return num / (_energy(f) * _energy(g))
