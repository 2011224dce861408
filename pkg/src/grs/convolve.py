"""Exact integer polynomial multiplication.

The correlation oracle needs products of integer polynomials with tens of
thousands of terms, computed exactly.  Small products use the schoolbook
loop.  Larger ones pack each polynomial into one big Python integer
(fixed-width digits) and let big-integer multiplication do the work; the
digits of the product are the convolution.  Negative coefficients are
handled by offsetting both inputs to be nonnegative and subtracting the
three correction terms, which are plain window sums.  Everything stays in
integer arithmetic, so results are exact at any size.
"""

from __future__ import annotations

import numpy as np

__all__ = ["convolve_int", "schoolbook_convolve"]

_SCHOOLBOOK_CUTOFF = 1 << 12  # len(a) * len(b) at or below this: direct loops


def schoolbook_convolve(a: list[int], b: list[int]) -> list[int]:
    """Reference quadratic convolution; exact for arbitrary Python ints."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        if av == 0:
            continue
        for j, bv in enumerate(b):
            out[i + j] += av * bv
    return out


def _pack(vals: list[int], nbytes: int) -> int:
    buf = bytearray(len(vals) * nbytes)
    for i, v in enumerate(vals):
        buf[i * nbytes : (i + 1) * nbytes] = v.to_bytes(nbytes, "little")
    return int.from_bytes(bytes(buf), "little")


def _unpack(num: int, nbytes: int, count: int) -> list[int]:
    raw = num.to_bytes(nbytes * count, "little")
    if nbytes <= 7:
        # Digits fit in int64 (< 2**56), so decode with one matrix product.
        mat = np.frombuffer(raw, dtype=np.uint8).reshape(count, nbytes)
        weights = (256 ** np.arange(nbytes, dtype=np.int64)).astype(np.int64)
        return (mat.astype(np.int64) @ weights).tolist()
    return [
        int.from_bytes(raw[i * nbytes : (i + 1) * nbytes], "little")
        for i in range(count)
    ]


def _window_sums(vals: list[int], width: int, out_len: int) -> list[int]:
    """Convolution of ``vals`` with a run of ``width`` ones (exact)."""
    prefix = [0]
    for v in vals:
        prefix.append(prefix[-1] + v)
    n = len(vals)
    out = []
    for k in range(out_len):
        lo = max(0, k - width + 1)
        hi = min(k, n - 1)
        out.append(prefix[hi + 1] - prefix[lo] if hi >= lo else 0)
    return out


def convolve_int(a, b) -> list[int]:
    """Exact convolution (polynomial product coefficients) of integer lists."""
    a = [int(v) for v in a]
    b = [int(v) for v in b]
    if not a or not b:
        return []
    if len(a) * len(b) <= _SCHOOLBOOK_CUTOFF:
        return schoolbook_convolve(a, b)

    out_len = len(a) + len(b) - 1
    ma = max(0, -min(a))
    mb = max(0, -min(b))
    ap = [v + ma for v in a]
    bp = [v + mb for v in b]
    max_ap = max(ap)
    max_bp = max(bp)
    if max_ap == 0 or max_bp == 0:
        return [0] * out_len

    digit_bound = min(len(a), len(b)) * max_ap * max_bp
    nbytes = (digit_bound.bit_length() + 8) // 8
    digits = _unpack(_pack(ap, nbytes) * _pack(bp, nbytes), nbytes, out_len)

    # conv(a+ma, b+mb) = conv(a,b) + mb*conv(a,1) + ma*conv(1,b) + ma*mb*conv(1,1)
    if ma == 0 and mb == 0:
        return digits
    corr_a = _window_sums(ap, len(b), out_len) if mb else None
    corr_b = _window_sums(bp, len(a), out_len) if ma else None
    out = digits
    if corr_a is not None:
        out = [x - mb * w for x, w in zip(out, corr_a)]
    if corr_b is not None:
        out = [x - ma * w for x, w in zip(out, corr_b)]
    if ma and mb:
        ones = _window_sums([1] * len(a), len(b), out_len)
        out = [x + ma * mb * w for x, w in zip(out, ones)]
    return out
