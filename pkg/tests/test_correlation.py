import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grs.convolve import convolve_int, schoolbook_convolve
from grs.correlation import (
    ShiftOutOfRange,
    ZeroLength,
    crosscorr,
    demerit_auto,
    demerit_cross,
    pcc,
    periodic_corr,
    psl,
    spectrum,
)
from grs.qcomplex import CQ, as_cq
from grs.sequences import Sequence, grs_pair, rudin_shapiro


def test_crosscorr_basics(rs_seed):
    one = Sequence([1])
    assert crosscorr(one, one, 0) == 1
    p1 = rudin_shapiro(1)
    assert crosscorr(p1.x, p1.y, -1) == -1
    assert crosscorr(p1.x, p1.y, p1.x.length + p1.y.length) == 0


def test_spectrum_matches_pointwise(corpus):
    for seed in corpus:
        pair = grs_pair(seed, 3)
        spec = spectrum(pair.x, pair.y)
        for s in range(-pair.length, pair.length + 1):
            assert as_cq(spec.value(s)) == as_cq(crosscorr(pair.x, pair.y, s))
        assert all(abs(s) < spec.support_bound for s in spec.entries)


def test_spectrum_published_values():
    p2 = rudin_shapiro(2)
    spec = spectrum(p2.x, p2.y)
    assert [(s, spec.value(s)) for s in (-3, -1, 1, 3)] == [
        (-3, 1),
        (-1, 1),
        (1, 3),
        (3, -1),
    ]
    p3 = rudin_shapiro(3)
    assert spectrum(p3.x, p3.y).value(-3) == -5


def test_spectrum_single_term():
    f = Sequence([0, 0, CQ(Fraction(3, 2), Fraction(1, 2))])
    spec = spectrum(f, f)
    assert spec.entries == {0: Fraction(10, 4)}


def test_pcc_values():
    p1 = rudin_shapiro(1)
    assert pcc(p1.x, p1.y) == (1, [-1, 1])
    p10 = rudin_shapiro(10)
    assert pcc(p10.x, p10.y) == (153, [-341])
    one = Sequence([1])
    assert pcc(one, one) == (1, [0])


def test_psl_values():
    p2 = rudin_shapiro(2)
    value, shifts = psl(p2.x)
    assert (value, shifts) == (1, [1, 3])
    assert spectrum(p2.x, p2.x).value(3) == -1
    p4 = rudin_shapiro(4)
    assert psl(p4.x) == (5, [11])
    assert spectrum(p4.x, p4.x).value(11) == -5
    assert psl(Sequence([1])) == (0, [])
    with pytest.raises(ZeroLength):
        psl(Sequence([], 0))


def test_periodic_corr():
    one = Sequence([1])
    assert periodic_corr(one, one, 1, 0) == 1
    p1 = rudin_shapiro(1)
    assert periodic_corr(p1.x, p1.y, 2, 1) == 0
    p2 = rudin_shapiro(2)
    assert periodic_corr(p2.x, p2.y, 4, 1) == 4
    with pytest.raises(ShiftOutOfRange):
        periodic_corr(p1.x, p1.y, 2, 2)


def test_periodic_bounded_by_twice_aperiodic():
    pair = rudin_shapiro(6)
    peak, _ = pcc(pair.x, pair.y)
    k = pair.length
    for s in range(k):
        v = periodic_corr(pair.x, pair.y, k, s)
        assert as_cq(v).abs2() <= (2 * peak) ** 2


def test_demerit_values():
    p2 = rudin_shapiro(2)
    assert demerit_auto(p2.x) == Fraction(1, 4)
    p1 = rudin_shapiro(1)
    assert demerit_cross(p1.x, p1.y) == Fraction(1, 2)
    assert demerit_auto(Sequence([-1])) == 0


def test_demerit_trend():
    pair = rudin_shapiro(10)
    assert abs(demerit_auto(pair.x) - Fraction(1, 3)) < Fraction(1, 3) / 20
    assert abs(demerit_cross(pair.x, pair.y) - Fraction(2, 3)) < Fraction(2, 3) / 20


small_values = st.tuples(
    st.integers(-4, 4), st.integers(-2, 2), st.integers(1, 3)
).map(lambda t: CQ(Fraction(t[0], t[2]), Fraction(t[1], t[2])))
small_seqs = st.lists(small_values, min_size=1, max_size=6).map(Sequence)


@settings(max_examples=60, deadline=None)
@given(small_seqs, small_seqs)
def test_conjugate_flip_property(f, g):
    fg = spectrum(f, g)
    gf = spectrum(g, f)
    shifts = set(fg.entries) | set(-s for s in gf.entries)
    for s in shifts:
        assert as_cq(gf.value(s)) == as_cq(fg.value(-s)).conj()


@settings(max_examples=60, deadline=None)
@given(small_seqs, small_seqs)
def test_pcc_symmetry_property(f, g):
    vf, _ = _pcc_sq(f, g)
    vg, _ = _pcc_sq(g, f)
    assert vf == vg


def _pcc_sq(f, g):
    entries = spectrum(f, g).entries
    best = Fraction(0)
    where = []
    for s, v in entries.items():
        sq = as_cq(v).abs2()
        if sq > best:
            best, where = sq, [s]
        elif sq == best:
            where.append(s)
    return best, sorted(where)


def test_psl_equal_across_golay_pair(corpus):
    for seed in corpus:
        for n in range(0, 7):
            pair = grs_pair(seed, n)
            assert psl(pair.x)[0] == psl(pair.y)[0]


def test_seed_bound_for_valid_seeds(corpus):
    # Peak crosscorrelation after one step is at most 2*PSL0 + PCC0.
    for seed in corpus:
        p1 = grs_pair(seed, 1)
        lhs, _ = pcc(p1.x, p1.y)
        assert lhs <= 2 * psl(seed.x0)[0] + pcc(seed.x0, seed.y0)[0]


def test_exports_roundtrip():
    pair = rudin_shapiro(3)
    spec = spectrum(pair.x, pair.y)
    csv_text = spec.to_csv()
    lines = csv_text.strip().splitlines()
    assert lines[0] == "shift,re_num,re_den,im_num,im_den"
    parsed = {}
    for line in lines[1:]:
        s, rn, rd, im_n, im_d = line.split(",")
        assert im_n == "0" and im_d == "1"
        parsed[int(s)] = Fraction(int(rn), int(rd))
    assert parsed == {s: Fraction(v) for s, v in spec.entries.items()}
    rows = json.loads(spec.to_json())
    assert {int(r["shift"]): int(r["re_num"]) for r in rows} == spec.entries


def test_convolve_matches_schoolbook():
    rng = random.Random(7)
    for _ in range(40):
        a = [rng.randint(-9, 9) for _ in range(rng.randint(1, 80))]
        b = [rng.randint(-9, 9) for _ in range(rng.randint(1, 80))]
        assert convolve_int(a, b) == schoolbook_convolve(a, b)
    # Force the packed path with a long +/-1 convolution.
    a = [rng.choice((1, -1)) for _ in range(3000)]
    b = [rng.choice((1, -1)) for _ in range(500)]
    assert convolve_int(a, b) == schoolbook_convolve(a, b)
    big = [rng.randint(-(10**12), 10**12) for _ in range(200)]
    assert convolve_int(big, big) == schoolbook_convolve(big, big)
