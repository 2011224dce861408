import io
from fractions import Fraction

import pytest

from grs.correlation import crosscorr, spectrum
from grs.qcomplex import CQ
from grs.sequences import (
    BudgetExceeded,
    DegreeTooLarge,
    EnergyMismatch,
    GolayPair,
    NotGolay,
    Sequence,
    ZeroSequence,
    grs_pair,
    grs_step,
    read_seed_pair,
    read_sequence,
    rudin_shapiro,
    validate_seed,
    write_seed_pair,
    write_sequence,
)


def test_step_from_level_one():
    pair = GolayPair(Sequence.binary("++"), Sequence.binary("+-"), 1, 1)
    nxt = grs_step(pair)
    assert nxt.x == Sequence.binary("+++-")
    assert nxt.y == Sequence.binary("++-+")


def test_step_from_unit_seed():
    pair = GolayPair(Sequence([1]), Sequence([1]), 0, 1)
    nxt = grs_step(pair)
    assert nxt.x == Sequence.binary("++")
    assert nxt.y == Sequence.binary("+-")


def test_step_with_length_two_seed():
    pair = GolayPair(Sequence.binary("++"), Sequence.binary("+-"), 0, 2)
    nxt = grs_step(pair)
    assert nxt.x == Sequence.binary("+++-")


def test_pair_level_two():
    pair = rudin_shapiro(2)
    assert pair.x.sign_string() == "+++-"
    assert pair.y.sign_string() == "++-+"


def test_pair_level_zero_is_seed(seed_pm4):
    pair = grs_pair(seed_pm4, 0)
    assert pair.x == seed_pm4.x0 and pair.y == seed_pm4.y0


def test_level_ten_crosscorr_value():
    pair = rudin_shapiro(10)
    assert pair.x.is_binary and pair.x.length == 1024
    assert crosscorr(pair.x, pair.y, -341) == 153


@pytest.mark.parametrize("n", range(0, 8))
def test_lengths_and_binary_propagation(n, seed_pm2):
    pair = grs_pair(seed_pm2, n)
    assert pair.length == 2 << n
    assert pair.x.is_binary and pair.y.is_binary
    assert pair.x.degree == pair.length - 1


def test_degree_below_length_always():
    # A seed whose y0 has degree below ell0 - 1 keeps degrees below 2^n*ell0.
    seed = validate_seed(Sequence([1]), Sequence([1]), 2)
    for n in range(6):
        pair = grs_pair(seed, n)
        assert pair.x.degree < pair.length
        assert pair.y.degree < pair.length


def test_complementarity_and_energy_doubling(corpus):
    for seed in corpus:
        e0 = crosscorr(seed.x0, seed.x0, 0) + crosscorr(seed.y0, seed.y0, 0)
        for n in range(0, 9):
            pair = grs_pair(seed, n)
            sxx = spectrum(pair.x, pair.x)
            syy = spectrum(pair.y, pair.y)
            for s in range(1, pair.length):
                assert sxx.value(s) + syy.value(s) == 0
            assert sxx.value(0) + syy.value(0) == (1 << n) * e0


def test_validate_seed_diagnostics():
    assert validate_seed(Sequence([1]), Sequence([1]), 1).ell0 == 1
    pm = validate_seed(Sequence.binary("++"), Sequence.binary("+-"), 2)
    assert pm.is_int
    with pytest.raises(NotGolay) as err:
        validate_seed(Sequence.binary("++"), Sequence.binary("++"), 2)
    assert err.value.shift == 1
    with pytest.raises(EnergyMismatch):
        validate_seed(Sequence([1, 1]), Sequence([1]), 2)
    with pytest.raises(ZeroSequence):
        validate_seed(Sequence([0]), Sequence([1]), 1)
    with pytest.raises(DegreeTooLarge):
        validate_seed(Sequence.binary("++"), Sequence.binary("+-"), 1)


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        rudin_shapiro(10, budget=100)


def test_equality_ignores_trailing_zeros():
    assert Sequence([1, 1, 0, 0], 4) == Sequence([1, 1])
    assert Sequence([0, 1]) != Sequence([1])
    assert hash(Sequence([1, 1, 0, 0], 4)) == hash(Sequence.binary("++"))


def test_mixed_coefficient_kinds():
    s = Sequence([Fraction(1, 2), CQ(0, Fraction(1))])
    assert not s.is_binary
    assert not s.is_rational_real
    assert s.degree == 1


def test_binary_roundtrip(tmp_path):
    pair = rudin_shapiro(4)
    buf = io.StringIO()
    write_sequence(pair.x, buf)
    buf.seek(0)
    assert read_sequence(buf) == pair.x
    assert buf.getvalue().startswith("len=16 kind=binary\n")


def test_rational_roundtrip():
    seq = Sequence([CQ(Fraction(1, 3), Fraction(-2, 7)), CQ(Fraction(5), 0), 1])
    buf = io.StringIO()
    write_sequence(seq, buf)
    text = buf.getvalue()
    assert text.startswith("len=3 kind=rational\n")
    assert read_sequence(io.StringIO(text)) == seq
    # Bit-exact: writing the parsed sequence again gives identical text.
    buf2 = io.StringIO()
    write_sequence(read_sequence(io.StringIO(text)), buf2)
    assert buf2.getvalue() == text


def test_seed_pair_roundtrip(seed_pm4):
    buf = io.StringIO()
    write_seed_pair(seed_pm4, buf)
    buf.seek(0)
    again = read_seed_pair(buf)
    assert again == seed_pm4


def test_product_identities_against_oracle(corpus):
    """The four level-doubling product identities, coefficientwise.

    |x_n|^2   = |x_{n-1}|^2 + |y_{n-1}|^2 + shift(x y*, -l) + shift(y x*, +l)
    |y_n|^2   = same with minus signs on the cross terms
    x_n y_n*  = |x|^2 - |y|^2 - shift(x y*, -l) + shift(y x*, +l)
    y_n x_n*  = |x|^2 - |y|^2 + shift(x y*, -l) - shift(y x*, +l)
    """

    def entries(f, g):
        return {s: v for s, v in spectrum(f, g).entries.items()}

    def combine(parts):
        out = {}
        for sign, shift_by, ent in parts:
            for s, v in ent.items():
                out[s + shift_by] = out.get(s + shift_by, 0) + sign * v
        return {s: v for s, v in out.items() if v != 0}

    for seed in corpus:
        for n in range(1, 7):
            prev = grs_pair(seed, n - 1)
            cur = grs_pair(seed, n)
            ell = prev.length
            xx = entries(prev.x, prev.x)
            yy = entries(prev.y, prev.y)
            xy = entries(prev.x, prev.y)
            yx = entries(prev.y, prev.x)
            assert entries(cur.x, cur.x) == combine(
                [(1, 0, xx), (1, 0, yy), (1, -ell, xy), (1, ell, yx)]
            )
            assert entries(cur.y, cur.y) == combine(
                [(1, 0, xx), (1, 0, yy), (-1, -ell, xy), (-1, ell, yx)]
            )
            assert entries(cur.x, cur.y) == combine(
                [(1, 0, xx), (-1, 0, yy), (-1, -ell, xy), (1, ell, yx)]
            )
            assert entries(cur.y, cur.x) == combine(
                [(1, 0, xx), (-1, 0, yy), (1, -ell, xy), (-1, ell, yx)]
            )
