from fractions import Fraction

import pytest

import triality


def test_group_order():
    assert triality.wd4_order() == 192


def test_atlas_records():
    rows = triality.atlas()
    assert len(rows) == 98
    assert [r["row"] for r in rows] == list(range(1, 99))
    assert sum(r["class_size"] for r in rows) == 605


def test_triality_permutation():
    t = triality.triality_on_rows()
    assert sum(1 for n, img in enumerate(t, start=1) if n == img) == 23
    assert t[8] == 11 and t[32] == 34 and t[75] == 79


def test_resolvent_pair():
    f4p, f4s = triality.resolvent_pair("0", "0", "0", "1")
    assert [Fraction(c) for c in f4p] == [Fraction(1, 4), 0, 3, 0, 1]
    assert [Fraction(c) for c in f4s] == [Fraction(1, 4), 0, -3, 0, 1]
    with pytest.raises(triality.TrialityError):
        triality.resolvent_pair("1", "2", "3", "0")


def test_witt():
    assert triality.hilbert_symbol("-1", "-1", 0) == -1
    assert triality.hilbert_symbol("2", "3", 3) == -1
    assert triality.is_witt_equivalent(["2", "3"], ["5", "30"])
    assert not triality.is_witt_equivalent(["1", "1"], [])


def test_laws_and_hurwitz():
    assert triality.triality_laws_hold([])
    assert triality.hurwitz_closed()


def test_cli_in_process():
    code, out, _ = triality.run_cli(["resolvent", "--coeffs", "0", "0", "0", "1"])
    assert code == 0
    assert "x^4 + 3x^2 + 1/4" in out
