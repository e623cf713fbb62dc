"""Smoke tests for the python module built by the main CMake tree.

Run with PYTHONPATH pointing at the directory containing the extension,
e.g. PYTHONPATH=build/python python -m pytest python/tests -q
"""
from fractions import Fraction

import pytest

import horadam


def test_builtin_terms_are_exact():
    F = horadam.builtin("F")
    assert F.term(10) == 55
    assert F.term(-10) == -55
    assert horadam.builtin("J").term(-1) == Fraction(1, 2)
    assert horadam.builtin("j").term(-4) == Fraction(17, 16)
    assert horadam.builtin("P").term(-3) == 5
    assert horadam.builtin("Q").term(4) == 34
    assert F.term_fast(400) == F.term(400)


def test_negative_index_closed_form():
    assert horadam.negative_index_closed_form("F", 5) == 5
    assert horadam.negative_index_closed_form("L", 3) == -4
    assert horadam.negative_index_closed_form("J", 3) == Fraction(3, 8)
    with pytest.raises(ValueError):
        horadam.negative_index_closed_form("F", -1)


def test_custom_sequence():
    s = horadam.sequence(3, -2, 1, 4, name="demo")
    assert s.term(2) == 10
    assert s.term(5) == 94
    assert s.name == "demo"
    half = horadam.sequence(1, 2, Fraction(1, 2), 1)
    assert half.term(2) == 2
    with pytest.raises(ValueError):
        horadam.sequence(1, 0, 0, 1)


def test_catalog_lookup_and_check():
    ids = horadam.catalog_ids()
    assert len(ids) == 108
    assert "catalan-F" in ids
    assert "weighted-sum-QP" in ids

    out = horadam.check("catalan-F", {"d": 5, "a": 2})
    assert out["outcome"] == "Holds"
    out = horadam.check("lucas-double", {"u": -6})
    assert out["outcome"] == "Holds"
    skip = horadam.check(
        "weighted-sum-FL",
        {"a": 2, "b": 0, "c": 1, "d": 3, "e": 3, "m": 4, "k": 3},
    )
    assert skip == {"outcome": "Skipped", "reason": "ZeroDenominator"}
    assert "three-square-j" in horadam.manifest()


def test_verify_and_fuzz():
    rep = horadam.verify(ids=["catalan-F"])
    assert rep["passed"] and rep["fails"] == 0 and rep["checks"] == 169

    rep = horadam.verify(
        ids=["three-square-L"], ranges={"u": (-5, 5), "v": (-5, 5)}
    )
    assert rep["checks"] == 121 and rep["fails"] == 0

    fz = horadam.fuzz(seed=42, count=50)
    assert fz["fails"] == 0 and fz["checks"] == 500 and fz["seed"] == 42
    assert horadam.fuzz_jsonl(seed=7, count=20) == horadam.fuzz_jsonl(
        seed=7, count=20
    )
