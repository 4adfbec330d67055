"""Smoke tests for the pil_lab python bindings."""

import pytest

import pil_lab as pl


def test_partition_parse_and_format():
    p = pl.Partition("3+1+1")
    assert p.pairs == [(1, 2), (3, 1)]
    assert str(p) == "1^2 3"
    assert p.weight == 5
    assert p.multiplicity(1) == 2
    assert p.multiplicity(7) == 0

    big = pl.parse_partition("4^5 6 12^7 18^8 24^9 36")
    assert big.weight == 506
    assert big.exponent_str() == "4^5 6^1 12^7 18^8 24^9 36^1"

    assert pl.Partition("") == pl.Partition()
    with pytest.raises(ValueError):
        pl.Partition("3^0")


def test_enumeration_and_statistics():
    parts = pl.enumerate_partitions(5)
    assert len(parts) == 7
    assert str(parts[0]) == "5"
    assert str(parts[-1]) == "1^5"
    assert pl.total_parts(parts[1]) == 2
    assert pl.distinct_parts(pl.Partition("3+1+1")) == 2
    assert pl.parts_in_class(pl.Partition("3+1+1"), 2, 1) == 3
    assert pl.mult_decomposition(pl.Partition("12^7"), 12, 2) == (1, 3, [1, 1])
    assert pl.kadic_form(24, 6, 2) == (2, 1)


def test_counting():
    assert pl.count_O(0, 2, 1, 5) == 3
    assert pl.count_O(1, 2, 1, 5) == 4
    assert pl.count_D(0, 2, 1, 5) == 3
    assert pl.count_O(3, 2, 2, 29) == 8
    assert pl.excess(0, 2, 1, 5) == 4
    assert pl.is_in_O(pl.Partition("4+1"), 1, 2, 1)


def test_bijection():
    d_side = pl.Partition("4^5 6 12^7 18^8 24^9 36")
    image = pl.psi(d_side, 2, 6)
    assert str(image) == "4^5 6^7 18^2 24^3 36^4 48^4"
    assert pl.phi(image, 2, 6) == d_side

    report = pl.verify_roundtrip(10, 2, 1)
    assert report["pass"] is True

    table = pl.table29_text()
    assert table.splitlines()[0] == "1^1 4^1 8^1 16^1 <-> 1^1 2^2 4^2 8^2"
    assert len(table.splitlines()) == 8


def test_series():
    s = pl.gf_O(2, 1, 10)
    assert s.coeff(5, 0, 0) == 3
    assert s.coeff(5, 1, 0) == 4
    assert s == pl.gf_D(2, 1, 10)
    deriv = pl.gf_O_w(2, 1, 8).d_dw_at_1()
    assert deriv.coeff(5, 0, 0) == 9
    assert s.dump().splitlines()[0] == "0: [ (0,0,1) ]"


def test_run_check():
    report = pl.run_check("beck", n_max=10)
    assert report["check"] == "beck"
    assert report["pass"] is True
    assert report["failures"] == []
    assert "beck" in pl.check_names()
    with pytest.raises(ValueError):
        pl.run_check("not_a_check")
