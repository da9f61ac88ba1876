import math

import pytest

import zetalab


def test_dual():
    assert zetalab.dual("1,1,2,1") == "3,2"
    assert zetalab.dual("3,2") == "1,1,2,1"


def test_eval_series_value():
    v, err = zetalab.eval_series_float("binom:2 denom:n1^1")
    assert abs(v - 4 / math.pi) < 1e-12
    assert err < 1e-12


def test_series_vs_integral_route():
    s = float(zetalab.eval_series("binom:1 denom:n^2 f:t(1)")["value"])
    i = float(zetalab.eval_series_integral("binom:1 denom:n^2 f:t(1)")["value"])
    assert abs(s - i) < 1e-10
    assert abs(s - (3.5 * 1.2020569031595942854 - 3 * (math.pi**2 / 6) * math.log(2))) < 1e-9


def test_constants():
    re, im = zetalab.mtv("2")
    assert abs(float(re) - math.pi**2 / 8) < 1e-20
    assert float(im) == 0
    re, _ = zetalab.cmzv("2~")  # zeta(2; -1) = -pi^2/12
    assert abs(float(re) + math.pi**2 / 12) < 1e-20


def test_finsum_exact():
    assert zetalab.finsum("t", "1,1", 3) == "3/5"
    assert zetalab.finsum("z", "2", 4) == "205/144"


def test_verify_report():
    report = zetalab.verify("const-log2")
    assert len(report) == 1
    assert report[0]["id"] == "const-log2"
    assert report[0]["verdict"] == "pass"


def test_explain():
    assert "4/pi" in zetalab.explain("thm5.1-ex1")
    with pytest.raises(Exception):
        zetalab.explain("no-such-identity")


def test_registry_is_large_and_sorted():
    ids = zetalab.registry_ids()
    assert len(ids) > 100
    assert ids == sorted(ids)
