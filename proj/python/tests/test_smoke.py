import json

import pytest

import itsub


def test_check_and_normalize():
    assert itsub.check("(c0 -> c1) & (c0 -> c2)", "c0 -> c1 & c2")
    assert not itsub.check("c0", "c1")
    assert itsub.normalize("c0 & c1 → c2") == "c0 & c1 -> c2"


def test_parse_error_is_value_error():
    with pytest.raises(ValueError, match="offset 4"):
        itsub.check("c0->", "c1")
    with pytest.raises(itsub.ParseError):
        itsub.normalize("(c0")


def test_certificates_round_trip_through_bcd():
    cert = itsub.derive("c0 & c1", "c1 & c0")
    assert json.loads(cert)["rule"] == "glb"
    classic = itsub.to_bcd(cert)
    back = itsub.from_bcd(classic)
    assert json.loads(back)["lhs"] == "c0 & c1"
    assert itsub.derive("c0", "c1") is None


def test_bcd_and_trans():
    assert itsub.bcd("c0", "c1") is None
    assert json.loads(itsub.bcd("c0 & c1", "c1 & c0", max_depth=4))["rule"] == "glb"
    tree = itsub.trans("c0 -> c1 & c2", "c0 -> c1", "c0 & c3 -> c1", format="tree")
    assert tree.startswith("c0 -> c1 & c2 <: c0 & c3 -> c1  [arrow_prime]")


def test_consistency():
    assert itsub.consistent("c0 -> c1", "c2 -> c3")
    assert not itsub.self_consistent("c0 & c1")


def test_small_suite():
    assert "transitivity" in itsub.suite_names()
    report = itsub.run_suite("transitivity", max_size=1, triple_max_size=1)
    assert report["suite"] == "transitivity"
    assert report["ok"]
    assert all(p["failed"] == 0 for p in report["properties"].values())
    with pytest.raises(ValueError):
        itsub.run_suite("nope")
