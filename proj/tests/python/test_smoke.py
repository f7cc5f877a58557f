import pathlib

import pytest

import staut_py

DATA = pathlib.Path(__file__).resolve().parents[1] / "data"


def test_rel3_negations():
    ok, checks, witness = staut_py.check_rel_negation(3)
    assert ok and checks == 512 and witness == ""


def test_quantale_object():
    q = staut_py.load_quantale("l3")
    assert len(q) == 3
    half = q.find("1/2")
    assert q.rdual(half) == half
    assert q.is_cyclic() == (True, None)
    cyclic, witness = staut_py.load_quantale("s3:(01)").is_cyclic()
    assert not cyclic and witness is not None


def test_quantale_check_report():
    rep = staut_py.quantale_check("rel:2", seed=3)
    assert rep["schema_version"] == 1
    assert rep["seed"] == 3
    assert rep["pass"]
    assert rep["suites"][0]["stats"]["elements"] == 16


def test_reports_are_deterministic():
    assert staut_py.quantale_check("l3") == staut_py.quantale_check("l3")


def test_scalar_table_and_failing_backend():
    assert staut_py.vec_scalar_table()["pass"]
    assert not staut_py.zang_suite("vec:-1")["pass"]
    assert staut_py.zang_suite("vec", window=2)["pass"]


def test_prof_and_braided():
    assert staut_py.prof_check(str(DATA / "l3two.vcat"))["pass"]
    assert staut_py.braided_d2_suite()["pass"]


def test_errors_are_value_errors():
    with pytest.raises(ValueError, match="rel:"):
        staut_py.load_quantale("nosuch:1")
    with pytest.raises(ValueError, match="4:10"):
        staut_py.load_quantale(str(DATA / "bad.quantale"))
