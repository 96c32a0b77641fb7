import os

import pytest

import salemforge

DATA = os.path.join(os.path.dirname(__file__), "..", "..", "data")


def poly(coeffs):
    return [int(c) for c in coeffs]


def test_coxeter_routes_agree():
    for n in (10, 13, 19, 24):
        assert salemforge.en_formula(n) == salemforge.en_matrix(n)


def test_salem_factor_19():
    f = salemforge.salem_factor(19)
    assert [c["d"] for c in f["cyclotomic_part"]] == [2, 5]
    assert poly(f["salem_candidate"]) == [1, -1, 0, -1, 1, 0, 0, -1, 0, 0, 1, -1, 0, -1, 1]


def test_integrality():
    assert salemforge.integrality_certificate(19)["passed"]
    assert not salemforge.integrality_certificate(20)["passed"]


def test_mcmullen_data():
    d = salemforge.mcmullen_data(19)
    assert d["n"] == 19
    with pytest.raises(ValueError):
        salemforge.mcmullen_data(20)


def test_fans():
    assert salemforge.check_fan(os.path.join(DATA, "fans", "plane.json"))["N"] == 3
    cert = salemforge.check_fan(salemforge.standard_fan("hirzebruch2"))
    assert cert["smooth"] and cert["complete"] and cert["N"] == 4
    bad = {"dim": 2, "max_cones": [[[1, 0], [1, 2]], [[1, 2], [-1, -1]], [[-1, -1], [1, 0]]]}
    assert salemforge.check_fan(bad)["failure"]["condition"] == "determinant"


def test_classify_product():
    r = salemforge.classify_product(os.path.join(DATA, "specs", "s19_plane.json"))
    assert r["siegel_count"] == 3
    assert len(r["fixed_points"]) == 6
    assert r["entropy"]["certified_positive"]


def test_run():
    code, report, _ = salemforge.run("coxeter", "oracle", "--n", 12)
    assert code == 0 and report["result"]["match"]
    code, report, err = salemforge.run("mcmullen", "data", "--n", 20)
    assert code == 1 and report["error"]["type"] == "PreconditionError" and err
    code, report, _ = salemforge.run("coxeter", "nonsense")
    assert code == 64 and report is None
