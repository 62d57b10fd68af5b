from fractions import Fraction

import pytest

import confrep


def test_dimensions_and_casimir():
    assert confrep.weyl_dim("D", (1, 0)) == 4
    assert confrep.weyl_dim("B", "1/2,1/2") == 4
    assert confrep.casimir("D", (1, 0)) == 3
    assert confrep.casimir("B", (Fraction(1, 2), Fraction(1, 2))) == Fraction(5, 2)


def test_charpoly_closed_form():
    r = confrep.charpoly("D", (1, 0))
    assert r["match"]
    assert r["charpoly_computed"] == "(t - 1)^9 (t + 1)^6 (t + 3)"


def test_classify():
    assert confrep.classify("B", "1/2,1/2", 2) == "excluded(b in n-N/2)"
    assert confrep.classify("D", (1, 0), Fraction(5, 3)) == "generic"
    assert confrep.classify("D", (0, 0), -2) == "excluded(b in -N), reducible"


def test_scan():
    r = confrep.scan("D", (1, 0), Fraction(1, 3), max_degree=3)
    assert r["verdict"] == "irreducible-up-to-3"
    assert all(level["full"] for level in r["levels"])
    bad = confrep.scan("D", (1, 0), 3, max_degree=1)
    assert bad["verdict"] == "proper-submodule-found"


def test_irrep_and_brackets():
    v = confrep.build_irrep("B", "1/2,1/2")
    assert v["schema"] == 1
    assert confrep.verify_brackets(2, "D")["failures"] == 0
    assert confrep.harmonic_dims(2, 2, "D") == [9, 1]


def test_suite_fault_injection():
    clean = confrep.suite(only=[3])
    assert clean["passed"] == 1
    faulty = confrep.suite(only=[3], inject_fault=True)
    assert faulty["passed"] == 0
    assert faulty["criteria"][0]["report"]["failures"] == 1


def test_bad_input():
    with pytest.raises(ValueError):
        confrep.build_irrep("D", "1,-2")
