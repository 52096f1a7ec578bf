from fractions import Fraction

import pytest

import latcd


def test_known_densities():
    assert latcd.density(latcd.boolean4()) == Fraction(1, 2)
    assert latcd.con_count(latcd.n_k(8)) == 19
    assert latcd.density(latcd.construct("gsum:b4,b4")) == Fraction(1, 4)
    assert latcd.density(latcd.m_k(4)) == Fraction(1, 16)


def test_lattice_object():
    b4 = latcd.boolean4()
    assert len(b4) == 4
    assert b4.join(1, 2) == 3 and b4.meet(1, 2) == 0
    assert latcd.canonical_code(b4) == "0004dc"
    assert latcd.is_isomorphic(latcd.from_json(latcd.to_json(b4)), b4)


def test_enumeration_and_tables():
    assert [len(latcd.enumerate(n)) for n in range(1, 8)] == [1, 1, 1, 2, 5, 15, 53]
    assert len(latcd.enumerate(5, "modular")) == 4
    assert [d for d, _, _ in latcd.scd(5)] == [1, Fraction(1, 2), Fraction(5, 16), Fraction(1, 8)]
    assert latcd.lnc(6, 1) == 32
    assert latcd.f_of_p(Fraction(3, 4)) == 42


def test_analyze():
    info = latcd.analyze(latcd.n_k(8))
    assert info["density"] == Fraction(19, 128)
    assert info["skeleton_size"] == 5


def test_errors():
    with pytest.raises(latcd.LatcdError, match="DomainError"):
        latcd.m_k(2)
    with pytest.raises(latcd.LatcdError, match="BudgetExceeded"):
        latcd.enumerate(11)


def test_cli():
    code, out, _ = latcd.run_cli(["construct", "nk:8"])
    assert code == 0 and "19/2^7" in out
