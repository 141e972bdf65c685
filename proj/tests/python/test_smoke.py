import pytest

import ncinv

QM1 = ncinv.Algebra.quantum("-1")


def gnk73_series(N):
    # (1 - t^30 - t^33 - t^36 + t^48 + t^51) / ((1-t^15)(1-t^9)(1-t^21)(1-t^12))
    num = [0] * (N + 1)
    for e, c in [(0, 1), (30, -1), (33, -1), (36, -1), (48, 1), (51, 1)]:
        if e <= N:
            num[e] += c
    for f in (15, 9, 21, 12):
        for i in range(f, N + 1):
            num[i] += num[i - f]
    return num


def test_molien_gnk73():
    assert ncinv.molien(ncinv.Group.gnk(7, 3), 60) == gnk73_series(60)


def test_hj():
    assert ncinv.hj(17, 14) == [2, 2, 2, 2, 3, 2]


def test_classify():
    assert ncinv.classify(ncinv.Group.gnk(3, 2))["is_small"] is False
    r = ncinv.classify(ncinv.Group.gnk(7, 3))
    assert r["is_small"] and r["order"] == 42


def test_generators_and_verification():
    g = ncinv.generators(ncinv.Group.gnk(7, 3))
    assert g["degrees"] == [15, 9, 21, 12]
    assert g["provenance"] == "nc_formula"
    assert ncinv.verify_generation(ncinv.Group.gnk(7, 3), 40)["success"]


def test_presentations():
    jordan = ncinv.Algebra.jordan()
    p = ncinv.jordan_presentation(2)
    assert len(p.relations) == 4
    assert ncinv.verify_presentation(ncinv.Group.cyclic(jordan, 2, 1), p, 12)["success"]
    q5 = ncinv.Algebra.quantum("root:5")
    assert ncinv.verify_presentation(ncinv.Group.cyclic(q5, 5, 2), ncinv.quantum_presentation(5, 2, "root:5"), 40)["success"]


def test_auslander():
    r = ncinv.auslander_witness(ncinv.Group.gnk(3, 1), 24)
    assert r["witness"] == 4
    assert r["dims"][4] == (30, 30)
    assert ncinv.auslander_witness(ncinv.Group.gnk(3, 2), 12)["witness"] is None
    assert ncinv.verify_gh_identities(3, 1, 6)["all_ok"]


def test_theta_and_basis():
    assert ncinv.theta(3, 4)["target"] == "D_{5,3}"
    assert len(ncinv.gnk_basis(7, 3, 21)) == 2


def test_errors():
    with pytest.raises(ValueError):
        ncinv.generators(ncinv.Group.gnk(3, 2))
    with pytest.raises(ValueError):
        ncinv.Algebra.quantum("not-a-number")
