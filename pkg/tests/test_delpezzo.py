import itertools

import pytest

from burniat.delpezzo import (BOUNDARY_CLASS, BOUNDARY_ORDER, LAT, NEF_CLASS,
                              SYMMETRY_GROUP, NotInLattice, SymmetricCoords,
                              _apply_symmetry, classify_exceptional,
                              dk_effective, eff_decompose, eff_witness,
                              enumerate_nef, from_symmetric, is_nef_class,
                              nef_decompose, to_symmetric)
from burniat.lattice import YClass, arithmetic_genus, canonical_class

H = LAT.h()
E1, E2, E3 = LAT.e(1), LAT.e(2), LAT.e(3)
MINUS_K = -canonical_class(LAT)


def resum(dec, classes):
    total = LAT.zero()
    for name, mult in dec.items():
        total = total + mult * classes[name]
    return total


def test_symmetric_coordinates_examples():
    assert to_symmetric(H - E1).as_tuple() == (2, 1, 0, 0, 1, 0, 0)
    assert to_symmetric(H).as_tuple() == (3, 0, 0, 0, 1, 1, 1)
    assert from_symmetric(SymmetricCoords(6, 2, 2, 2, 0, 0, 0)) == \
        2 * (2 * H - E1 - E2 - E3)


def test_symmetric_round_trip():
    for nh in range(-3, 4):
        for ni in itertools.product(range(-2, 3), repeat=3):
            cls = YClass((nh,) + ni)
            assert from_symmetric(to_symmetric(cls)) == cls


def test_from_symmetric_rejects():
    with pytest.raises(NotInLattice):
        from_symmetric(SymmetricCoords(1, 0, 0, 0, 0, 0, 0))  # congruence
    with pytest.raises(NotInLattice):
        from_symmetric(SymmetricCoords(2, 1, 0, 0, 0, 1, 0))  # not a class


def test_degree_is_sum_of_boundary_pairings():
    # -K is the sum of the six (-1)-curves, so d = a0+b0+c0+a3+b3+c3
    total = LAT.zero()
    for f in BOUNDARY_ORDER:
        total = total + BOUNDARY_CLASS[f]
    assert total == MINUS_K
    s = to_symmetric(YClass((5, -2, -1, 0)))
    assert s.d == s.a0 + s.b0 + s.c0 + s.a3 + s.b3 + s.c3


def test_eff_decompose_examples():
    assert dict(eff_decompose(E1)) == {"A0": 1}
    assert dict(eff_decompose(MINUS_K)) == {f: 1 for f in BOUNDARY_ORDER}
    assert eff_decompose(H - E1 - E2 - E3) is None
    assert eff_witness(H - E1 - E2 - E3) == "h2"


def test_nef_decompose_examples():
    f1 = NEF_CLASS["f1"]
    assert dict(nef_decompose(f1)) == {"f1": 1}
    assert dict(nef_decompose(MINUS_K)) == {"f1": 1, "f2": 1, "f3": 1}
    assert nef_decompose(E1) is None


def test_decompositions_resum():
    for nh in range(0, 7):
        for ni in itertools.product(range(-4, 1), repeat=3):
            cls = YClass((nh,) + ni)
            dec = eff_decompose(cls)
            if dec is not None:
                assert resum(dec, BOUNDARY_CLASS) == cls
            ndec = nef_decompose(cls)
            if ndec is not None:
                assert resum(ndec, NEF_CLASS) == cls


def test_classify_examples():
    et = classify_exceptional(H - E1)
    assert (et.family, et.n, et.p_a) == ("Type1", 1, 0)
    et = classify_exceptional(2 * (H - E1))
    assert (et.family, et.n, et.p_a) == ("Type1", 2, -1)
    et = classify_exceptional(MINUS_K)
    assert (et.family, et.p_a) == ("NonExceptional", 1)
    et = classify_exceptional(2 * (2 * H - E1 - E2 - E3))
    assert (et.family, et.p_a) == ("Type4", 0)


def test_classify_requires_nef():
    with pytest.raises(ValueError):
        classify_exceptional(E1)


def test_classify_symmetry_invariance():
    # the verdict family/n is constant on symmetry orbits
    for cls in enumerate_nef(8):
        et = classify_exceptional(cls)
        s = to_symmetric(cls)
        for sym in SYMMETRY_GROUP:
            image = from_symmetric(_apply_symmetry(sym, s))
            et2 = classify_exceptional(image)
            assert (et2.family, et2.n) == (et.family, et.n)


def test_genus_exceptions_scan_small():
    for cls in enumerate_nef(8):
        pa = arithmetic_genus(cls)
        fam = classify_exceptional(cls).family
        if cls.is_zero():
            continue
        assert (pa <= 0) == (fam != "NonExceptional")


def test_dk_effective_examples():
    k = canonical_class(LAT)
    assert dict(dk_effective(-2 * k)) == {f: 1 for f in BOUNDARY_ORDER}
    # D = 4h - e1 - e2 - e3 has D + K = h; any valid decomposition works
    d = YClass((4, -1, -1, -1))
    dec = dk_effective(d)
    assert resum(dec, BOUNDARY_CLASS) == H


def test_dk_effective_preconditions():
    with pytest.raises(ValueError):
        dk_effective(LAT.zero())
    with pytest.raises(ValueError):
        dk_effective(H - E1)  # p_a = 0
    with pytest.raises(ValueError):
        dk_effective(E1)  # not nef


def test_dk_effective_on_minus_k():
    # D = -K has p_a = 1 > 0 and D + K = 0: the empty decomposition
    assert dict(dk_effective(MINUS_K)) == {}


def test_enumerate_nef_deterministic():
    a = [c.coeffs for c in enumerate_nef(6)]
    b = [c.coeffs for c in enumerate_nef(6)]
    assert a == b
    assert all(is_nef_class(YClass(c)) for c in a)
