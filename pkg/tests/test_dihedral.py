import itertools

import pytest

from cycle_endo import (
    ContextError,
    DihedralElement,
    DomainError,
    Transformation,
    dihedral_inverse,
    dihedral_product,
    enumerate_dihedral,
    recognize,
)


def test_generators_as_maps():
    assert DihedralElement.g(5).transformation().images == (2, 3, 4, 5, 1)
    assert DihedralElement.h(5).transformation().images == (5, 4, 3, 2, 1)
    assert DihedralElement.identity(5).transformation().images == (1, 2, 3, 4, 5)


def test_piecewise_formulas():
    """Rotations and reflections match their closed per-vertex formulas."""
    n = 7
    for k in range(n):
        r = DihedralElement.rotation(n, k)
        s = DihedralElement.reflection(n, k)
        for i in range(1, n + 1):
            expected_r = i + k if i <= n - k else i + k - n
            expected_s = k - i + 1 if i <= k else n + k - i + 1
            assert r.apply(i) == expected_r
            assert s.apply(i) == expected_s


def test_product_rules():
    n = 7
    hg2 = DihedralElement.reflection(n, 2)
    hg5 = DihedralElement.reflection(n, 5)
    assert hg2 * hg5 == DihedralElement.rotation(n, 3)
    g = DihedralElement.g(n)
    h = DihedralElement.h(n)
    assert g * h == DihedralElement.reflection(n, n - 1)   # gh = hg^(n-1)
    assert h * g == DihedralElement.reflection(n, 1)


def test_group_relations():
    for n in (3, 6, 9):
        g = DihedralElement.g(n)
        h = DihedralElement.h(n)
        e = DihedralElement.identity(n)
        assert g ** n == e
        assert h * h == e
        assert (g * h) * (g * h) == e


def test_product_is_composition():
    """x*y acts like apply-x-then-y, checked on every pair for n = 5 and 6."""
    for n in (5, 6):
        elems = enumerate_dihedral(n)
        for x, y in itertools.product(elems, repeat=2):
            assert (x * y).transformation() == x.transformation() * y.transformation()


def test_inverse():
    for n in (4, 7):
        e = DihedralElement.identity(n)
        for x in enumerate_dihedral(n):
            assert x * x.inverse() == e
            assert x.inverse() * x == e
    assert dihedral_inverse(DihedralElement.rotation(5, 2)) == DihedralElement.rotation(5, 3)


def test_pow():
    g = DihedralElement.g(12)
    assert g ** 8 == DihedralElement.rotation(12, 8)
    assert g ** -1 == DihedralElement.rotation(12, 11)
    assert g ** 0 == DihedralElement.identity(12)
    h = DihedralElement.h(12)
    assert h ** 2 == DihedralElement.identity(12)
    assert h ** 3 == h


def test_shift_normalization():
    assert DihedralElement.rotation(5, 7) == DihedralElement.rotation(5, 2)
    assert DihedralElement.reflection(5, -1) == DihedralElement.reflection(5, 4)


def test_str_and_parse_roundtrip():
    n = 8
    for x in enumerate_dihedral(n):
        assert DihedralElement.parse(str(x), n) == x
    assert str(DihedralElement.identity(n)) == "g^0"
    assert str(DihedralElement.reflection(n, 0)) == "h*g^0"
    assert DihedralElement.parse("h", n) == DihedralElement.reflection(n, 0)
    assert DihedralElement.parse("g", n) == DihedralElement.rotation(n, 1)
    assert DihedralElement.parse("1", n) == DihedralElement.identity(n)
    with pytest.raises(DomainError):
        DihedralElement.parse("k^2", n)


def test_recognize_units():
    for n in (4, 5, 8):
        for x in enumerate_dihedral(n):
            assert recognize(x.transformation()) == x


def test_recognize_rejects_non_units():
    assert recognize(Transformation.constant(5, 2)) is None
    assert recognize(Transformation((1, 2, 1, 2, 1))) is None
    # agrees with a rotation on the first two points but not afterwards
    assert recognize(Transformation((2, 3, 4, 1, 5))) is None
    assert recognize(Transformation((5, 4, 3, 2, 1, 2))) is None


def test_recognize_reflection_form():
    n = 6
    t = Transformation(tuple(range(n, 0, -1)))
    assert recognize(t) == DihedralElement.h(n)


def test_enumerate_dihedral_order():
    elems = enumerate_dihedral(4)
    assert len(elems) == 8
    assert len(set(elems)) == 8
    assert elems[0] == DihedralElement.identity(4)
    assert all(not x.reflected for x in elems[:4])
    assert all(x.reflected for x in elems[4:])


def test_dihedral_product_function():
    a = DihedralElement.rotation(6, 2)
    b = DihedralElement.reflection(6, 1)
    assert dihedral_product(a, b) == a * b
    with pytest.raises(ContextError):
        dihedral_product(a, DihedralElement.rotation(5, 1))
