"""Field arithmetic, moduli, primitive elements, subgroups, tables."""

import random

import pytest

from cartcodes import (
    FieldMismatchError,
    NotADivisorError,
    NotPrimeError,
    TooLargeError,
    make_field,
)
from cartcodes.field import _smallest_irreducible


def _f3_quadratic_oracle():
    # smallest monic irreducible quadratic over F_3 by exhaustive root check,
    # scanned in encoding order c0 + 3*c1 + 9
    for m in range(9, 18):
        c0, c1 = m % 3, (m // 3) % 3
        if all((x * x + c1 * x + c0) % 3 != 0 for x in range(3)):
            return (c0, c1, 1)
    raise AssertionError


def test_make_field_examples():
    assert make_field(2, 1).q == 2
    assert make_field(181).q == 181
    F9 = make_field(3, 2)
    assert F9.q == 9
    assert F9.modulus == _f3_quadratic_oracle()


def test_make_field_errors(monkeypatch):
    with pytest.raises(NotPrimeError):
        make_field(4)
    with pytest.raises(NotPrimeError):
        make_field(1)
    with pytest.raises(ValueError):
        make_field(2, 0)
    with pytest.raises(TooLargeError):
        make_field(2, 21)
    monkeypatch.setenv("CARTESIAN_MAX_FIELD", "16")
    with pytest.raises(TooLargeError):
        make_field(17)
    assert make_field(13).q == 13


def test_make_field_deterministic():
    assert _smallest_irreducible(3, 2) == _smallest_irreducible(3, 2)
    assert make_field(2, 4).modulus == make_field(2, 4).modulus
    assert _smallest_irreducible(2, 4) == make_field(2, 4).modulus


def test_ops_examples():
    F5 = make_field(5)
    assert F5.inv(2) == 3
    F2 = make_field(2)
    assert F2.add(1, 1) == 0
    F9 = make_field(3, 2)
    for x in range(1, 9):
        assert F9.pow(x, 8) == 1  # Lagrange on the unit group


def test_ops_errors():
    F5 = make_field(5)
    with pytest.raises(ZeroDivisionError):
        F5.inv(0)
    with pytest.raises(FieldMismatchError):
        F5.add(7, 1)
    with pytest.raises(FieldMismatchError):
        F5.mul(1, -1)


@pytest.mark.parametrize("p,e", [(2, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (5, 2)])
def test_field_axioms_random(p, e):
    F = make_field(p, e)
    rng = random.Random(1000 * p + e)
    for _ in range(150):
        a, b, c = (rng.randrange(F.q) for _ in range(3))
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(a, F.neg(a)) == 0
        assert F.sub(a, b) == F.add(a, F.neg(b))
        if a:
            assert F.mul(a, F.inv(a)) == 1
            assert F.div(F.mul(a, b), a) == b


def test_elements_enumeration():
    F9 = make_field(3, 2)
    codes = list(F9.elements())
    assert len(codes) == 9 and len(set(codes)) == 9
    assert codes[0] == 0 and codes[1] == 1


def _order_by_powering(F, a):
    x, k = a, 1
    while x != 1:
        x = F.mul(x, a)
        k += 1
    return k


def test_primitive_element_examples():
    F5 = make_field(5)
    # oracle: direct powering of every unit
    orders = {a: _order_by_powering(F5, a) for a in range(1, 5)}
    assert orders == {1: 1, 2: 4, 3: 4, 4: 2}
    assert F5.primitive_element() == 2
    assert make_field(2).primitive_element() == 1
    F9 = make_field(3, 2)
    smallest = min(a for a in range(1, 9) if _order_by_powering(F9, a) == 8)
    assert F9.primitive_element() == smallest == 4


def test_element_order_agrees_with_powering():
    for p, e in [(7, 1), (3, 2), (2, 3)]:
        F = make_field(p, e)
        for a in range(1, F.q):
            assert F.element_order(a) == _order_by_powering(F, a)


def test_subgroup_examples():
    F181 = make_field(181)
    assert F181.subgroup_of_order(2).elements == (1, 180)
    ninth = F181.subgroup_of_order(9)
    assert ninth.elements == tuple(sorted(x for x in range(1, 181) if F181.pow(x, 9) == 1))
    assert len(ninth.elements) == 9
    F5 = make_field(5)
    assert F5.subgroup_of_order(4).elements == (1, 2, 3, 4)
    with pytest.raises(NotADivisorError):
        F181.subgroup_of_order(7)


@pytest.mark.parametrize("p,e", [(13, 1), (3, 2), (2, 4)])
def test_subgroup_is_exact_power_filter(p, e):
    F = make_field(p, e)
    units = range(1, F.q)
    for k in range(1, F.q):
        if (F.q - 1) % k:
            continue
        sub = F.subgroup_of_order(k)
        assert sub.elements == tuple(sorted(x for x in units if F.pow(x, k) == 1))
        assert F.element_order(sub.generator) == k


@pytest.mark.parametrize("p,e", [(2, 2), (3, 2), (7, 1)])
def test_tables_match_scalar_ops(p, e):
    F = make_field(p, e)
    T = F.tables()
    for a in range(F.q):
        assert T.neg[a] == F.neg(a)
        if a:
            assert T.inv[a] == F.inv(a)
        for b in range(F.q):
            assert T.add[a, b] == F.add(a, b)
            assert T.sub[a, b] == F.sub(a, b)
            assert T.mul[a, b] == F.mul(a, b)


def test_tables_spot_check_f181():
    F = make_field(181)
    T = F.tables()
    rng = random.Random(7)
    for _ in range(300):
        a, b = rng.randrange(181), rng.randrange(181)
        assert T.add[a, b] == (a + b) % 181
        assert T.mul[a, b] == (a * b) % 181


def test_tables_too_large():
    F = make_field(4099)
    with pytest.raises(TooLargeError):
        F.tables()
