from itertools import product

import pytest

from egqldpc.errors import DegreeOutOfRange, ElementOutOfRange, NotPrime, ZeroInverse
from egqldpc.field import field_of_order, make_field, prime_power

SWEEP = [2, 3, 4, 5, 7, 8, 9]


def has_root(monic, p):
    return any(sum(c * x**i for i, c in enumerate(monic)) % p == 0 for x in range(p))


def test_prime_field_is_residue_arithmetic():
    f = make_field(2, 1)
    assert f.q == 2
    assert f.add(1, 1) == 0
    assert f.mul(1, 1) == 1


def test_gf4_modulus_is_x2_x_1():
    # the four monic quadratics over GF(2); only x^2+x+1 has no root
    quadratics = [(c0, c1, 1) for c1 in range(2) for c0 in range(2)]
    irreducible = [poly for poly in quadratics if not has_root(poly, 2)]
    assert irreducible == [(1, 1, 1)]
    assert make_field(2, 2).modulus == (1, 1, 1)


def test_gf9_modulus_is_x2_plus_1():
    assert not has_root((1, 0, 1), 3)
    assert has_root((0, 0, 1), 3)  # encoding 0, x^2, is rejected first
    assert make_field(3, 2).modulus == (1, 0, 1)


@pytest.mark.parametrize("p,s", [(2, 3), (3, 3), (5, 2), (2, 4), (2, 6)])
def test_modulus_is_smallest_irreducible(p, s):
    f = make_field(p, s)
    code = sum(c * p**i for i, c in enumerate(f.modulus[:-1]))
    assert f.modulus[-1] == 1
    if s <= 3:
        assert not has_root(f.modulus, p)
        for smaller in range(code):
            monic = [(smaller // p**i) % p for i in range(s)] + [1]
            assert has_root(monic, p)
    # the multiplicative group is cyclic of order q-1 only if the modulus is irreducible
    q = f.q
    for a in range(1, q):
        assert f.mul(a, f.inv(a)) == 1


@pytest.mark.parametrize(
    "q,a,b,total",
    [(2, 1, 1, 0), (4, 2, 3, 1), (9, 5, 7, 0)],
)
def test_add_examples(q, a, b, total):
    assert field_of_order(q).add(a, b) == total


@pytest.mark.parametrize("q,a,b,prod", [(4, 2, 2, 3), (9, 3, 3, 2)])
def test_mul_examples(q, a, b, prod):
    assert field_of_order(q).mul(a, b) == prod


def test_inverse_examples():
    assert field_of_order(3).inv(2) == 2
    gf4 = field_of_order(4)
    # exhaustive search over the nonzero elements
    assert [b for b in range(1, 4) if gf4.mul(2, b) == 1] == [3]
    assert gf4.inv(2) == 3
    for q in SWEEP:
        assert field_of_order(q).inv(1) == 1


def test_errors():
    with pytest.raises(NotPrime):
        make_field(4, 1)
    with pytest.raises(DegreeOutOfRange):
        make_field(3, 0)
    with pytest.raises(ZeroInverse):
        make_field(5).inv(0)
    with pytest.raises(ElementOutOfRange):
        make_field(2, 2).add(4, 0)
    with pytest.raises(NotPrime):
        prime_power(12)
    assert prime_power(27) == (3, 3)


@pytest.mark.parametrize("q", SWEEP)
def test_multiplicative_orders_divide_group_order(q):
    f = field_of_order(q)
    for a in range(1, q):
        x, order = a, 1
        while x != 1:
            x = f.mul(x, a)
            order += 1
        assert (q - 1) % order == 0


@pytest.mark.parametrize("q", SWEEP)
def test_char_two_doubling_vanishes(q):
    f = field_of_order(q)
    if f.p == 2:
        assert all(f.add(a, a) == 0 for a in range(q))


def test_deterministic():
    assert make_field(2, 3) == make_field(2, 3)
    assert make_field(3, 2).modulus == make_field(3, 2).modulus


def test_tables_match_operations():
    f = field_of_order(8)
    for a, b in product(range(8), repeat=2):
        assert f.add_table[a, b] == f.add(a, b)
        assert f.mul_table[a, b] == f.mul(a, b)
