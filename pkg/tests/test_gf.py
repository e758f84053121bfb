"""Finite fields GF(p^e): construction determinism, axioms, squares, cosets."""

import random

import pytest

from huckel.gf import (
    FiniteField,
    is_prime_power,
    is_square,
    make_field,
    primitive_element,
    subfield_coset_partition,
)

SEEDS = [0xF1E1D, 0xF2E2D, 0xF3E3D]
FIELDS = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1), (3, 4), (13, 1)]


def test_is_prime_power():
    assert is_prime_power(2) == (2, 1)
    assert is_prime_power(9) == (3, 2)
    assert is_prime_power(32) == (2, 5)
    assert is_prime_power(13) == (13, 1)
    assert is_prime_power(1024) == (2, 10)
    for q in (0, 1, 6, 12, 15, 100):
        assert is_prime_power(q) is None


def test_construction_errors():
    with pytest.raises(ValueError):
        make_field(4, 1)  # p not prime
    with pytest.raises(ValueError):
        make_field(2, 0)
    with pytest.raises(ValueError):
        make_field(101, 2)  # order over the dense-table limit


def test_deterministic_moduli():
    # First monic irreducible in coefficient-lexicographic order.
    assert make_field(2, 2).modulus == (1, 1, 1)  # x^2 + x + 1
    assert make_field(2, 3).modulus == (1, 1, 0, 1)  # x^3 + x + 1
    assert make_field(3, 2).modulus == (1, 0, 1)  # x^2 + 1
    assert make_field(5, 1).modulus == (0, 1)  # x itself for prime fields


def test_deterministic_primitive_elements():
    assert make_field(5, 1).primitive_element() == 2
    f9 = make_field(3, 2)
    assert primitive_element(f9) == 4
    assert f9.coeffs(4) == (1, 1)  # x + 1 generates GF(9)*


def test_element_coeff_roundtrip():
    f = make_field(3, 2)
    for x in range(f.order):
        assert f.element(f.coeffs(x)) == x
    assert f.element((4, 1)) == f.element((1, 1))  # coefficients reduced mod p
    with pytest.raises(ValueError):
        f.element((1,))
    with pytest.raises(ValueError):
        f.coeffs(9)


@pytest.mark.parametrize("p,e", FIELDS)
def test_exp_log_tables(p, e):
    f = make_field(p, e)
    q = f.order
    assert len(f.exp) == q - 1
    assert sorted(f.exp) == list(range(1, q))  # a bijection onto nonzero elements
    for x in range(1, q):
        assert f.exp[f.log[x]] == x


@pytest.mark.parametrize("seed", SEEDS)
def test_field_axioms(seed):
    rng = random.Random(seed)
    for p, e in FIELDS:
        f = make_field(p, e)
        q = f.order
        for _ in range(25):
            a, b, c = (rng.randrange(q) for _ in range(3))
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
            assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
            assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
            assert f.add(a, f.neg(a)) == 0
            assert f.sub(a, b) == f.add(a, f.neg(b))
            assert f.mul(a, 1) == a and f.add(a, 0) == a
            if a:
                assert f.mul(a, f.inv(a)) == 1
                assert f.pow(a, q - 1) == 1
                assert f.pow(a, -1) == f.inv(a)
        assert f.pow(0, 0) == 1 and f.pow(0, 5) == 0
        with pytest.raises(ZeroDivisionError):
            f.inv(0)
        with pytest.raises(ZeroDivisionError):
            f.pow(0, -2)
        with pytest.raises(ValueError):
            f.add(q, 0)


@pytest.mark.parametrize("p,e", [(3, 2), (3, 4), (7, 1), (13, 1)])
def test_is_square_matches_brute_force(p, e):
    f = make_field(p, e)
    squares = {f.mul(x, x) for x in range(f.order)}
    for x in range(f.order):
        assert is_square(f, x) == (x in squares)
    # Exactly (q-1)/2 nonzero squares in odd characteristic.
    assert len(squares) - 1 == (f.order - 1) // 2


def test_is_square_char2():
    f = make_field(2, 3)
    for x in range(8):
        assert f.is_square(x)  # squaring is a bijection in characteristic 2


def test_subfield_coset_partition():
    f9 = make_field(3, 2)
    cosets = subfield_coset_partition(f9, 3)
    assert len(cosets) == 3
    # The subfield copy of GF(3) comes first and is closed under addition.
    assert cosets[0][0] == 0
    sub = set(cosets[0])
    assert all(f9.add(a, b) in sub for a in sub for b in sub)
    # The cosets partition the field and are translates of the subfield.
    flat = sorted(x for c in cosets for x in c)
    assert flat == list(range(9))
    for coset in cosets:
        rep = coset[0]
        assert set(coset) == {f9.add(rep, x) for x in sub}


def test_subfield_coset_partition_larger():
    f25 = make_field(5, 2)
    cosets = subfield_coset_partition(f25, 5)
    assert len(cosets) == 5
    assert sorted(x for c in cosets for x in c) == list(range(25))
    sub = set(cosets[0])
    # The subfield is exactly the fixed points of the Frobenius map x -> x^5.
    assert sub == {x for x in range(25) if f25.pow(x, 5) == x}


def test_subfield_coset_partition_validation():
    with pytest.raises(ValueError):
        subfield_coset_partition(make_field(3, 2), 4)
