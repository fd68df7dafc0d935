import itertools
import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ringauto.errors import BadDivisor, ModulusMismatch, ZeroInput
from ringauto.polyring import (
    MINUS_INFINITY,
    Poly,
    compose,
    f_adic_expand,
    generates_polynomial_ring,
    in_subring,
    is_nilpotent_poly,
    is_unit_poly,
    parse_poly,
    reassemble,
)


def polys(n, max_len=4):
    return st.lists(st.integers(0, n - 1), max_size=max_len).map(lambda c: Poly(tuple(c), n))


def test_normalization_and_degree(P):
    assert P([1, 2, 0, 0], 4).coeffs == (1, 2)
    assert P([4, 8], 4).is_zero()
    assert P([], 4).degree is MINUS_INFINITY
    assert P([3], 5).degree == 0


def test_arithmetic_examples(P):
    assert P([0, 2], 4) * P([0, 2], 4) == P([], 4)
    p = P([1, 2, 3], 7)
    assert p + P([], 7) == p
    assert P([0, 1, 2], 4) * P([0, 1, 2], 4) == P([0, 0, 1], 4)
    with pytest.raises(ModulusMismatch):
        P([1], 4) + P([1], 6)


def test_display(P):
    assert str(P([1, 2, 3], 5)) == "3x^2+2x+1"
    assert str(P([], 5)) == "0"


def test_compose_examples(P):
    x2 = P([0, 0, 1], 4)
    assert compose(x2, P([1, 3], 4)) == P([1, 2, 1], 4)
    g = P([2, 0, 3], 4)
    assert compose(g, Poly.x(4)) == g
    y = P([0, 1, 3], 4)
    assert compose(y, P([1, 3], 4)) == y


@pytest.mark.parametrize("n", [4, 6, 9])
def test_compose_associative(n):
    rng = random.Random(n)
    for _ in range(200):
        g, s, t = (Poly(tuple(rng.randrange(n) for _ in range(4)), n) for _ in range(3))
        assert compose(compose(g, s), t) == compose(g, compose(s, t))


def test_nilpotent_and_unit(P):
    assert is_nilpotent_poly(P([2, 2], 4))
    assert is_nilpotent_poly(P([], 4))
    f = P([1, 2], 4)
    assert is_unit_poly(f) and not is_nilpotent_poly(f)
    assert f * P([1, 2], 4) == P([1], 4)


@pytest.mark.parametrize("n", [4, 8, 9, 12])
def test_nilradical_is_an_ideal(n):
    rng = random.Random(n)
    nil = [c for c in range(n) if is_nilpotent_poly(Poly((c,), n))]
    for _ in range(200):
        f = Poly(tuple(rng.choice(nil) for _ in range(4)), n)
        g = Poly(tuple(rng.choice(nil) for _ in range(4)), n)
        h = Poly(tuple(rng.randrange(n) for _ in range(4)), n)
        assert is_nilpotent_poly(f + g) and is_nilpotent_poly(f * h)


def test_f_adic_examples(P):
    x = Poly.x(4)
    M = x * (x + 1) * (x + 2) * (x + 3)
    w = x * (x + 1)
    assert f_adic_expand(M, w) == [P([], 4), P([2], 4), P([1], 4)]
    g = P([1, 3], 4)
    assert f_adic_expand(g, P([0, 0, 1], 4)) == [g]
    assert f_adic_expand(P([3, 1, 2, 1], 4), P([0, 0, 1], 4)) == [P([3, 1], 4), P([2, 1], 4)]


def test_f_adic_errors(P):
    with pytest.raises(BadDivisor):
        f_adic_expand(P([1, 1], 4), P([0, 0, 2], 4))
    with pytest.raises(ZeroInput):
        f_adic_expand(P([], 4), P([0, 1], 4))
    with pytest.raises(BadDivisor):
        f_adic_expand(P([1, 1], 4), P([3], 4))


def test_f_adic_roundtrip_exhaustive():
    n = 4
    fs = [Poly(c, n) for c in itertools.product(range(n), repeat=4) if c[-1] in (1, 3) or (c[2] in (1, 3) and c[3] == 0)]
    fs = [f for f in fs if f.degree >= 1 and f.lead in (1, 3)]
    rng = random.Random(0)
    gs = [Poly(tuple(rng.randrange(n) for _ in range(7)), n) for _ in range(60)]
    for f in fs:
        for g in gs:
            if g.is_zero():
                continue
            digits = f_adic_expand(g, f)
            assert reassemble(digits, f) == g
            assert all(d.is_zero() or d.degree < f.degree for d in digits)


def test_f_adic_uniqueness_exhaustive():
    """Distinct digit lists never reassemble to the same g (deg f = 2, deg g <= 4)."""
    n = 4
    for fc in itertools.product(range(n), range(n), (1, 3)):
        f = Poly(fc, n)
        seen = {}
        for flat in itertools.product(range(n), repeat=6):
            digits = [Poly(flat[i : i + 2], n) for i in (0, 2, 4)]
            g = reassemble(digits, f)
            key = tuple(d.coeffs for d in digits)
            assert seen.setdefault(g, key) == key
        # every g of degree <= 5 was reached, so the expansion must find it
        assert len(seen) == n**6
        for g, key in list(seen.items())[::97]:
            if not g.is_zero():
                got = [d.coeffs for d in f_adic_expand(g, f)]
                assert got == list(key[: len(got)]) and not any(key[len(got) :])


def test_in_subring(P):
    x = Poly.x(4)
    y = x * P([1, 3], 4)
    assert in_subring(y * y + y.scale(2), y)
    assert not in_subring(P([0, 2], 4), P([0, 0, 1], 4))
    assert not in_subring(Poly.x(9), P([0, 0, 1], 9))


def test_generates_polynomial_ring(P):
    assert not generates_polynomial_ring(P([0, 2], 4))
    assert generates_polynomial_ring(P([3, 1], 4))
    assert generates_polynomial_ring(P([0, 2, 1], 4))


@pytest.mark.parametrize("n", [4, 9])
def test_generates_polynomial_ring_vs_injectivity(n):
    """R[f] is polynomial iff no nonzero g of degree <= 4 has g(f) = 0.

    g(f) is linear in the coefficients of g, so all g are tested at once
    against the matrix whose rows are f^0, ..., f^4.
    """
    grid = np.array(list(itertools.product(range(n), repeat=5)), dtype=np.int64)
    grid = grid[grid[:, 1:].any(axis=1)]
    for fc in itertools.product(range(n), repeat=3):
        f = Poly(fc, n)
        if f.is_constant():
            continue
        powers = [Poly((1,), n)]
        for _ in range(4):
            powers.append(powers[-1] * f)
        m = np.array([p.padded(9) for p in powers], dtype=np.int64)
        kills = bool(((grid @ m) % n == 0).all(axis=1).any())
        assert generates_polynomial_ring(f) == (not kills), f


def test_parse_poly():
    assert parse_poly("[1,2,3]", 4) == Poly((1, 2, 3), 4)
    assert parse_poly("[]", 4).is_zero()
    for bad in ("[1,x]", "3", "[1.5]", "[true]", "{"):
        with pytest.raises(ValueError):
            parse_poly(bad, 4)


@given(polys(6), polys(6), polys(6))
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p - p == Poly.zero(6)
