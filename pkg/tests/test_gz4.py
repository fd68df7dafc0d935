import itertools

import pytest

from ringauto import gz4
from ringauto.endos import apply, compose_endo, invert
from ringauto.errors import BadInput, NotZ4
from ringauto.polyring import Poly

A, B = gz4.GAut4.alpha, gz4.GAut4.beta


def P(*c):
    return Poly(c, 4)


def test_prime():
    assert gz4.prime(P(0, 2)) == P(2, 2)
    assert gz4.prime(P(2)) == P(2)
    assert gz4.prime(gz4.Y.scale(2)) == gz4.Y.scale(2)
    for f in gz4._nil_polys(3):
        assert gz4.prime(gz4.prime(f)) == f
    with pytest.raises(NotZ4):
        gz4.prime(Poly((1,), 9))


def test_validation():
    with pytest.raises(BadInput):
        A((1,))
    with pytest.raises(BadInput):
        gz4.GAut4("gamma", P())


def test_mul_examples():
    assert A((2,)) * A((0, 2)) == A((2, 2))
    assert B() * B() == gz4.IDENTITY
    assert B((0, 2)) * B((0, 2)) == A((2,))


@pytest.mark.parametrize("d", [2])
def test_law_matches_composition(d):
    pool = gz4.pool(d)
    assert len(pool) == 2 ** (d + 2)
    for s, t in itertools.product(pool, repeat=2):
        assert (s * t).to_endo() == compose_endo(s.to_endo(), t.to_endo())
        assert gz4.conjugate_g4(t, s) == gz4.conjugate_generic(t, s)


def test_law_on_the_degree_five_pool():
    pool = gz4.pool(5)
    assert len(pool) == 128
    for s, t in itertools.product(pool, repeat=2):
        assert (s * t).to_endo() == compose_endo(s.to_endo(), t.to_endo())


def test_inverse_and_endo_round_trip():
    for s in gz4.pool(3):
        assert gz4.GAut4.from_endo(s.to_endo()) == s
        assert gz4.inverse_g4(s).to_endo() == invert(s.to_endo())


def test_conjugation_examples():
    h, g = P(0, 2), P(0, 2, 2)
    assert gz4.conjugate_g4(A(h.coeffs), B(g.coeffs)) == A(gz4.prime(h).coeffs)
    t = B((2, 2))
    assert gz4.conjugate_g4(t, gz4.IDENTITY) == t
    assert gz4.conjugate_g4(B(), A((0, 2))) == B((2,))
    # the three B_x-conjugate pairs listed for Z_4
    assert gz4.conjugate_g4(A((0, 2)), B((0, 2))) == A((2, 2))
    assert gz4.conjugate_g4(B((0, 2)), A((0, 2))) == B((2, 2))


def test_center():
    assert gz4.is_central(A((2,)))
    assert not gz4.is_central(A((0, 2)))
    assert gz4.is_central(A((0, 2, 2)))
    for d in (1, 2, 3):
        pool = gz4.pool(d)
        center = {s for s in pool if all(s * t == t * s for t in pool)}
        assert center == {s for s in pool if gz4.is_central(s)}


def test_conjugacy_examples():
    assert gz4.are_conjugate_g4(A((0, 2)), A((2, 2)))
    assert gz4.are_conjugate_g4(B(), B((0, 2, 2)))
    assert not gz4.are_conjugate_g4(B(), B((0, 2)))
    assert not gz4.are_conjugate_g4(A(), B())
    # the witness for the second example needs a degree-3 conjugator
    w = A((0, 0, 2, 2))
    assert gz4.conjugate_g4(B(), w) == B((0, 2, 2))


def test_conjugacy_vs_orbits():
    elems = gz4.pool(2)
    conjugators = gz4.pool(3)
    for s in elems:
        orbit = {gz4.conjugate_g4(s, g) for g in conjugators}
        for t in elems:
            assert gz4.are_conjugate_g4(s, t) == (t in orbit)


def test_classes_partition_the_pool():
    classes = gz4.conjugacy_classes(2)
    assert sum(len(c) for c in classes) == 16
    sizes = sorted(len(c) for c in classes)
    # A_0 singletons, pairs {a_f, a_f'}, then beta classes
    assert sizes.count(1) == sum(1 for f in gz4._nil_polys(2) if gz4.in_ry(f))


def test_closure_examples():
    theta = gz4.closure([B((0, 2))])
    assert set(theta) == {A(), B((0, 2)), A((2,)), B((2, 2))}
    assert list(gz4.closure([])) == [gz4.IDENTITY]
    h = gz4.closure([A((2,)), B()])
    assert len(h) == 4 and h.betas and len(h.alphas) == 2
    with pytest.raises(BadInput):
        gz4.GSubgroup((A(), B((0, 2))))


def test_stabilizers():
    x, y = gz4.X, gz4.Y
    alphas = {s for s in gz4.pool(3) if s.is_alpha}
    assert set(gz4.stabilizer([x * x, x.scale(2)], 3)) == alphas
    assert set(gz4.stabilizer([x], 3)) == {gz4.IDENTITY}
    assert set(gz4.stabilizer([y * y, y.scale(2)], 3)) == set(gz4.pool(3))
    f = y.scale(2)
    assert set(gz4.stabilizer([y + x * f], 3)) == {gz4.IDENTITY, gz4.GAut4(gz4.BETA, f)}


def test_orders():
    for s in gz4.pool(3):
        k = gz4.order_g4(s)
        p = s
        for _ in range(k - 1):
            p = p * s
        assert p == gz4.IDENTITY
        if s.is_alpha:
            assert k == (1 if s.f.is_zero() else 2)
        else:
            assert k in (2, 4) and (k == 2) == gz4.in_ry(s.f)


def test_basic_union():
    assert gz4.in_basic_union(B((0, 2, 2)))
    assert not gz4.in_basic_union(A((0, 0, 2)))
    assert gz4.in_basic_union(A((2,)))
    shift = P(0, 2)
    for s in gz4.pool(3):
        expected = (
            s in gz4.BASIC_ELEMENTS
            if s.is_alpha
            else gz4.in_ry(s.f) or gz4.in_ry(s.f - shift)
        )
        assert gz4.in_basic_union(s) == expected


def test_basic_classes_condition():
    basic = gz4.BASIC_ELEMENTS
    for sigma in basic:
        by_basic = {gz4.conjugate_g4(sigma, g) for g in basic}
        by_pool = {gz4.conjugate_g4(sigma, g) for g in gz4.pool(3)}
        assert by_basic == by_pool & set(basic)


def test_conjugating_a_basic_group_by_a_change_of_variable():
    """With z = sigma(x), sigma^-1 B_z sigma = B_x.

    B_z = sigma B_x sigma^-1 consists of the maps sending z to a + u z; each
    of them is checked to have that shape, and conjugating back lands in B_x.
    """
    basic = {s.to_endo() for s in gz4.BASIC_ELEMENTS}
    for sigma in gz4.pool(2):
        s_end = sigma.to_endo()
        s_inv = invert(s_end)
        z = s_end.image
        b_z = {compose_endo(compose_endo(s_end, b), s_inv) for b in basic}
        assert len(b_z) == 8
        for t in b_z:
            moved = apply(t, z)
            u = moved.coeff(1) * pow(z.coeff(1), -1, 4) % 4
            assert moved - z.scale(u) == Poly((moved.coeff(0) - u * z.coeff(0),), 4)
        assert {compose_endo(compose_endo(s_inv, t), s_end) for t in b_z} == basic


def test_json_round_trip():
    for s in gz4.pool(2):
        assert gz4.GAut4.from_json(s.to_json()) == s
    assert gz4.parse_element("beta:[0,2]") == B((0, 2))
    for bad in ("alpha", "gamma:[2]", "beta:[x]", "beta:2"):
        with pytest.raises(ValueError):
            gz4.parse_element(bad)
