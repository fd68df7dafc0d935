import itertools
import random

import pytest

from ringauto.endos import (
    Endo,
    apply,
    automorphism_pool,
    classify,
    compose_endo,
    from_relaxed,
    invert,
    is_automorphism_bruteforce,
    nonnormality_witness,
    order,
    power,
    witness_parameters,
)
from ringauto.errors import NotInvertible, OrderExceedsCap, RingIsReduced, SearchSpaceTooLarge
from ringauto.polyring import Poly


def E(coeffs, n):
    return Endo(Poly(tuple(coeffs), n))


def test_classify_examples():
    form = classify(E([0, 1, 2], 4))
    assert (form.a.value, form.u.value, form.f) == (0, 1, Poly((2,), 4))
    assert form.image() == Poly((0, 1, 2), 4)
    assert classify(E([0, 0, 1], 4)) is None
    assert classify(E([0, 1, 2], 6)) is None


def test_relaxed_form_round_trips():
    # unit + nilpotent in degree one is still a unit, so the strict view exists
    s = from_relaxed(1, 1, Poly((2, 2, 2), 4))
    assert s.image == Poly((3, 3, 2), 4)
    form = classify(s)
    assert form is not None and form.image() == s.image
    with pytest.raises(NotInvertible):
        from_relaxed(0, 2, Poly((0,), 4))
    with pytest.raises(NotInvertible):
        from_relaxed(0, 1, Poly((0, 0, 1), 4))


def test_apply_examples():
    y = Poly((0, 1, 3), 4)
    assert apply(E([1, 3], 4), y) == y
    g = Poly((1, 2, 3), 7)
    assert apply(Endo.identity(7), g) == g
    assert apply(E([2, 1], 4), Poly((0, 0, 1), 4)) == Poly((0, 0, 1), 4)


def test_compose_convention():
    s = E([0, 1, 2], 4)
    assert compose_endo(s, s).is_identity()
    assert compose_endo(s, Endo.identity(4)) == s
    # (s ∘ t)(g) = s(t(g))
    t = E([1, 3, 2], 4)
    g = Poly((1, 1, 1), 4)
    assert apply(compose_endo(s, t), g) == apply(s, apply(t, g))


def test_worked_conjugation_examples():
    n = 9
    alpha, sigma = E([1, 1], n), E([0, 1, 3], n)
    assert invert(sigma) == E([0, 1, 6], n)
    conj = compose_endo(compose_endo(invert(sigma), alpha), sigma)
    assert conj.image == Poly((4, 7), n)
    alpha, sigma = E([0, 1, 3], n), E([1, 1], n)
    conj = compose_endo(compose_endo(invert(sigma), alpha), sigma)
    assert conj.image == Poly((3, 4, 3), n)


def test_changing_the_variable_breaks_basicness():
    n = 9
    sigma = E([0, 2], n)
    y = Poly((0, 1, 3), n)
    assert apply(sigma, y) == y.scale(2) + (y * y).scale(6)


def test_invert_examples():
    s = E([0, 1, 2], 4)
    assert invert(s) == s
    assert invert(Endo.identity(5)).is_identity()
    with pytest.raises(NotInvertible):
        invert(E([0, 2], 4))


@pytest.mark.parametrize("n", [4, 8, 9, 27])
def test_invert_two_sided(n):
    rng = random.Random(n)
    nil = [c for c in range(n) if pow(c, n.bit_length(), n) == 0]
    units = [u for u in range(n) if pow(u, 1, n) and __import__("math").gcd(u, n) == 1]
    for _ in range(150):
        coeffs = (rng.randrange(n), rng.choice(units)) + tuple(rng.choice(nil) for _ in range(4))
        s = E(coeffs, n)
        t = invert(s)
        assert compose_endo(s, t).is_identity() and compose_endo(t, s).is_identity()


def test_order_examples():
    assert order(E([1, 1], 4)) == 4
    assert order(E([3, 3], 4)) == 2
    assert order(Endo.identity(4)) == 1
    with pytest.raises(OrderExceedsCap):
        order(E([1, 1], 4), cap=3)
    with pytest.raises(NotInvertible):
        order(E([0, 0, 1], 4))


@pytest.mark.parametrize("n", [4, 8, 9])
def test_order_is_minimal(n):
    for s in automorphism_pool(n, 2)[:: max(1, n // 2)]:
        k = order(s)
        assert power(s, k).is_identity()
        assert not any(power(s, m).is_identity() for m in range(1, k))


def test_bruteforce_examples():
    assert is_automorphism_bruteforce(E([0, 1, 2], 4), 3)
    assert not is_automorphism_bruteforce(E([0, 0, 1], 4), 3)
    assert not is_automorphism_bruteforce(E([0, 2], 4), 3)
    with pytest.raises(SearchSpaceTooLarge):
        is_automorphism_bruteforce(E([0, 1], 97), 4)


@pytest.mark.parametrize("n", [4, 6, 9])
def test_gilmer_criterion_cap4(n):
    for coeffs in itertools.product(range(n), repeat=4):
        s = E(coeffs, n)
        assert (classify(s) is not None) == is_automorphism_bruteforce(s, 4), coeffs


def test_gilmer_criterion_z8_needs_degree_five():
    # x + 2x^3 is an automorphism of Z_8[x] whose inverse has degree 5
    s = E([0, 1, 0, 2], 8)
    t = invert(s)
    assert t.image == Poly((0, 1, 0, 6, 0, 4), 8)
    assert not is_automorphism_bruteforce(s, 4)
    assert is_automorphism_bruteforce(s, 5)
    # t inverts s iff t(x + c) inverts s - c, so one search per non-constant part
    for tail in itertools.product(range(8), repeat=3):
        found = is_automorphism_bruteforce(E((0,) + tail, 8), 5)
        for c in range(8):
            assert (classify(E((c,) + tail, 8)) is not None) == found, (c, tail)


@pytest.mark.parametrize("n, r, m", [(4, 2, 3), (8, 4, 3), (9, 3, 5), (27, 9, 5)])
def test_nonnormality_witness(n, r, m):
    alpha, sigma, conj = nonnormality_witness(n)
    assert witness_parameters(n) == (r, m)
    assert alpha.image == Poly((1, 1), n)
    assert any(conj.image.coeffs[2:])
    assert compose_endo(compose_endo(sigma, conj), invert(sigma)) == alpha


def test_nonnormality_needs_nilpotents():
    for n in (6, 10, 30):
        with pytest.raises(RingIsReduced):
            nonnormality_witness(n)


def test_basic_conjugacy_within_the_pool_z4():
    """Pool-conjugate basic elements with equal u are conjugate by a basic element."""
    n = 4
    pool = automorphism_pool(n, 3)
    inverses = {s: invert(s) for s in pool}
    basic = [s for s in pool if s.image.degree <= 1]
    for a, b in itertools.product(basic, repeat=2):
        if a.image.coeff(1) != b.image.coeff(1):
            continue
        conj = lambda g: compose_endo(compose_endo(inverses[g], a), g)
        pool_conj = any(conj(g) == b for g in pool)
        basic_conj = any(conj(g) == b for g in basic)
        assert pool_conj == basic_conj
