import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringauto.howell import contains, howell_form, kernel


def span(rows, n, ncols):
    """Every Z_n-combination of ``rows``, by brute force."""
    out = {tuple([0] * ncols)}
    for r in rows:
        out = {tuple((v + k * x) % n for v, x in zip(vec, r)) for vec in out for k in range(n)}
    return out


matrices = st.integers(2, 12).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.lists(st.integers(0, n - 1), min_size=3, max_size=3), max_size=4),
    )
)


@settings(max_examples=300, deadline=None)
@given(matrices)
def test_howell_spans_the_same_module(data):
    n, rows = data
    hf = howell_form(rows, n, 3)
    full = span(rows, n, 3)
    assert span(hf, n, 3) == full
    for vec in itertools.product(range(n), repeat=3):
        assert contains(hf, list(vec), n) == (vec in full)


@settings(max_examples=200, deadline=None)
@given(matrices, st.randoms(use_true_random=False))
def test_howell_is_canonical(data, rng):
    n, rows = data
    shuffled = [list(r) for r in rows]
    rng.shuffle(shuffled)
    # adding a combination of existing rows does not change the module
    if rows:
        shuffled.append([(a + 2 * b) % n for a, b in zip(rows[0], rows[-1])])
    assert howell_form(shuffled, n, 3) == howell_form(rows, n, 3)


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_howell_property(data):
    """Rows with pivot at or after j span exactly the vectors vanishing before j."""
    n, rows = data
    hf = howell_form(rows, n, 3)
    full = span(rows, n, 3)
    for j in range(3):
        tail = [r for r in hf if next(i for i, v in enumerate(r) if v) >= j]
        assert span(tail, n, 3) == {v for v in full if not any(v[:j])}


@pytest.mark.parametrize("n", [4, 6, 8, 9, 12])
def test_kernel_exhaustive(n):
    rng = random.Random(n)
    for _ in range(40):
        images = [[rng.randrange(n) for _ in range(2)] for _ in range(3)]
        ker = kernel(images, n)
        brute = {
            c
            for c in itertools.product(range(n), repeat=3)
            if all(sum(ci * img[k] for ci, img in zip(c, images)) % n == 0 for k in range(2))
        }
        assert span(ker, n, 3) == brute
