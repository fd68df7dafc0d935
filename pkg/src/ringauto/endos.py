"""Z_n-endomorphisms and automorphisms of Z_n[x].

An endomorphism is determined by the image of ``x``.  Composition follows
the usual convention for maps: ``compose_endo(s, t)`` is ``s ∘ t``, the map
``g ↦ s(t(g))``, whose image of ``x`` is ``t.image`` evaluated at
``s.image``.  With this convention a conjugate ``σ⁻¹ α σ`` sends ``x`` to
``σ⁻¹(α(σ(x)))``.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    InternalCheckFailed,
    ModulusMismatch,
    NotInvertible,
    OrderExceedsCap,
    RingIsReduced,
    SearchSpaceTooLarge,
)
from .polyring import Poly, compose, is_nilpotent_poly
from .residues import Residue, check_modulus, inv_mod, nilpotency_index

SEARCH_LIMIT = 10**7


@dataclass(frozen=True)
class Endo:
    image: Poly

    @property
    def n(self) -> int:
        return self.image.n

    @classmethod
    def identity(cls, n: int) -> Endo:
        return cls(Poly.x(n))

    @classmethod
    def from_coeffs(cls, coeffs, n: int) -> Endo:
        return cls(Poly(tuple(coeffs), n))

    def __call__(self, g: Poly) -> Poly:
        return apply(self, g)

    def __matmul__(self, other: Endo) -> Endo:
        return compose_endo(self, other)

    def is_identity(self) -> bool:
        return self.image == Poly.x(self.n)

    def __str__(self) -> str:
        return f"x -> {self.image}"


@dataclass(frozen=True)
class GilmerForm:
    """Decomposition ``a + u*x + x^2*f(x)`` of an automorphism image.

    ``u`` is a unit and ``f`` is nilpotent.  The split is read directly off
    the coefficients, so it is unique.
    """

    a: Residue
    u: Residue
    f: Poly

    def image(self) -> Poly:
        n = self.f.n
        return Poly((self.a.value, self.u.value), n) + self.f.shift(2)


def classify(s: Endo) -> GilmerForm | None:
    """Gilmer decomposition of ``s``, or ``None`` if ``s`` is not invertible.

    ``s`` is an automorphism exactly when the coefficient of ``x`` is a unit
    and every coefficient of degree two or more is nilpotent.
    """
    img, n = s.image, s.n
    u = img.coeff(1)
    if math.gcd(u, n) != 1:
        return None
    f = Poly(img.coeffs[2:], n)
    if not is_nilpotent_poly(f):
        return None
    return GilmerForm(Residue(img.coeff(0), n), Residue(u, n), f)


def from_relaxed(b: int, v: int, g: Poly) -> Endo:
    """Build ``x ↦ b + v*x + g`` from the unit-plus-nilpotent form.

    ``g`` may carry nilpotent terms in any degree, including 0 and 1.
    """
    if math.gcd(v, g.n) != 1:
        raise NotInvertible(f"{v} is not a unit mod {g.n}")
    if not is_nilpotent_poly(g):
        raise NotInvertible(f"{g} is not nilpotent")
    return Endo(Poly((b, v), g.n) + g)


def apply(s: Endo, g: Poly) -> Poly:
    """The action ``g ↦ g(s(x))``."""
    return compose(g, s.image)


def compose_endo(s: Endo, t: Endo) -> Endo:
    """``s ∘ t``; its image of ``x`` is ``t.image(s.image)``."""
    if s.n != t.n:
        raise ModulusMismatch(f"Z_{s.n} vs Z_{t.n}")
    return Endo(compose(t.image, s.image))


def invert(s: Endo) -> Endo:
    """Inverse automorphism, by fixed-point iteration on the Gilmer form.

    Solves ``a + u*h + h^2*f(h) = x`` through
    ``h <- u^{-1} (x - a - h^2 f(h))``.  Successive differences pick up a
    nilpotent factor each round, so the iteration is stationary after at
    most the nilpotency index of Z_n rounds.
    """
    form = classify(s)
    if form is None:
        raise NotInvertible(f"{s} is not an automorphism of Z_{s.n}[x]")
    n = s.n
    u_inv = inv_mod(form.u.value, n)
    x = Poly.x(n)
    base = x - form.a.value
    h = base.scale(u_inv)
    for _ in range(nilpotency_index(n) + 2):
        nxt = (base - h * h * compose(form.f, h)).scale(u_inv)
        if nxt == h:
            break
        h = nxt
    else:
        raise InternalCheckFailed(f"inverse iteration for {s} did not settle")
    inv = Endo(h)
    if not (compose_endo(s, inv).is_identity() and compose_endo(inv, s).is_identity()):
        raise InternalCheckFailed(f"computed inverse of {s} fails verification")
    return inv


def power(s: Endo, k: int) -> Endo:
    result = Endo.identity(s.n)
    for _ in range(k):
        result = compose_endo(result, s)
    return result


def order(s: Endo, cap: int | None = None) -> int:
    """Least ``m >= 1`` with ``s^m`` the identity."""
    if classify(s) is None:
        raise NotInvertible(f"{s} is not an automorphism of Z_{s.n}[x]")
    if cap is None:
        cap = 4 * s.n**2
    current = s
    for m in range(1, cap + 1):
        if current.is_identity():
            return m
        current = compose_endo(current, s)
    raise OrderExceedsCap(f"order of {s} exceeds {cap}")


def _power_matrix(image: Poly, k: int) -> np.ndarray:
    """Rows are coefficient vectors of image^0, ..., image^k."""
    n = image.n
    powers = [Poly((1,), n)]
    for _ in range(k):
        powers.append(powers[-1] * image)
    width = max(len(p.coeffs) for p in powers)
    return np.array([p.padded(width) for p in powers], dtype=np.int64)


@functools.lru_cache(maxsize=8)
def _candidate_grid(n: int, length: int) -> np.ndarray:
    """Every coefficient vector of the given length over Z_n, one per row."""
    axes = np.meshgrid(*[np.arange(n, dtype=np.int64)] * length, indexing="ij")
    grid = np.stack([a.ravel() for a in axes], axis=1)
    grid.setflags(write=False)
    return grid


def is_automorphism_bruteforce(s: Endo, deg_cap: int) -> bool:
    """Exhaustive search for a two-sided inverse of degree at most ``deg_cap``.

    Independent of :func:`classify`.  Since ``t ↦ t(s(x))`` is Z_n-linear
    in the coefficients of ``t``, every candidate is evaluated at once as a
    matrix product, one output coefficient at a time so that the candidate
    set shrinks quickly.  Survivors are checked the other way round directly.
    """
    n = s.n
    count = n ** (deg_cap + 1)
    if count > SEARCH_LIMIT:
        raise SearchSpaceTooLarge(f"{count} candidates exceeds {SEARCH_LIMIT}")
    m = _power_matrix(s.image, deg_cap)
    if m.shape[1] < 2:
        return False
    grid = _candidate_grid(n, deg_cap + 1)
    for col in range(m.shape[1]):
        want = 1 if col == 1 else 0
        grid = grid[(grid @ m[:, col]) % n == want]
        if not len(grid):
            return False
    x = Poly.x(n)
    return any(compose(s.image, Poly(tuple(int(c) for c in row), n)) == x for row in grid)


def nonnormality_witness(n: int) -> tuple[Endo, Endo, Endo]:
    """``(α, σ, σ⁻¹ασ)`` with ``α: x ↦ x + 1`` and a non-basic conjugate.

    ``σ: x ↦ x + r x^2 + r x^m`` where ``r`` is the least nonzero element with
    ``r^2 = 0`` and ``m >= 3`` is least with ``m(m-1)/2 * r != 0``.
    """
    check_modulus(n)
    r = next((r for r in range(1, n) if r * r % n == 0), None)
    if r is None:
        raise RingIsReduced(f"Z_{n} has no nonzero nilpotents")
    m = 3
    while m * (m - 1) // 2 * r % n == 0:
        m += 1
    alpha = Endo(Poly((1, 1), n))
    sigma = Endo(Poly.x(n) + Poly.monomial(r, 2, n) + Poly.monomial(r, m, n))
    conj = compose_endo(compose_endo(invert(sigma), alpha), sigma)
    if all(c == 0 for c in conj.image.coeffs[2:]):
        raise InternalCheckFailed(f"conjugate {conj} is basic")
    return alpha, sigma, conj


def witness_parameters(n: int) -> tuple[int, int]:
    """The ``(r, m)`` used by :func:`nonnormality_witness`."""
    _, sigma, _ = nonnormality_witness(n)
    coeffs = sigma.image.coeffs
    return coeffs[2], len(coeffs) - 1


def automorphism_pool(n: int, nil_degree: int) -> list[Endo]:
    """All ``a + u x + x^2 f`` with ``f`` nilpotent of degree ``<= nil_degree - 2``.

    In other words every automorphism whose image has degree at most
    ``nil_degree`` (with the degree-2-and-up part nilpotent).
    """
    nil = [c for c in range(n) if pow(c, n.bit_length(), n) == 0]
    units = [u for u in range(1, n) if math.gcd(u, n) == 1]
    pool = []
    for a in range(n):
        for u in units:
            for tail in itertools.product(nil, repeat=max(nil_degree - 1, 0)):
                pool.append(Endo(Poly((a, u) + tail, n)))
    return pool
