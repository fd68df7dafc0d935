"""The automorphism group G(Z_4) of Z_4[x].

Every automorphism of Z_4[x] is one of

* ``α_f : x ↦ x + f``
* ``β_f : x ↦ -x + 1 + f``

with ``f`` nilpotent, i.e. every coefficient of ``f`` is 0 or 2.  Products
are written left-to-right as composition of maps, ``st = s ∘ t`` (see
:func:`ringauto.endos.compose_endo`).  Under that reading the closed-form
law is

    α_g α_h = α_{g+h}      β_g β_h = α_{g+h'}
    α_g β_h = β_{g+h}      β_g α_h = β_{g+h'}

where ``h' = h(-x + 1)``.  The test suite pins this against endomorphism
composition on every pair of a finite pool.

The law never raises the degree of ``f``, so for each ``d`` the elements
with ``deg f <= d`` form a finite subgroup, the *degree-d pool*.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .endos import SEARCH_LIMIT, Endo, apply, classify
from .errors import BadInput, NotZ4, SearchSpaceTooLarge
from .polyring import Poly, compose

N = 4
X = Poly.x(N)
ONE_MINUS_X = Poly((1, -1), N)
#: y = x(-x + 1); the prime map fixes exactly Z_4[y]
Y = X * ONE_MINUS_X

ALPHA, BETA = "alpha", "beta"


def prime(f: Poly) -> Poly:
    """``f(-x + 1)``; an involution that fixes exactly Z_4[y]."""
    if f.n != N:
        raise NotZ4(f"expected a polynomial over Z_4, got Z_{f.n}")
    return compose(f, ONE_MINUS_X)


def in_ry(h: Poly) -> bool:
    return prime(h) == h


@dataclass(frozen=True)
class GAut4:
    kind: str
    f: Poly

    def __post_init__(self) -> None:
        if self.kind not in (ALPHA, BETA):
            raise BadInput(f"kind must be 'alpha' or 'beta', got {self.kind!r}")
        if self.f.n != N:
            raise NotZ4(f"f must live in Z_4[x], got Z_{self.f.n}[x]")
        if any(c % 2 for c in self.f.coeffs):
            raise BadInput(f"f = {self.f} is not nilpotent")

    @classmethod
    def alpha(cls, coeffs=()) -> GAut4:
        return cls(ALPHA, Poly(tuple(coeffs), N))

    @classmethod
    def beta(cls, coeffs=()) -> GAut4:
        return cls(BETA, Poly(tuple(coeffs), N))

    @property
    def is_alpha(self) -> bool:
        return self.kind == ALPHA

    def to_endo(self) -> Endo:
        if self.is_alpha:
            return Endo(X + self.f)
        return Endo(ONE_MINUS_X + self.f)

    @classmethod
    def from_endo(cls, s: Endo) -> GAut4:
        """Read ``α_f``/``β_f`` off an automorphism of Z_4[x].

        Alphas have an even constant term, betas an odd one.
        """
        if s.n != N:
            raise NotZ4(f"expected an endomorphism of Z_4[x], got Z_{s.n}[x]")
        if classify(s) is None:
            raise BadInput(f"{s} is not an automorphism")
        if s.image.coeff(0) % 2 == 0:
            return cls(ALPHA, s.image - X)
        return cls(BETA, s.image - ONE_MINUS_X)

    def sort_key(self) -> tuple:
        return (self.kind == BETA, len(self.f.coeffs), self.f.coeffs)

    def to_json(self) -> dict:
        return {"kind": self.kind, "f": self.f.to_list()}

    @classmethod
    def from_json(cls, data: dict) -> GAut4:
        return cls(data["kind"], Poly(tuple(data["f"]), N))

    def __mul__(self, other: GAut4) -> GAut4:
        return mul_g4(self, other)

    def __str__(self) -> str:
        sym = "α" if self.is_alpha else "β"
        return f"{sym}_{{{self.f}}}"


IDENTITY = GAut4.alpha()


def mul_g4(s: GAut4, t: GAut4) -> GAut4:
    """``s t = s ∘ t`` by the closed-form law."""
    g, h = s.f, t.f
    if s.is_alpha and t.is_alpha:
        return GAut4(ALPHA, g + h)
    if not s.is_alpha and not t.is_alpha:
        return GAut4(ALPHA, g + prime(h))
    if s.is_alpha:
        return GAut4(BETA, g + h)
    return GAut4(BETA, g + prime(h))


def inverse_g4(s: GAut4) -> GAut4:
    # α_f has order <= 2; β_f β_{f'} = α_{f + f''} = α_{2f} = α_0
    return s if s.is_alpha else GAut4(BETA, prime(s.f))


def conjugate_g4(t: GAut4, s: GAut4) -> GAut4:
    """``s⁻¹ t s`` from the closed conjugation formulas."""
    g, h = s.f, t.f
    if t.is_alpha:
        return t if s.is_alpha else GAut4(ALPHA, prime(h))
    if s.is_alpha:
        return GAut4(BETA, prime(g) + h + g)
    return GAut4(BETA, g + prime(h) + prime(g))


def conjugate_generic(t: GAut4, s: GAut4) -> GAut4:
    return mul_g4(mul_g4(inverse_g4(s), t), s)


def is_central(s: GAut4) -> bool:
    return s.is_alpha and in_ry(s.f)


def are_conjugate_g4(s: GAut4, t: GAut4) -> bool:
    """Conjugacy in the whole group G(Z_4).

    Alphas and betas never meet.  ``α_g`` is conjugate only to ``α_g`` and
    ``α_{g'}``; ``β_g`` and ``β_h`` are conjugate iff ``g - h`` or ``g - h'``
    lies in Z_4[y].
    """
    if s.kind != t.kind:
        return False
    if s.is_alpha:
        return t.f == s.f or t.f == prime(s.f)
    return in_ry(s.f - t.f) or in_ry(s.f - prime(t.f))


def order_g4(s: GAut4) -> int:
    if s.is_alpha:
        return 1 if s.f.is_zero() else 2
    return 2 if in_ry(s.f) else 4


# -- subgroups ---------------------------------------------------------------


@dataclass(frozen=True)
class GSubgroup:
    """A finite subgroup of G(Z_4), stored as a sorted tuple of elements."""

    elements: tuple[GAut4, ...]

    def __post_init__(self) -> None:
        elems = tuple(sorted(set(self.elements), key=GAut4.sort_key))
        object.__setattr__(self, "elements", elems)
        members = set(elems)
        if IDENTITY not in members:
            raise BadInput("subgroup must contain the identity")
        for s in elems:
            for t in elems:
                if mul_g4(s, t) not in members:
                    raise BadInput(f"not closed: {s} * {t} is missing")

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, s: GAut4) -> bool:
        return s in set(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def alphas(self) -> list[GAut4]:
        return [s for s in self.elements if s.is_alpha]

    @property
    def betas(self) -> list[GAut4]:
        return [s for s in self.elements if not s.is_alpha]

    def max_degree(self):
        return max((s.f.degree for s in self.elements), default=-1)

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.elements]


def closure(gens) -> GSubgroup:
    """Subgroup generated by ``gens``."""
    found = {IDENTITY}
    frontier = [IDENTITY]
    gens = list(gens)
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                t = mul_g4(s, g)
                if t not in found:
                    found.add(t)
                    nxt.append(t)
        frontier = nxt
    return GSubgroup(tuple(found))


def _nil_polys(d: int) -> list[Poly]:
    return [Poly(tuple(2 * b for b in bits), N) for bits in itertools.product((0, 1), repeat=d + 1)]


def pool(d: int) -> list[GAut4]:
    """All α_f and β_f with ``deg f <= d``, in a fixed order."""
    size = 2 ** (d + 2)
    if size > SEARCH_LIMIT:
        raise SearchSpaceTooLarge(f"degree-{d} pool has {size} elements")
    fs = _nil_polys(d)
    elems = [GAut4(ALPHA, f) for f in fs] + [GAut4(BETA, f) for f in fs]
    return sorted(elems, key=GAut4.sort_key)


def stabilizer(ring_gens, d: int) -> GSubgroup:
    """Pool elements that fix every polynomial in ``ring_gens``."""
    gens = list(ring_gens)
    fixing = [s for s in pool(d) if all(apply(s.to_endo(), g) == g for g in gens)]
    return GSubgroup(tuple(fixing))


#: B_x(Z_4), the eight basic automorphisms
BASIC_ELEMENTS = (
    GAut4.alpha(),
    GAut4.alpha((2,)),
    GAut4.alpha((0, 2)),
    GAut4.alpha((2, 2)),
    GAut4.beta(),
    GAut4.beta((2,)),
    GAut4.beta((0, 2)),
    GAut4.beta((2, 2)),
)


def in_basic_union(s: GAut4, d: int = 3) -> bool:
    """Whether ``s`` lies in some B_z(Z_4) with Z_4[z] = Z_4[x].

    Equivalent to ``s`` being conjugate to a basic automorphism.  Conjugators
    are searched in the pool of degree ``max(d, deg f + 1)``: the map
    ``g ↦ g + g'`` lowers degree by one, so moving ``β_f`` onto a basic
    element can need a conjugator one degree above ``f``.
    """
    basic = set(BASIC_ELEMENTS)
    reach = max(d, s.f.degree + 1) if not s.f.is_zero() else d
    return any(conjugate_g4(s, g) in basic for g in pool(reach))


def conjugacy_classes(d: int) -> list[list[GAut4]]:
    """Partition of the degree-``d`` pool by :func:`are_conjugate_g4`."""
    classes: list[list[GAut4]] = []
    for s in pool(d):
        for cls in classes:
            if are_conjugate_g4(cls[0], s):
                cls.append(s)
                break
        else:
            classes.append([s])
    return classes


def parse_element(text: str) -> GAut4:
    """Parse ``alpha:[0,2]`` or ``beta:[2]``."""
    kind, sep, coeffs = text.strip().partition(":")
    if not sep or kind not in (ALPHA, BETA):
        raise ValueError(f"expected '<alpha|beta>:[coeffs]', got {text!r}")
    try:
        data = json.loads(coeffs)
    except json.JSONDecodeError:
        raise ValueError(f"malformed coefficient list in {text!r}") from None
    if not isinstance(data, list) or not all(isinstance(c, int) for c in data):
        raise ValueError(f"malformed coefficient list in {text!r}")
    return GAut4(kind, Poly(tuple(data), N))
