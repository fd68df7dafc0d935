"""Degree-truncated invariant subrings of Z_n[x].

Everything here works in the Z_n-module of polynomials of degree at most
``D``.  Coefficient vectors are laid out from the highest degree down, so
the Howell pivot of a row is the leading term of the polynomial it stands
for.  A :class:`CoeffModule` is therefore canonical: two modules are equal
iff their bases are identical.

Fixed modules are exact (σ(g) = g as full polynomials).  Spans of subring
generators are taken over all products of formal degree at most a work
bound ``W`` and then cut down to degree ``D``; ``W > D`` catches products
whose leading terms cancel mod n.  Equality of a fixed module with a span
is a statement about the pair ``(D, W)``, not a proof of ring equality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from . import gz4
from .basicgroup import elements
from .endos import SEARCH_LIMIT, Endo, apply, classify
from .errors import (
    BadInput,
    BoundMismatch,
    InconsistentWithCatalog,
    InternalCheckFailed,
    ModulusMismatch,
    NotAGroup,
    NotZ4,
    SearchSpaceTooLarge,
)
from .howell import contains as _contains
from .howell import howell_form, kernel
from .polyring import Poly, parse_poly


def _row(p: Poly, D: int) -> list[int]:
    return [p.coeff(D - j) for j in range(D + 1)]


def _poly(row: list[int], n: int) -> Poly:
    return Poly(tuple(reversed(row)), n)


@dataclass(frozen=True)
class CoeffModule:
    n: int
    degree_bound: int
    basis: tuple[Poly, ...]

    @classmethod
    def from_polys(cls, polys, n: int, D: int) -> CoeffModule:
        rows = []
        for p in polys:
            if p.n != n:
                raise ModulusMismatch(f"Z_{p.n}[x] vs Z_{n}[x]")
            if not p.is_zero() and p.degree > D:
                raise BadInput(f"{p} exceeds degree bound {D}")
            rows.append(_row(p, D))
        hf = howell_form(rows, n, D + 1)
        return cls(n, D, tuple(_poly(r, n) for r in hf))

    def rows(self) -> list[list[int]]:
        return [_row(p, self.degree_bound) for p in self.basis]

    def __contains__(self, p: Poly) -> bool:
        if not p.is_zero() and p.degree > self.degree_bound:
            return False
        return _contains(self.rows(), _row(p, self.degree_bound), self.n)

    def restrict(self, D: int) -> CoeffModule:
        """Intersection with the polynomials of degree at most ``D``."""
        if D > self.degree_bound:
            raise BoundMismatch(f"cannot restrict degree {self.degree_bound} to {D}")
        # Howell property: rows led at degree <= D span the whole intersection
        keep = [p for p in self.basis if p.degree <= D]
        return CoeffModule.from_polys(keep, self.n, D)

    def size(self) -> int:
        """Number of elements, from the pivots of the Howell basis."""
        total = 1
        for r in self.rows():
            piv = next(v for v in r if v)
            total *= self.n // piv
        return total

    def to_json(self) -> dict:
        return {
            "modulus": self.n,
            "degree_bound": self.degree_bound,
            "basis": [p.to_list() for p in self.basis],
        }

    @classmethod
    def from_json(cls, data: dict) -> CoeffModule:
        n, D = data["modulus"], data["degree_bound"]
        return cls.from_polys([Poly(tuple(c), n) for c in data["basis"]], n, D)


@dataclass(frozen=True)
class SubgroupSpec:
    """A group of automorphisms given by generators."""

    generators: tuple[Endo, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        for s in self.generators:
            if classify(s) is None:
                raise BadInput(f"{s} is not an automorphism")
        if len({s.n for s in self.generators}) > 1:
            raise ModulusMismatch("generators live over different moduli")


def fixed_module(H: SubgroupSpec, D: int, n: int | None = None) -> CoeffModule:
    """Polynomials of degree at most ``D`` fixed exactly by every generator.

    Solved as the kernel over Z_n of ``g ↦ (σ(g) - g)`` for all generators σ
    stacked together; each basis element is re-checked by direct application.
    """
    if H.generators:
        n = H.generators[0].n
    elif n is None:
        raise BadInput("a modulus is needed when H has no generators")
    width = D * max((max(s.image.degree, 1) for s in H.generators), default=1) + 1
    cols = width * len(H.generators)
    if (D + 1) * (cols + D + 1) > SEARCH_LIMIT:
        raise SearchSpaceTooLarge(f"fixed-module system of size {(D + 1)} x {cols}")
    images = [[] for _ in range(D + 1)]
    for s in H.generators:
        power = Poly((1,), n)
        for i in range(D + 1):
            diff = power - Poly.monomial(1, i, n)
            images[i].extend(diff.padded(width))
            power = power * s.image
    if cols:
        ker = kernel(images, n)
        polys = [Poly(tuple(v), n) for v in ker]
    else:
        polys = [Poly.monomial(1, i, n) for i in range(D + 1)]
    module = CoeffModule.from_polys(polys, n, D)
    for b in module.basis:
        for s in H.generators:
            if apply(s, b) != b:
                raise InternalCheckFailed(f"basis element {b} is moved by {s}")
    return module


def _products(gens: list[Poly], W: int):
    degs = [g.degree for g in gens]
    n = gens[0].n

    def walk(i: int, budget: int, acc: Poly):
        if i == len(gens):
            yield acc
            return
        p = acc
        spent = 0
        while spent <= budget:
            yield from walk(i + 1, budget - spent, p)
            p = p * gens[i]
            spent += degs[i]

    yield from walk(0, W, Poly((1,), n))


def span_module(gens, D: int, W: int | None = None, n: int | None = None) -> CoeffModule:
    """Slice at degree ``D`` of the Z_n-span of generator products of formal degree ``<= W``."""
    gens = list(gens)
    if W is None:
        W = 2 * D
    if W < D:
        raise BadInput(f"work bound {W} is below degree bound {D}")
    if gens:
        n = gens[0].n
    elif n is None:
        raise BadInput("a modulus is needed when there are no generators")
    if any(g.n != n for g in gens):
        raise ModulusMismatch("generators live over different moduli")
    # constants only rescale products that are already spanned
    live = [g for g in gens if not g.is_constant()]
    prods = list(_products(live, W)) if live else [Poly((1,), n)]
    rows = [_row(p, W) for p in prods]
    hf = howell_form(rows, n, W + 1)
    low = [_poly(r, n) for r in hf if next(i for i, v in enumerate(r) if v) >= W - D]
    return CoeffModule.from_polys(low, n, D)


def modules_equal(m1: CoeffModule, m2: CoeffModule) -> bool:
    if m1.n != m2.n or m1.degree_bound != m2.degree_bound:
        raise BoundMismatch(
            f"(n={m1.n}, D={m1.degree_bound}) vs (n={m2.n}, D={m2.degree_bound})"
        )
    return m1.basis == m2.basis


# -- Z_4 catalog -------------------------------------------------------------


class Z4Case(Enum):
    FULL_RING = "FullRing"
    X2_2X = "X2_2X"
    Y2_2Y = "Y2_2Y"
    Y_PLUS_XF = "YPlusXF"


@dataclass(frozen=True)
class Z4Verdict:
    case: Z4Case
    f: Poly | None
    ring_generators: tuple[Poly, ...]
    subgroup: gz4.GSubgroup
    degree_bound: int
    work_bound: int

    def label(self) -> str:
        if self.case is Z4Case.Y_PLUS_XF:
            return f"{self.case.value}({self.f})"
        return self.case.value


def catalog_generators(case: Z4Case, f: Poly | None = None) -> tuple[Poly, ...]:
    x, y = gz4.X, gz4.Y
    if case is Z4Case.FULL_RING:
        return (x,)
    if case is Z4Case.X2_2X:
        return (x * x, x.scale(2))
    if case is Z4Case.Y2_2Y:
        return (y * y, y.scale(2))
    return (y + x * f,)


def classify_z4_subgroup(H: gz4.GSubgroup) -> tuple[Z4Case, Poly | None]:
    """Catalog case of a subgroup, decided from its group structure alone."""
    if not H.betas:
        return (Z4Case.FULL_RING if len(H) == 1 else Z4Case.X2_2X), None
    if len(H.alphas) > 1:
        return Z4Case.Y2_2Y, None
    (beta,) = H.betas
    if not gz4.in_ry(beta.f):
        raise InternalCheckFailed(f"{beta} generates a subgroup meeting A only trivially but has order 4")
    return Z4Case.Y_PLUS_XF, beta.f


def identify_z4(H: SubgroupSpec, D: int, W: int | None = None) -> Z4Verdict:
    """Catalog verdict for ``Z_4[x]^H``, cross-checked by linear algebra at ``(D, W)``."""
    if W is None:
        W = 2 * D
    if any(s.n != 4 for s in H.generators):
        raise NotZ4("identify_z4 needs automorphisms of Z_4[x]")
    group = gz4.closure(gz4.GAut4.from_endo(s) for s in H.generators)
    case, f = classify_z4_subgroup(group)
    gens = catalog_generators(case, f)
    fixed = fixed_module(H, D, n=4)
    spanned = span_module(gens, D, W)
    if not modules_equal(fixed, spanned):
        raise InconsistentWithCatalog(
            f"fixed module of H differs from catalog ring {case.value} at D={D}, W={W}"
        )
    return Z4Verdict(case, f, gens, group, D, W)


# -- norms and the Z_p check ---------------------------------------------------


def norm_of_x(H) -> Poly:
    """``prod(u_h x + a_h)`` over a finite group of basic automorphisms."""
    H = list(H)
    if not H:
        raise NotAGroup("empty set of automorphisms")
    n = H[0].n
    members = set(H)
    if len(members) != len(H):
        raise NotAGroup("repeated elements")
    for s in H:
        if s.n != n:
            raise ModulusMismatch("elements over different moduli")
        for t in H:
            if s * t not in members:
                raise NotAGroup(f"{s} * {t} leaves the set")
    result = Poly((1,), n)
    for s in H:
        result = result * Poly((s.a, s.u), n)
    return result


def basic_group_spec(n: int) -> SubgroupSpec:
    return SubgroupSpec(tuple(s.to_endo() for s in elements(n)))


def samuel_generator(p: int) -> Poly:
    x = Poly.x(p)
    return (x**p - x) ** (p - 1)


def samuel_check(p: int, D: int) -> bool:
    """Whether Z_p[x]^{B(Z_p)} and Z_p[(x^p - x)^(p-1)] agree up to degree ``D``."""
    if p not in (2, 3, 5):
        raise BadInput(f"samuel_check supports p in {{2, 3, 5}}, got {p}")
    fixed = fixed_module(basic_group_spec(p), D)
    return modules_equal(fixed, span_module([samuel_generator(p)], D, D))


def parse_poly_list(text: str, n: int) -> list[Poly]:
    """Parse ``"[c0,c1];[c0];..."``."""
    parts = [t for t in text.split(";") if t.strip()]
    return [parse_poly(t, n) for t in parts]


def module_from_text(text: str) -> CoeffModule:
    return CoeffModule.from_json(json.loads(text))


__all__ = [
    "CoeffModule",
    "SubgroupSpec",
    "Z4Case",
    "Z4Verdict",
    "fixed_module",
    "span_module",
    "modules_equal",
    "identify_z4",
    "catalog_generators",
    "classify_z4_subgroup",
    "norm_of_x",
    "samuel_check",
    "samuel_generator",
    "basic_group_spec",
    "parse_poly_list",
]
