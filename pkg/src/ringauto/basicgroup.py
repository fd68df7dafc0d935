"""The group B(Z_n) of basic automorphisms ``x ↦ u*x + a``.

Elements are pairs ``(u, a)`` with the semidirect-product law
``(u, a)·(v, b) = (uv, va + b)``, which is composition ``s ∘ t`` of the
corresponding endomorphisms.  Two elements are conjugate exactly when they
share ``u`` and the same ``gcd(u - 1, a, n)``; the canonical representative
of a class is ``(u, gcd(u - 1, a, n))``, so the identity is written with
``a = n``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .endos import SEARCH_LIMIT, Endo
from .errors import (
    BadFactorization,
    BadInput,
    InternalCheckFailed,
    ModulusMismatch,
    SearchSpaceTooLarge,
)
from .polyring import Poly
from .residues import (
    Residue,
    check_modulus,
    euler_phi,
    factorize,
    gcd_all,
    solve_linear,
    units,
)


@dataclass(frozen=True, order=True)
class BasicAut:
    u: int
    a: int
    n: int

    def __post_init__(self) -> None:
        check_modulus(self.n)
        object.__setattr__(self, "u", self.u % self.n)
        object.__setattr__(self, "a", self.a % self.n)
        if math.gcd(self.u, self.n) != 1:
            raise BadInput(f"u={self.u} is not a unit mod {self.n}")

    @classmethod
    def identity(cls, n: int) -> BasicAut:
        return cls(1, 0, n)

    @classmethod
    def from_endo(cls, s: Endo) -> BasicAut:
        if s.image.degree > 1:
            raise BadInput(f"{s} is not basic")
        return cls(s.image.coeff(1), s.image.coeff(0), s.n)

    def to_endo(self) -> Endo:
        return Endo(Poly((self.a, self.u), self.n))

    def __mul__(self, other: BasicAut) -> BasicAut:
        return mul(self, other)

    def __str__(self) -> str:
        return f"{self.u}*x+{self.a}"


@dataclass(frozen=True)
class ConjClass:
    rep: BasicAut
    size: int

    def __str__(self) -> str:
        return f"{self.rep.u}*x+{display_a(self.rep)}"


def display_a(rep: BasicAut) -> int:
    """Canonical ``a`` in [1, n]; ``n`` stands for 0."""
    return rep.a or rep.n


def mul(s: BasicAut, t: BasicAut) -> BasicAut:
    if s.n != t.n:
        raise ModulusMismatch(f"Z_{s.n} vs Z_{t.n}")
    return BasicAut(s.u * t.u, t.u * s.a + t.a, s.n)


def inverse(s: BasicAut) -> BasicAut:
    u_inv = pow(s.u, -1, s.n)
    return BasicAut(u_inv, -u_inv * s.a, s.n)


def conjugate(s: BasicAut, g: BasicAut) -> BasicAut:
    """``g⁻¹ s g``."""
    return mul(mul(inverse(g), s), g)


def class_invariant(s: BasicAut) -> int:
    return gcd_all([s.u - 1, s.a], s.n)


def are_conjugate(s: BasicAut, t: BasicAut) -> bool:
    if s.n != t.n:
        raise ModulusMismatch(f"Z_{s.n} vs Z_{t.n}")
    return s.u == t.u and class_invariant(s) == class_invariant(t)


def conjugacy_witness(s: BasicAut, t: BasicAut) -> BasicAut | None:
    """A ``g = (w, c)`` with ``g⁻¹ s g = t``, or ``None`` if none exists.

    Scans units ``w`` upward and takes the least ``c`` solving
    ``w*a = (v - 1)*c + b``.
    """
    if s.n != t.n:
        raise ModulusMismatch(f"Z_{s.n} vs Z_{t.n}")
    if s.u != t.u:
        return None
    n = s.n
    for w in units(n):
        sols = solve_linear(Residue(t.u - 1, n), Residue(w * s.a - t.a, n))
        if sols:
            g = BasicAut(w, sols[0].value, n)
            if conjugate(s, g) != t:
                raise InternalCheckFailed(f"witness {g} does not conjugate {s} to {t}")
            return g
    return None


def canonical_rep(s: BasicAut) -> BasicAut:
    """``(u, gcd(u - 1, a, n))``; ``a ≡ 0`` only occurs for the identity."""
    return BasicAut(s.u, class_invariant(s), s.n)


def elements(n: int) -> list[BasicAut]:
    return [BasicAut(u, a, n) for u in units(n) for a in range(n)]


def group_order(n: int) -> int:
    return n * euler_phi(n)


def _guard(n: int, count: int) -> None:
    if count > SEARCH_LIMIT:
        raise SearchSpaceTooLarge(f"B(Z_{n}) enumeration needs {count} steps")


def _sort_key(rep: BasicAut) -> tuple[int, int]:
    return rep.u, display_a(rep)


def enumerate_classes(n: int) -> list[ConjClass]:
    """All conjugacy classes, partitioned by canonical representative."""
    check_modulus(n)
    _guard(n, group_order(n))
    sizes = Counter(canonical_rep(s) for s in elements(n))
    return [ConjClass(rep, sizes[rep]) for rep in sorted(sizes, key=_sort_key)]


def psi_prime_power(p: int, e: int) -> int:
    return (p ** (e - 1) - 1) // (p - 1) + p**e


def psi(n: int) -> int:
    """Number of conjugacy classes of B(Z_n), from the factorization of n."""
    return math.prod(psi_prime_power(p, e) for p, e in factorize(n))


def conjugation_orbits(n: int) -> list[list[tuple[int, int]]]:
    """Orbits of B(Z_n) under conjugation, computed straight from the group law.

    Every ``g⁻¹ s g`` is formed for every pair; no gcd criterion is used.
    """
    check_modulus(n)
    order = group_order(n)
    # candidates per orbit: one conjugator per group element
    _guard(n, order)
    us = np.array(units(n), dtype=np.int64)
    w = np.repeat(us, n)
    c = np.tile(np.arange(n, dtype=np.int64), len(us))
    # g⁻¹ = (w⁻¹, -w⁻¹ c)
    w_inv = np.array([pow(int(v), -1, n) for v in w], dtype=np.int64)
    gi_u, gi_a = w_inv, (-w_inv * c) % n
    label = {}
    orbits = []
    for u in us.tolist():
        for a in range(n):
            if (u, a) in label:
                continue
            # (g⁻¹·s) then ·g, both via (u,a)(v,b) = (uv, va + b)
            m_u, m_a = (gi_u * u) % n, (u * gi_a + a) % n
            r_u, r_a = (m_u * w) % n, (w * m_a + c) % n
            orbit = sorted(set(zip(r_u.tolist(), r_a.tolist())))
            for elem in orbit:
                label[elem] = len(orbits)
            orbits.append(orbit)
    return orbits


def psi_bruteforce(n: int) -> int:
    return len(conjugation_orbits(n))


def crt_split(s: BasicAut, r: int, q: int) -> tuple[BasicAut, BasicAut]:
    """Image of ``s`` under B(Z_{rq}) → B(Z_r) × B(Z_q)."""
    if r * q != s.n or math.gcd(r, q) != 1 or r < 2 or q < 2:
        raise BadFactorization(f"{r} * {q} is not a coprime factorization of {s.n}")
    return BasicAut(s.u, s.a, r), BasicAut(s.u, s.a, q)


def crt_join(s: BasicAut, t: BasicAut) -> BasicAut:
    """Inverse of :func:`crt_split`."""
    r, q = s.n, t.n
    if math.gcd(r, q) != 1:
        raise BadFactorization(f"{r} and {q} are not coprime")
    n = r * q
    e_r = q * pow(q, -1, r)
    e_q = r * pow(r, -1, q)
    return BasicAut(s.u * e_r + t.u * e_q, s.a * e_r + t.a * e_q, n)


def classes_payload(n: int) -> dict:
    classes = enumerate_classes(n)
    return {
        "modulus": n,
        "group_order": group_order(n),
        "count": len(classes),
        "classes": [{"u": c.rep.u, "a": display_a(c.rep), "size": c.size} for c in classes],
    }


def classes_to_json(n: int) -> str:
    return json.dumps(classes_payload(n))


def classes_to_csv(n: int) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["u", "a", "size"])
    for c in classes_payload(n)["classes"]:
        writer.writerow([c["u"], c["a"], c["size"]])
    return buf.getvalue()


def classes_from_payload(payload: dict) -> list[ConjClass]:
    n = payload["modulus"]
    return [ConjClass(BasicAut(c["u"], c["a"], n), c["size"]) for c in payload["classes"]]


def parse_elem(text: str, n: int) -> BasicAut:
    """Parse ``"u,a"``."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'u,a', got {text!r}")
    try:
        u, a = (int(p) for p in parts)
    except ValueError:
        raise ValueError(f"expected integers in {text!r}") from None
    return BasicAut(u, a, n)
