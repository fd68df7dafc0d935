"""Oracle suites: every closed form in the package against a brute-force count.

Each suite yields :class:`Check` records, one per modulus or fixture, so a
caller can stream them as they finish.  ``run`` collects them and reports
whether everything passed.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Callable, Iterator
from dataclasses import dataclass

from . import basicgroup as bg
from . import gz4
from .endos import (
    Endo,
    classify,
    compose_endo,
    invert,
    is_automorphism_bruteforce,
    nonnormality_witness,
)
from .fixedrings import (
    SubgroupSpec,
    classify_z4_subgroup,
    fixed_module,
    identify_z4,
    modules_equal,
    samuel_check,
    span_module,
)
from .polyring import Poly
from .residues import (
    Residue,
    factorize,
    inverse,
    is_nilpotent,
    radical,
    solve_linear,
    unit_in_progression,
)

#: degree cap for the inverse search in the Gilmer suite; over Z_8 some
#: automorphisms of degree 3 have inverses of degree 5
GILMER_INVERSE_CAP = 5
GILMER_MODULI = (4, 6, 8, 9)


@dataclass(frozen=True)
class Check:
    suite: str
    label: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"[{status}] {self.suite}: {self.label}{tail}"


def residues_suite(max_n: int) -> Iterator[Check]:
    for n in range(2, max_n + 1):
        bad = []
        rad = radical(n)
        for v in range(n):
            r = Residue(v, n)
            if math.gcd(v, n) == 1 and inverse(inverse(r)) != r:
                bad.append(f"inverse {v}")
            if is_nilpotent(r) != (v % rad == 0):
                bad.append(f"nilpotent {v}")
            for b in range(n):
                sols = {c.value for c in solve_linear(r, Residue(b, n))}
                if sols != {c for c in range(n) if v * c % n == b}:
                    bad.append(f"solve {v}c={b}")
        for a, b in itertools.product(range(1, n + 1), repeat=2):
            if math.gcd(a, b) == 1 and math.gcd(a + unit_in_progression(a, b, n) * b, n) != 1:
                bad.append(f"progression {a},{b}")
        yield Check("residues", f"n={n}", not bad, "; ".join(bad[:3]))


def gilmer_suite(max_n: int) -> Iterator[Check]:
    for n in (m for m in GILMER_MODULI if m <= max_n):
        disagree = 0
        autos = 0
        # t inverts s exactly when t(x + c) inverts s - c, with the same
        # degree, so the search result only depends on the non-constant part
        searched: dict[tuple[int, ...], bool] = {}
        for coeffs in itertools.product(range(n), repeat=4):
            s = Endo(Poly(coeffs, n))
            verdict = classify(s) is not None
            autos += verdict
            tail = coeffs[1:]
            if tail not in searched:
                searched[tail] = is_automorphism_bruteforce(Endo(Poly((0,) + tail, n)), GILMER_INVERSE_CAP)
            if verdict != searched[tail]:
                disagree += 1
            if verdict:
                t = invert(s)
                if not compose_endo(s, t).is_identity():
                    disagree += 1
        yield Check(
            "gilmer",
            f"n={n}",
            disagree == 0,
            f"{autos} automorphisms among {n ** 4} images, inverse cap {GILMER_INVERSE_CAP}",
        )
    for n in (4, 8, 9):
        if n <= max_n:
            _, _, conj = nonnormality_witness(n)
            yield Check("gilmer", f"non-basic conjugate n={n}", conj.image.degree >= 2, str(conj.image))


def _orbit_label(n: int) -> dict[tuple[int, int], int]:
    label = {}
    for i, orbit in enumerate(bg.conjugation_orbits(n)):
        for elem in orbit:
            label[elem] = i
    return label


def conjugacy_suite(max_n: int) -> Iterator[Check]:
    for n in range(2, max_n + 1):
        label = _orbit_label(n)
        elems = bg.elements(n)
        bad = 0
        for s in elems:
            rep = bg.canonical_rep(s)
            if label[(rep.u, rep.a)] != label[(s.u, s.a)]:
                bad += 1
            for t in elems:
                brute = label[(s.u, s.a)] == label[(t.u, t.a)]
                if bg.are_conjugate(s, t) != brute:
                    bad += 1
                elif brute and bg.conjugate(s, bg.conjugacy_witness(s, t)) != t:
                    bad += 1
        count = len(set(label.values()))
        ok = bad == 0 and count == bg.psi(n) == len(bg.enumerate_classes(n))
        yield Check("conjugacy", f"n={n}", ok, f"{count} classes, {len(elems) ** 2} pairs")
    for n in range(2, max_n + 1):
        pairs = [
            (r, n // r)
            for r in range(2, n)
            if n % r == 0 and math.gcd(r, n // r) == 1 and r < n // r
        ]
        for r, q in pairs:
            ok = bg.psi(n) == bg.psi(r) * bg.psi(q)
            yield Check("conjugacy", f"psi({n}) = psi({r}) psi({q})", ok)
    for p, e in ((p, e) for n in range(2, max_n + 1) for p, e in factorize(n) if p**e == n and e > 1):
        yield Check("conjugacy", f"prime power {p}^{e}", bg.psi_prime_power(p, e) == bg.psi_bruteforce(p**e))


def _z4_fixtures() -> dict[str, list[gz4.GAut4]]:
    A, B = gz4.GAut4.alpha, gz4.GAut4.beta
    return {
        "<a_2>": [A((2,))],
        "<a_2x>": [A((0, 2))],
        "<a_2x+2>": [A((2, 2))],
        "<b_0>": [B()],
        "<b_2>": [B((2,))],
        "<theta>": [B((0, 2))],
        "<b_2y>": [B((0, 2, 2))],
        "<a_2, b_0>": [A((2,)), B()],
        "pool(3)": gz4.pool(3),
    }


def fixedrings_suite(max_n: int, D: int = 8, W: int = 16) -> Iterator[Check]:
    del max_n  # the catalog lives over Z_4 only
    for name, gens in _z4_fixtures().items():
        spec = SubgroupSpec(tuple(g.to_endo() for g in gens))
        verdict = identify_z4(spec, D, W)
        fixed = fixed_module(spec, D)
        monotone = all(modules_equal(fixed.restrict(d), fixed_module(spec, d)) for d in range(D))
        yield Check("fixedrings", f"{name} at D={D}, W={W}", monotone, verdict.label())
    for p, D_p in ((2, 8), (3, 12)):
        yield Check("fixedrings", f"samuel p={p} D={D_p}", samuel_check(p, D_p))
    x = Poly.x(4)
    simple = span_module([x * x, x.scale(2)], 4, 8)
    alpha2 = SubgroupSpec((Endo(Poly((2, 1), 4)),))
    yield Check("fixedrings", "Z_4[x]^<x+2> = Z_4[x^2, 2x] at D=4", modules_equal(fixed_module(alpha2, 4), simple))


def _pool_conjugacy_partition(d: int) -> list[set[gz4.GAut4]]:
    """Orbits of the degree-``d`` pool under conjugation by the degree-``d+1`` pool."""
    conjugators = gz4.pool(d + 1)
    elems = gz4.pool(d)
    seen: set[gz4.GAut4] = set()
    orbits = []
    for s in elems:
        if s in seen:
            continue
        orbit = {gz4.mul_g4(gz4.mul_g4(gz4.inverse_g4(g), s), g) for g in conjugators}
        orbit &= set(elems)
        seen |= orbit
        orbits.append(orbit)
    return orbits


def gz4_suite(max_n: int, d: int = 2) -> Iterator[Check]:
    del max_n
    P = gz4.pool(d)
    law = all(
        gz4.mul_g4(s, t).to_endo() == compose_endo(s.to_endo(), t.to_endo())
        and gz4.conjugate_g4(t, s) == gz4.conjugate_generic(t, s)
        for s in P
        for t in P
    )
    yield Check("gz4", f"group law and conjugation, pool({d})", law, f"{len(P) ** 2} pairs")
    for k in range(1, d + 2):
        Pk = gz4.pool(k)
        center = {s for s in Pk if all(gz4.mul_g4(s, t) == gz4.mul_g4(t, s) for t in Pk)}
        yield Check("gz4", f"center of pool({k}) is A_0", center == {s for s in Pk if gz4.is_central(s)})
    partition = _pool_conjugacy_partition(d)
    agrees = all(
        gz4.are_conjugate_g4(s, t) == any(s in o and t in o for o in partition) for s in P for t in P
    )
    yield Check("gz4", f"conjugacy classes of pool({d})", agrees, f"{len(partition)} classes")
    y, x = gz4.Y, gz4.X
    cases = [
        ("R[x]*", [x], lambda s: s == gz4.IDENTITY),
        ("R[x^2,2x]*", [x * x, x.scale(2)], lambda s: s.is_alpha),
        ("R[y^2,2y]*", [y * y, y.scale(2)], lambda s: True),
    ]
    for f in gz4._nil_polys(d):
        if gz4.in_ry(f):
            target = {gz4.IDENTITY, gz4.GAut4.beta(f.coeffs)}
            cases.append((f"R[y+x({f})]*", [y + x * f], lambda s, t=target: s in t))
    for name, ring, member in cases:
        got = set(gz4.stabilizer(ring, d + 1))
        want = {s for s in gz4.pool(d + 1) if member(s)}
        yield Check("gz4", f"stabilizer {name} in pool({d + 1})", got == want)
    basic = gz4.BASIC_ELEMENTS
    big = gz4.pool(3)
    for sigma in basic:
        b_orbit = {gz4.conjugate_g4(sigma, g) for g in basic}
        g_orbit = {gz4.conjugate_g4(sigma, g) for g in big} & set(basic)
        yield Check("gz4", f"[{sigma}]_B = [{sigma}]_G ∩ B", b_orbit == g_orbit)
    orders = all(
        gz4.order_g4(s) == _order_by_powers(s)
        and (s.is_alpha or (gz4.order_g4(s) == 2) == gz4.in_ry(s.f))
        for s in big
    )
    yield Check("gz4", "element orders, pool(3)", orders)
    _, _, conj = nonnormality_witness(4)
    yield Check("gz4", "conjugate of x+1 outside B_x", gz4.GAut4.from_endo(conj) not in set(basic), str(conj.image))
    for sub in (gz4.closure(gens) for gens in _z4_fixtures().values()):
        if sub.betas:
            alphas = set(sub.alphas)
            normal = all(gz4.conjugate_g4(a, g) in alphas for a in alphas for g in sub)
            case, _ = classify_z4_subgroup(sub)
            yield Check("gz4", f"A normal of index 2 in subgroup of order {len(sub)}", normal and 2 * len(alphas) == len(sub), case.value)


def _order_by_powers(s: gz4.GAut4) -> int:
    p, k = s, 1
    while p != gz4.IDENTITY:
        p, k = gz4.mul_g4(p, s), k + 1
    return k


SUITES: dict[str, Callable[[int], Iterator[Check]]] = {
    "residues": residues_suite,
    "gilmer": gilmer_suite,
    "conjugacy": conjugacy_suite,
    "fixedrings": fixedrings_suite,
    "gz4": gz4_suite,
}


def run(suite: str, max_n: int, emit: Callable[[str], None] = print) -> bool:
    """Run one suite (or ``"all"``), emitting a line per check; return overall success."""
    names = list(SUITES) if suite == "all" else [suite]
    ok = True
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
        for check in SUITES[name](max_n):
            emit(check.line())
            ok &= check.ok
    return ok
